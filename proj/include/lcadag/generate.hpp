// Copyright 2026 The lcadag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exhaustive and seeded random instances.
//
// Every exhaustive stream is index-addressable: instance i is a pure function
// of (parameters, i), so a range [begin, end) can be handed to a worker and
// the results merged in index order.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lcadag/bitset.hpp"
#include "lcadag/combinatorics.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/lca_props.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transit.hpp"

namespace lcadag {

inline constexpr int kMaxEnumeratedElements = 4;
inline constexpr int kMaxEnumeratedVertices = 6;

// "a", "b", ... for small instances, "v0", "v1", ... beyond 26.
inline std::string element_label(std::size_t i, std::size_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('a' + i));
  return "v" + std::to_string(i);
}

inline std::vector<std::string> element_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_label(i, n));
  return out;
}

namespace detail {

inline void require_bound(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi)
    throw Error(ErrorCode::BoundExceeded,
                std::string(what) + " = " + std::to_string(value) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
}

inline std::size_t bounded(int value, int lo, int hi, const char* what) {
  require_bound(value, lo, hi, what);
  return static_cast<std::size_t>(value);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Set systems over the ground set {a, b, ...}.

enum class SetScope { all, clustering };

class SetSystemEnumeration {
 public:
  SetSystemEnumeration(int n, SetScope scope, int max_n = kMaxEnumeratedElements)
      : ground_(element_labels(detail::bounded(n, 1, max_n, "n"))), scope_(scope) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = 1; m <= full; ++m) {
      bool forced = std::popcount(m) == 1 || m == full;
      if (scope == SetScope::clustering && forced)
        forced_.push_back(m);
      else
        optional_.push_back(m);
    }
  }

  // `all` excludes the empty family.
  std::uint64_t size() const {
    std::uint64_t choices = std::uint64_t{1} << optional_.size();
    return scope_ == SetScope::all ? choices - 1 : choices;
  }

  SetSystem at(std::uint64_t i) const {
    if (scope_ == SetScope::all) ++i;
    std::vector<Subset> members;
    for (std::uint64_t m : forced_) members.push_back(Subset::from_mask(ground_.size(), m));
    for (std::size_t b = 0; b < optional_.size(); ++b)
      if ((i >> b) & 1) members.push_back(Subset::from_mask(ground_.size(), optional_[b]));
    return SetSystem(ground_, std::move(members));
  }

  const GroundSet& ground() const { return ground_; }

 private:
  GroundSet ground_;
  SetScope scope_;
  std::vector<std::uint64_t> forced_;
  std::vector<std::uint64_t> optional_;
};

template <typename F>
void enumerate_set_systems(int n, SetScope scope, F&& f) {
  SetSystemEnumeration e(n, scope);
  for (std::uint64_t i = 0; i < e.size(); ++i) f(e.at(i));
}

inline std::vector<SetSystem> all_set_systems(int n, SetScope scope) {
  std::vector<SetSystem> out;
  enumerate_set_systems(n, scope, [&](SetSystem s) { out.push_back(std::move(s)); });
  return out;
}

// ---------------------------------------------------------------------------
// Labeled DAGs on exactly n vertices {a, b, ...}.
//
// Index i is read in base 3, one digit per vertex pair (u < v): 0 = no edge,
// 1 = u -> v, 2 = v -> u. Cyclic orientations are skipped by at().

struct DagFilter {
  bool network = false;
  bool pcc = false;
};

class DagEnumeration {
 public:
  explicit DagEnumeration(int n, DagFilter filter = {}, int max_vertices = kMaxEnumeratedVertices)
      // 3^36 codes for 9 vertices still fit in 64 bits.
      : n_(detail::bounded(n, 1, std::min(max_vertices, 9), "vertices")), filter_(filter), labels_(element_labels(n_)) {
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) pairs_.emplace_back(u, v);
    size_ = 1;
    for (std::size_t i = 0; i < pairs_.size(); ++i) size_ *= 3;
  }

  // Number of orientation codes, acyclic or not.
  std::uint64_t size() const { return size_; }

  // The DAG with code i, or nothing if the code is cyclic or filtered out.
  std::optional<Dag> at(std::uint64_t i) const {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::uint32_t out[32] = {};
    for (const auto& [u, v] : pairs_) {
      switch (i % 3) {
        case 1:
          edges.emplace_back(u, v);
          out[u] |= 1u << v;
          break;
        case 2:
          edges.emplace_back(v, u);
          out[v] |= 1u << u;
          break;
        default:
          break;
      }
      i /= 3;
    }
    if (!acyclic(out)) return std::nullopt;
    Dag g = Dag::from_indices(labels_, std::move(edges));
    if (filter_.network && !g.is_network()) return std::nullopt;
    if (filter_.pcc && !has_pcc(g)) return std::nullopt;
    return g;
  }

 private:
  bool acyclic(const std::uint32_t* out) const {
    std::uint32_t remaining = (n_ == 32) ? ~0u : ((1u << n_) - 1);
    while (remaining) {
      std::uint32_t sinks = 0;
      for (std::uint32_t r = remaining; r; r &= r - 1) {
        unsigned v = static_cast<unsigned>(std::countr_zero(r));
        if ((out[v] & remaining) == 0) sinks |= 1u << v;
      }
      if (!sinks) return false;
      remaining &= ~sinks;
    }
    return true;
  }

  std::size_t n_;
  DagFilter filter_;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::uint64_t size_ = 1;
};

// All labeled DAGs with exactly max_vertices vertices, in code order.
template <typename F>
void enumerate_dags(int max_vertices, DagFilter filter, F&& f) {
  DagEnumeration e(max_vertices, filter);
  for (std::uint64_t i = 0; i < e.size(); ++i)
    if (auto g = e.at(i)) f(*g);
}

inline std::vector<Dag> all_dags(int vertices, DagFilter filter = {}) {
  std::vector<Dag> out;
  enumerate_dags(vertices, filter, [&](const Dag& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Transit functions satisfying (t1) and (t3) on {a, b, ...}.
//
// Each non-singleton U contributes one digit: the subset of X \ U added to
// R(U), so the stream has prod 2^(n - |U|) entries.

class TransitEnumeration {
 public:
  TransitEnumeration(int n, int k, int max_n = kMaxEnumeratedElements)
      : ground_(element_labels(detail::bounded(n, 1, max_n, "n"))), k_(k) {
    if (k < 2) throw Error(ErrorCode::InvalidArity, "transit functions need arity >= 2");
    for_each_small_subset(ground_.size(), static_cast<std::size_t>(k), SizeOrder::ascending, [&](const Subset& u) {
      keys_.push_back(u);
      return true;
    });
    size_ = 1;
    for (const auto& u : keys_)
      if (u.count() > 1) size_ <<= (ground_.size() - u.count());
  }

  std::uint64_t size() const { return size_; }

  TransitFunction at(std::uint64_t i) const {
    const std::size_t n = ground_.size();
    std::vector<TransitFunction::Entry> table;
    table.reserve(keys_.size());
    for (const auto& u : keys_) {
      Subset r = u;
      if (u.count() > 1) {
        const std::size_t free = n - u.count();
        std::uint64_t digit = i & ((std::uint64_t{1} << free) - 1);
        i >>= free;
        std::size_t bit = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (u.test(x)) continue;
          if ((digit >> bit++) & 1) r.set(x);
        }
      }
      table.emplace_back(u, std::move(r));
    }
    return TransitFunction(ground_, k_, std::move(table));
  }

 private:
  GroundSet ground_;
  int k_;
  std::vector<Subset> keys_;
  std::uint64_t size_ = 1;
};

template <typename F>
void enumerate_transit_functions(int n, int k, F&& f) {
  TransitEnumeration e(n, k);
  for (std::uint64_t i = 0; i < e.size(); ++i) f(e.at(i));
}

// ---------------------------------------------------------------------------
// Seeded random instances. Only the raw 64-bit output of mt19937_64 is
// consumed, so streams are identical across standard libraries.

namespace detail {

inline bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

}  // namespace detail

// A uniformly random topological order; each forward pair is an edge with
// probability `density`.
inline Dag random_dag(std::uint64_t seed, int vertices, double density) {
  if (vertices < 1) throw Error(ErrorCode::InvalidArgument, "a DAG needs at least one vertex");
  if (!(density >= 0.0 && density <= 1.0)) throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(vertices);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  detail::shuffle(order, rng);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (detail::bernoulli(rng, density)) edges.emplace_back(order[i], order[j]);
  return Dag::from_indices(element_labels(n), std::move(edges));
}

// `members` distinct non-empty subsets drawn uniformly; with
// force_clustering the singletons and X are added on top.
inline SetSystem random_set_system(std::uint64_t seed, int n, std::uint64_t members, bool force_clustering) {
  if (n < 1 || n > 62) throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 62]");
  const std::uint64_t available = (std::uint64_t{1} << n) - 1;
  if (members > available)
    throw Error(ErrorCode::TooManyMembers,
                std::to_string(members) + " members requested, only " + std::to_string(available) + " non-empty subsets");
  std::mt19937_64 rng(seed);
  const auto width = static_cast<std::size_t>(n);
  std::vector<Subset> family;
  if (members * 2 > available) {
    // Dense: partial shuffle of all masks.
    std::vector<std::uint64_t> masks(available);
    for (std::uint64_t m = 0; m < available; ++m) masks[m] = m + 1;
    for (std::uint64_t i = 0; i < members; ++i) std::swap(masks[i], masks[i + detail::below(rng, available - i)]);
    for (std::uint64_t i = 0; i < members; ++i) family.push_back(Subset::from_mask(width, masks[i]));
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (seen.size() < members) {
      std::uint64_t m = 1 + detail::below(rng, available);
      if (seen.insert(m).second) family.push_back(Subset::from_mask(width, m));
    }
  }
  if (force_clustering) {
    for (std::size_t x = 0; x < width; ++x) family.push_back(Subset::from_mask(width, std::uint64_t{1} << x));
    family.push_back(Subset::from_mask(width, available));
  }
  return SetSystem(GroundSet(element_labels(width)), std::move(family));
}

// A table satisfying (t1) and (t3): R(U) is U plus each other element with
// probability `density`.
inline TransitFunction random_transit(std::uint64_t seed, int n, int k, double density) {
  if (n < 1 || n > 62) throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 62]");
  if (k < 2) throw Error(ErrorCode::InvalidArity, "transit functions need arity >= 2");
  std::mt19937_64 rng(seed);
  GroundSet ground(element_labels(static_cast<std::size_t>(n)));
  std::vector<TransitFunction::Entry> table;
  for_each_small_subset(ground.size(), static_cast<std::size_t>(k), SizeOrder::ascending, [&](const Subset& u) {
    Subset r = u;
    if (u.count() > 1)
      for (std::size_t x = 0; x < ground.size(); ++x)
        if (!u.test(x) && detail::bernoulli(rng, density)) r.set(x);
    table.emplace_back(u, std::move(r));
    return true;
  });
  return TransitFunction(std::move(ground), k, std::move(table));
}

}  // namespace lcadag
