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

// Set systems over a finite ground set: the closure function and the axiom
// checkers for clustering systems, T-systems and (k-)weak hierarchies.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcadag/bitset.hpp"
#include "lcadag/combinatorics.hpp"
#include "lcadag/error.hpp"
#include "lcadag/report.hpp"

namespace lcadag {

// Exhaustive scans over all subsets of the ground set refuse to run above
// this many elements unless the caller raises the bound.
inline constexpr std::size_t kDefaultMaxLeaves = 20;

class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorCode::EmptyGround, "ground set has no elements");
    by_label_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw Error(ErrorCode::EmptyLabel, "empty element label");
      by_label_.emplace_back(labels_[i], i);
    }
    std::sort(by_label_.begin(), by_label_.end());
    for (std::size_t i = 1; i < by_label_.size(); ++i) {
      if (by_label_[i].first == by_label_[i - 1].first)
        throw Error(ErrorCode::DuplicateLabel, "duplicate element '" + by_label_[i].first + "'",
                    {by_label_[i].first});
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), label,
                               [](const auto& e, std::string_view l) { return e.first < l; });
    if (it == by_label_.end() || it->first != label) return std::nullopt;
    return it->second;
  }
  std::size_t index(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorCode::ElementNotInGround, "'" + std::string(label) + "' is not in the ground set",
                {std::string(label)});
  }

  Subset empty_subset() const { return Subset(size()); }
  Subset full() const { return Subset::full(size()); }

  template <typename Range>
  Subset subset(const Range& labels) const {
    Subset s(size());
    for (const auto& l : labels) s.set(index(l));
    return s;
  }
  Subset subset(std::initializer_list<std::string_view> labels) const {
    Subset s(size());
    for (auto l : labels) s.set(index(l));
    return s;
  }

  LabelSet labels_of(const Subset& s) const {
    LabelSet out;
    out.reserve(s.count());
    s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
    return sorted_labels(std::move(out));
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::size_t>> by_label_;
};

// Canonical display key of a set: sorted labels joined by '+'.
inline std::string set_key(const LabelSet& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '+';
    out += labels[i];
  }
  return out;
}

// "{a,b}" for messages.
inline std::string braced(const LabelSet& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += labels[i];
  }
  return out + "}";
}

// A family of distinct non-empty subsets of a ground set. Members are kept
// sorted by numeric bitmask value, which fixes the iteration order of every
// checker below.
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(GroundSet ground, std::vector<Subset> members) : ground_(std::move(ground)), members_(std::move(members)) {
    for (const auto& m : members_) {
      if (m.size() != ground_.size())
        throw Error(ErrorCode::InvalidArgument, "member width does not match the ground set");
      if (m.none()) throw Error(ErrorCode::EmptyMember, "set systems consist of non-empty sets");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static SetSystem from_labels(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& family) {
    GroundSet g(std::move(ground));
    std::vector<Subset> members;
    members.reserve(family.size());
    for (const auto& f : family) members.push_back(g.subset(f));
    return SetSystem(std::move(g), std::move(members));
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Subset& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

  // cl(A): intersection of all members containing A; nullopt when no member
  // does. cl(empty) is the intersection of the whole family.
  std::optional<Subset> closure(const Subset& a) const {
    std::optional<Subset> out;
    for (const auto& m : members_) {
      if (!a.is_subset_of(m)) continue;
      if (out)
        *out &= m;
      else
        out = m;
    }
    return out;
  }

  template <typename Range>
  std::optional<Subset> closure_of_labels(const Range& labels) const {
    return closure(ground_.subset(labels));
  }

  LabelSet labels_of(const Subset& s) const { return ground_.labels_of(s); }

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.ground_ == b.ground_ && a.members_ == b.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

// A and B overlap when their intersection is neither empty nor one of them.
template <typename Tag>
bool overlaps(const BasicBitset<Tag>& a, const BasicBitset<Tag>& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

namespace detail {

inline void require_k(int k, int min_k = 1) {
  if (k < min_k)
    throw Error(ErrorCode::InvalidArgument, "parameter k must be at least " + std::to_string(min_k));
}

inline void require_exhaustive(std::size_t n, std::size_t max_leaves) {
  if (n > max_leaves)
    throw Error(ErrorCode::LeafSetTooLarge, std::to_string(n) + " elements exceed the exhaustive bound of " +
                                                std::to_string(max_leaves));
}

inline WitnessValue closure_value(const SetSystem& sys, const std::optional<Subset>& cl) {
  if (!cl) return std::string("undefined");
  return sys.labels_of(*cl);
}

}  // namespace detail

inline PropertyReport check_ks(const SetSystem& sys) {
  Subset single(sys.ground().size());
  for (std::size_t x = 0; x < sys.ground().size(); ++x) {
    single.clear();
    single.set(x);
    if (!sys.contains(single))
      return PropertyReport::fail(Property::KS, std::nullopt,
                                  Witness().add("subject", LabelSet{sys.ground().label(x)}));
  }
  return PropertyReport::pass(Property::KS);
}

inline PropertyReport check_k1(const SetSystem& sys) {
  if (sys.contains(sys.ground().full())) return PropertyReport::pass(Property::K1);
  return PropertyReport::fail(Property::K1, std::nullopt, Witness().add("subject", sys.ground().labels_of(sys.ground().full())));
}

// (KC): cl(U) is a member for every U in X^(k). A system passing this is
// pre-k-ary.
inline PropertyReport check_kc(const SetSystem& sys, int k) {
  detail::require_k(k);
  std::optional<PropertyReport> failure;
  for_each_small_subset(sys.ground().size(), static_cast<std::size_t>(k), SizeOrder::descending,
                        [&](const Subset& u) {
                          auto cl = sys.closure(u);
                          if (cl && sys.contains(*cl)) return true;
                          failure = PropertyReport::fail(Property::KC, k,
                                                         Witness()
                                                             .add("subject", sys.labels_of(u))
                                                             .add("closure", detail::closure_value(sys, cl)));
                          return false;
                        });
  return failure ? *failure : PropertyReport::pass(Property::KC, k);
}

// Smallest T within `c`, 1 <= |T| <= k, such that every member containing T
// contains c. Equivalently cl(T) == c for a member c.
inline std::optional<Subset> spanning_set(const SetSystem& sys, const Subset& c, int k) {
  std::optional<Subset> found;
  for_each_subset(c, 1, static_cast<std::size_t>(k), SizeOrder::ascending, [&](const Subset& t) {
    for (const auto& other : sys.members()) {
      if (t.is_subset_of(other) && !c.is_subset_of(other)) return true;
    }
    found = t;
    return false;
  });
  return found;
}

// (KR). Certificate on success: member -> spanning set.
inline PropertyReport check_kr(const SetSystem& sys, int k) {
  detail::require_k(k);
  LabelMapping spans;
  for (const auto& c : sys.members()) {
    auto t = spanning_set(sys, c, k);
    if (!t)
      return PropertyReport::fail(Property::KR, k, Witness().add("subject", sys.labels_of(c)));
    spans.emplace_back(set_key(sys.labels_of(c)), sys.labels_of(*t));
  }
  return PropertyReport::pass(Property::KR, k, Witness().add("spans", std::move(spans)));
}

// Closed under pairwise non-empty intersection.
inline PropertyReport is_closed(const SetSystem& sys) {
  const auto& m = sys.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      Subset meet = m[i] & m[j];
      if (meet.any() && !sys.contains(meet))
        return PropertyReport::fail(Property::CLOSED, std::nullopt,
                                    Witness()
                                        .add("subject", std::vector<LabelSet>{sys.labels_of(m[i]), sys.labels_of(m[j])})
                                        .add("intersection", sys.labels_of(meet)));
    }
  }
  return PropertyReport::pass(Property::CLOSED);
}

namespace detail {

// First (k+1)-tuple of distinct members in which no member can be dropped
// from the total intersection, as member indices.
inline std::optional<std::vector<std::size_t>> k_weak_violation(const SetSystem& sys, int k) {
  const auto& m = sys.members();
  const std::size_t r = static_cast<std::size_t>(k) + 1;
  std::optional<std::vector<std::size_t>> bad;
  std::vector<Subset> prefix(r + 1), suffix(r + 1);
  const std::size_t n = sys.ground().size();
  for_each_combination(m.size(), r, [&](std::span<const std::size_t> idx) {
    prefix[0] = Subset::full(n);
    for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = prefix[i] & m[idx[i]];
    suffix[r] = Subset::full(n);
    for (std::size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] & m[idx[i]];
    const Subset& total = prefix[r];
    for (std::size_t j = 0; j < r; ++j) {
      if ((prefix[j] & suffix[j + 1]) == total) return true;
    }
    bad.emplace(idx.begin(), idx.end());
    return false;
  });
  return bad;
}

inline PropertyReport k_weak_report(const SetSystem& sys, int k, Property p, std::optional<int> shown_k) {
  auto bad = k_weak_violation(sys, k);
  if (!bad) return PropertyReport::pass(p, shown_k);
  std::vector<LabelSet> tuple;
  for (std::size_t i : *bad) tuple.push_back(sys.labels_of(sys.members()[i]));
  return PropertyReport::fail(p, shown_k, Witness().add("subject", std::move(tuple)));
}

}  // namespace detail

// Among any three members one is redundant in the common intersection.
inline PropertyReport is_weak_hierarchy(const SetSystem& sys) {
  return detail::k_weak_report(sys, 2, Property::WEAK_HIER, std::nullopt);
}

// Among any k+1 distinct members one is redundant in the common
// intersection. Systems with at most k members pass vacuously.
inline PropertyReport is_k_weak_hierarchy(const SetSystem& sys, int k) {
  detail::require_k(k);
  return detail::k_weak_report(sys, k, Property::K_WEAK_HIER, k);
}

// Every non-empty A has U within A, |U| <= k, with cl(A) == cl(U). Two
// undefined closures compare equal.
inline PropertyReport k_weak_closure_criterion(const SetSystem& sys, int k,
                                               std::size_t max_leaves = kDefaultMaxLeaves) {
  detail::require_k(k);
  const std::size_t n = sys.ground().size();
  detail::require_exhaustive(n, max_leaves);
  const auto kk = static_cast<std::size_t>(k);
  std::optional<PropertyReport> failure;
  for_each_subset(Subset::full(n), kk + 1, n, SizeOrder::descending, [&](const Subset& a) {
    const auto target = sys.closure(a);
    bool spanned = !for_each_subset(a, 1, kk, SizeOrder::ascending,
                                    [&](const Subset& u) { return sys.closure(u) != target; });
    if (spanned) return true;
    failure = PropertyReport::fail(
        Property::K_WEAK_CLOSURE, k,
        Witness().add("subject", sys.labels_of(a)).add("closure", detail::closure_value(sys, target)));
    return false;
  });
  return failure ? *failure : PropertyReport::pass(Property::K_WEAK_CLOSURE, k);
}

// Every A with |A| > k has some z in A with z in cl(A \ {z}).
inline PropertyReport k_weak_removal_criterion(const SetSystem& sys, int k,
                                               std::size_t max_leaves = kDefaultMaxLeaves) {
  detail::require_k(k);
  const std::size_t n = sys.ground().size();
  detail::require_exhaustive(n, max_leaves);
  std::optional<PropertyReport> failure;
  for_each_subset(Subset::full(n), static_cast<std::size_t>(k) + 1, n, SizeOrder::descending,
                  [&](const Subset& a) {
                    bool removable = false;
                    a.for_each([&](std::size_t z) {
                      if (removable) return;
                      Subset rest = a;
                      rest.reset(z);
                      auto cl = sys.closure(rest);
                      removable = cl && cl->test(z);
                    });
                    if (removable) return true;
                    failure = PropertyReport::fail(Property::K_WEAK_REMOVAL, k,
                                                   Witness().add("subject", sys.labels_of(a)));
                    return false;
                  });
  return failure ? *failure : PropertyReport::pass(Property::K_WEAK_REMOVAL, k);
}

namespace detail {

inline PropertyReport staged_failure(Property p, std::optional<int> k, const PropertyReport& stage) {
  Witness w;
  w.add("stage", std::string(to_string(stage.property)));
  if (stage.witness)
    for (const auto& e : stage.witness->entries()) w.add(e.key, e.value);
  return PropertyReport::fail(p, k, std::move(w));
}

}  // namespace detail

// k-ary T-system: (KS), (KR) and (KC) for k.
inline PropertyReport is_t_system(const SetSystem& sys, int k) {
  detail::require_k(k);
  if (auto r = check_ks(sys); !r) return detail::staged_failure(Property::T_SYSTEM, k, r);
  if (auto r = check_kr(sys, k); !r) return detail::staged_failure(Property::T_SYSTEM, k, r);
  if (auto r = check_kc(sys, k); !r) return detail::staged_failure(Property::T_SYSTEM, k, r);
  return PropertyReport::pass(Property::T_SYSTEM, k);
}

inline PropertyReport is_clustering_system(const SetSystem& sys) {
  if (auto r = check_ks(sys); !r) return detail::staged_failure(Property::CLUSTERING, std::nullopt, r);
  if (auto r = check_k1(sys); !r) return detail::staged_failure(Property::CLUSTERING, std::nullopt, r);
  return PropertyReport::pass(Property::CLUSTERING);
}

}  // namespace lcadag
