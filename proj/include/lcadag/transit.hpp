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

// k-ary transit functions stored as tables over X^(k).
//
// The table is indexed by sets, not tuples, so permutation invariance holds
// by construction; value_of_tuple() converts a tuple to its set of entries.
// Tables must be total. Equality is table equality.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcadag/combinatorics.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/report.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

class TransitFunction {
 public:
  using Entry = std::pair<Subset, Subset>;

  TransitFunction() = default;

  TransitFunction(GroundSet ground, int arity, std::vector<Entry> table)
      : ground_(std::move(ground)), arity_(arity), table_(std::move(table)) {
    if (arity_ < 2) throw Error(ErrorCode::InvalidArity, "transit functions need arity >= 2");
    const std::size_t n = ground_.size();
    for (const auto& [u, r] : table_) {
      if (u.size() != n || r.size() != n)
        throw Error(ErrorCode::InvalidArgument, "table entry width does not match the ground set");
      if (u.none() || u.count() > static_cast<std::size_t>(arity_))
        throw Error(ErrorCode::InvalidArgument, "table key outside X^(k)", ground_.labels_of(u));
    }
    std::sort(table_.begin(), table_.end(),
              [](const Entry& a, const Entry& b) { return BySizeThenValue{}(a.first, b.first); });
    for (std::size_t i = 1; i < table_.size(); ++i)
      if (table_[i].first == table_[i - 1].first)
        throw Error(ErrorCode::InvalidArgument, "duplicate table key", ground_.labels_of(table_[i].first));
    // Totality: the sorted keys must be exactly X^(k) in the same order.
    std::size_t i = 0;
    std::optional<Subset> missing;
    for_each_small_subset(n, static_cast<std::size_t>(arity_), SizeOrder::ascending, [&](const Subset& u) {
      if (i < table_.size() && table_[i].first == u) {
        ++i;
        return true;
      }
      missing = u;
      return false;
    });
    if (missing)
      throw Error(ErrorCode::IncompleteTable, "table not total: no value for " + braced(ground_.labels_of(*missing)),
                  ground_.labels_of(*missing));
  }

  const GroundSet& ground() const { return ground_; }
  int arity() const { return arity_; }
  const std::vector<Entry>& entries() const { return table_; }

  const Subset& value(const Subset& u) const {
    auto it = std::lower_bound(table_.begin(), table_.end(), u,
                               [](const Entry& e, const Subset& key) { return BySizeThenValue{}(e.first, key); });
    if (it == table_.end() || it->first != u)
      throw Error(ErrorCode::InvalidArgument, "argument outside X^(k)", ground_.labels_of(u));
    return it->second;
  }
  const Subset& operator()(const Subset& u) const { return value(u); }

  // R(u_1, ..., u_m) for a tuple with m <= k; repeated entries collapse.
  const Subset& value_of_tuple(std::span<const std::string> tuple) const {
    Subset u(ground_.size());
    for (const auto& l : tuple) u.set(ground_.index(l));
    return value(u);
  }

  friend bool operator==(const TransitFunction& a, const TransitFunction& b) {
    return a.ground_ == b.ground_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

 private:
  GroundSet ground_;
  int arity_ = 2;
  std::vector<Entry> table_;
};

// (t1) in set form: U is contained in R(U).
inline PropertyReport check_t1(const TransitFunction& r) {
  for (const auto& [u, v] : r.entries()) {
    if (!u.is_subset_of(v))
      return PropertyReport::fail(Property::T1, std::nullopt,
                                  Witness().add("subject", r.ground().labels_of(u)).add("value", r.ground().labels_of(v)));
  }
  return PropertyReport::pass(Property::T1);
}

// (t3): R({x}) = {x}.
inline PropertyReport check_t3(const TransitFunction& r) {
  for (std::size_t x = 0; x < r.ground().size(); ++x) {
    Subset s(r.ground().size());
    s.set(x);
    const Subset& v = r.value(s);
    if (v != s)
      return PropertyReport::fail(Property::T3, std::nullopt,
                                  Witness().add("subject", r.ground().labels_of(s)).add("value", r.ground().labels_of(v)));
  }
  return PropertyReport::pass(Property::T3);
}

// (m): W within R(U) implies R(W) within R(U). The witness is the first
// (U, W) pair in table order.
inline PropertyReport check_monotone(const TransitFunction& r) {
  for (const auto& [u, ru] : r.entries()) {
    for (const auto& [w, rw] : r.entries()) {
      if (w.is_subset_of(ru) && !rw.is_subset_of(ru)) {
        const auto& g = r.ground();
        return PropertyReport::fail(Property::MONOTONE, std::nullopt,
                                    Witness()
                                        .add("subject", std::vector<LabelSet>{g.labels_of(u), g.labels_of(w)})
                                        .add("R(U)", g.labels_of(ru))
                                        .add("R(W)", g.labels_of(rw)));
      }
    }
  }
  return PropertyReport::pass(Property::MONOTONE);
}

// (a'): some U has R(U) = X. Certificate: the first such U.
inline PropertyReport check_a_prime(const TransitFunction& r) {
  const Subset all = r.ground().full();
  for (const auto& [u, v] : r.entries()) {
    if (v == all)
      return PropertyReport::pass(Property::A_PRIME, r.arity(), Witness().add("subject", r.ground().labels_of(u)));
  }
  return PropertyReport::fail(Property::A_PRIME, r.arity(), Witness().add("subject", std::string("no U with R(U) = X")));
}

// C_R: the distinct values of the table.
inline SetSystem transit_sets(const TransitFunction& r) {
  std::vector<Subset> members;
  members.reserve(r.entries().size());
  for (const auto& [u, v] : r.entries()) {
    if (v.none())
      throw Error(ErrorCode::EmptyTransitSet, "R(" + braced(r.ground().labels_of(u)) + ") is empty",
                  r.ground().labels_of(u));
    members.push_back(v);
  }
  return SetSystem(r.ground(), std::move(members));
}

// R_C: U -> cl(U) over X^(k).
inline TransitFunction canonical_of_setsystem(const SetSystem& sys, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArity, "transit functions need arity >= 2");
  std::vector<TransitFunction::Entry> table;
  for_each_small_subset(sys.ground().size(), static_cast<std::size_t>(k), SizeOrder::ascending, [&](const Subset& u) {
    auto cl = sys.closure(u);
    if (!cl)
      throw Error(ErrorCode::UncoveredTuple, "no member contains " + braced(sys.labels_of(u)), sys.labels_of(u));
    table.emplace_back(u, std::move(*cl));
    return true;
  });
  return TransitFunction(sys.ground(), k, std::move(table));
}

// R_G: U -> C(lca(U)) over the leaves. Requires the k-lca property.
inline TransitFunction r_g_of_dag(const Dag& g, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArity, "transit functions need arity >= 2");
  std::vector<TransitFunction::Entry> table;
  for_each_small_subset(g.leaf_count(), static_cast<std::size_t>(k), SizeOrder::ascending, [&](const Subset& u) {
    auto lca = g.unique_lca(u);
    if (!lca.defined())
      throw Error(ErrorCode::KlcaViolation,
                  "lca(" + braced(g.leaf_labels_of(u)) + ") undefined, LCA = " +
                      braced(sorted_labels(g.labels_of(lca.candidates))),
                  g.leaf_labels_of(u));
    table.emplace_back(u, g.cluster(*lca.vertex()));
    return true;
  });
  return TransitFunction(g.leaf_ground(), k, std::move(table));
}

// C equals the transit sets of its own canonical k-ary transit function.
inline PropertyReport is_identified_by_canonical(const SetSystem& sys, int k) {
  SetSystem spanned = transit_sets(canonical_of_setsystem(sys, k));
  if (spanned == sys) return PropertyReport::pass(Property::IDENTIFIED, k);
  for (const auto& m : sys.members())
    if (!spanned.contains(m))
      return PropertyReport::fail(Property::IDENTIFIED, k,
                                  Witness().add("subject", sys.labels_of(m)).add("reason", std::string("not a transit set")));
  for (const auto& m : spanned.members())
    if (!sys.contains(m))
      return PropertyReport::fail(Property::IDENTIFIED, k,
                                  Witness().add("subject", sys.labels_of(m)).add("reason", std::string("not a member")));
  return PropertyReport::pass(Property::IDENTIFIED, k);  // unreachable
}

}  // namespace lcadag
