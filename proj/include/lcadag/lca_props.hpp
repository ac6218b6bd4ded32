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

// DAG-level properties: (PCC), (CL), the lca- and k-lca-properties and their
// strict and strong refinements.
//
// Counterexamples are the first failing leaf set in the canonical scan order
// (largest sets first, colex within a size; see combinatorics.hpp). The
// strict and strong checkers are layered on their prerequisites and name the
// stage that failed.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcadag/combinatorics.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/report.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// u and v are comparable iff one cluster contains the other.
inline PropertyReport has_pcc(const Dag& g) {
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const Subset& cu = g.cluster(VertexId{u});
      const Subset& cv = g.cluster(VertexId{v});
      bool comparable = g.is_comparable(VertexId{u}, VertexId{v});
      bool nested = cu.is_subset_of(cv) || cv.is_subset_of(cu);
      if (comparable == nested) continue;
      return PropertyReport::fail(Property::PCC, std::nullopt,
                                  Witness()
                                      .add("subject", LabelSet{g.labels()[u], g.labels()[v]})
                                      .add("clusters", std::vector<LabelSet>{g.leaf_labels_of(cu), g.leaf_labels_of(cv)})
                                      .add("comparable", comparable));
    }
  }
  return PropertyReport::pass(Property::PCC);
}

// lca(C(v)) is defined for every vertex v.
inline PropertyReport has_cl(const Dag& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Subset& c = g.cluster(VertexId{v});
    VertexSet lcas = g.lca_set(c);
    if (lcas.count() == 1) continue;
    return PropertyReport::fail(Property::CL, std::nullopt,
                                Witness()
                                    .add("subject", g.labels()[v])
                                    .add("cluster", g.leaf_labels_of(c))
                                    .add("LCA", g.labels_of(lcas)));
  }
  return PropertyReport::pass(Property::CL);
}

namespace detail {

inline PropertyReport lca_scan(const Dag& g, std::size_t max_size, Property p, std::optional<int> k) {
  std::optional<PropertyReport> failure;
  for_each_subset(g.leaves(), 1, max_size, SizeOrder::descending, [&](const Subset& a) {
    VertexSet lcas = g.lca_set(a);
    if (lcas.count() == 1) return true;
    failure = PropertyReport::fail(p, k, Witness().add("subject", g.leaf_labels_of(a)).add("LCA", g.labels_of(lcas)));
    return false;
  });
  return failure ? *failure : PropertyReport::pass(p, k);
}

}  // namespace detail

// lca(A) defined for every non-empty A within X. Exponential in |X|.
inline PropertyReport has_lca_property(const Dag& g, std::size_t max_leaves = kDefaultMaxLeaves) {
  detail::require_exhaustive(g.leaf_count(), max_leaves);
  return detail::lca_scan(g, g.leaf_count(), Property::LCA, std::nullopt);
}

// lca(A) defined for every A in X^(k).
inline PropertyReport has_klca_property(const Dag& g, int k) {
  detail::require_k(k);
  return detail::lca_scan(g, static_cast<std::size_t>(k), Property::KLCA, k);
}

// For each vertex m that is lca(U) of some U in X^(k), the smallest such U.
inline std::unordered_map<std::size_t, Subset> small_set_lcas(const Dag& g, int k) {
  std::unordered_map<std::size_t, Subset> out;
  for_each_small_subset(g.leaf_count(), static_cast<std::size_t>(k), SizeOrder::ascending, [&](const Subset& u) {
    VertexSet lcas = g.lca_set(u);
    if (lcas.count() == 1) out.try_emplace(lcas.first(), u);
    return true;
  });
  return out;
}

// k-lca property, (CL), and every lca(C(w)) equals lca(U) for some U in
// X^(k). Certificate on success: vertex -> U.
inline PropertyReport has_strict_klca(const Dag& g, int k) {
  detail::require_k(k);
  if (auto r = has_klca_property(g, k); !r) return detail::staged_failure(Property::STRICT_KLCA, k, r);
  if (auto r = has_cl(g); !r) return detail::staged_failure(Property::STRICT_KLCA, k, r);
  const auto spanned = small_set_lcas(g, k);
  LabelMapping spans;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    const Subset& c = g.cluster(VertexId{w});
    std::size_t m = g.lca_set(c).first();
    auto it = spanned.find(m);
    if (it == spanned.end()) {
      return PropertyReport::fail(Property::STRICT_KLCA, k,
                                  Witness()
                                      .add("stage", std::string("SPAN"))
                                      .add("subject", g.labels()[w])
                                      .add("cluster", g.leaf_labels_of(c))
                                      .add("lca", g.labels()[m]));
    }
    spans.emplace_back(g.labels()[w], g.leaf_labels_of(it->second));
  }
  return PropertyReport::pass(Property::STRICT_KLCA, k, Witness().add("spans", std::move(spans)));
}

// Both readings of the strong k-lca condition on a DAG with the
// lca-property: `within` asks for U inside A, `literal` for any U in X^(k).
struct StrongKlcaForms {
  bool lca_property = false;
  bool within = false;
  bool literal = false;
  std::optional<Subset> first_within_failure;
};

inline StrongKlcaForms strong_klca_forms(const Dag& g, int k, std::size_t max_leaves = kDefaultMaxLeaves) {
  detail::require_k(k);
  detail::require_exhaustive(g.leaf_count(), max_leaves);
  const std::size_t n = g.leaf_count();
  // The table below has 2^|X| entries.
  detail::require_exhaustive(n, 26);
  constexpr std::uint32_t kUndefined = ~std::uint32_t{0};
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint32_t> lca(count, kUndefined);
  std::vector<char> spanned(g.vertex_count(), 0);
  StrongKlcaForms out;
  for (std::uint64_t m = 1; m < count; ++m) {
    VertexSet l = g.lca_set(Subset::from_mask(n, m));
    if (l.count() != 1) return out;
    lca[m] = static_cast<std::uint32_t>(l.first());
    if (std::popcount(m) <= k) spanned[lca[m]] = 1;
  }
  out.lca_property = true;
  out.within = true;
  out.literal = true;
  for (std::uint64_t m = 1; m < count; ++m)
    if (!spanned[lca[m]]) out.literal = false;
  for_each_nonempty_subset(n, SizeOrder::descending, [&](const Subset& a) {
    const std::uint64_t am = a.to_mask();
    if (std::popcount(am) <= k) return true;
    for (std::uint64_t u = (am - 1) & am; u; u = (u - 1) & am)
      if (std::popcount(u) <= k && lca[u] == lca[am]) return true;
    out.within = false;
    out.first_within_failure = a;
    return false;
  });
  return out;
}

// lca-property, and every non-empty A has U within A, |U| <= k, with
// lca(U) = lca(A). Whether the weaker reading (U anywhere in X^(k)) holds is
// recorded under "literal_form".
inline PropertyReport has_strong_klca(const Dag& g, int k, std::size_t max_leaves = kDefaultMaxLeaves) {
  StrongKlcaForms f = strong_klca_forms(g, k, max_leaves);
  if (!f.lca_property) return detail::staged_failure(Property::STRONG_KLCA, k, has_lca_property(g, max_leaves));
  if (f.within) return PropertyReport::pass(Property::STRONG_KLCA, k, Witness().add("literal_form", f.literal));
  const Subset& a = *f.first_within_failure;
  return PropertyReport::fail(Property::STRONG_KLCA, k,
                              Witness()
                                  .add("subject", g.leaf_labels_of(a))
                                  .add("lca", g.labels()[g.lca_set(a).first()])
                                  .add("literal_form", f.literal));
}

}  // namespace lcadag
