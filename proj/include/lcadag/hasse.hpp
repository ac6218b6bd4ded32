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

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lcadag/bitset.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/report.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// Cover-relation DAG of a set family. Vertex i is member i of the source
// system; its label is the member's set_key ("a+b"), so singleton members
// keep their element label and become leaves.
struct HasseDiagram {
  Dag dag;
  GroundSet ground;
  std::vector<Subset> vertex_sets;

  const Subset& set_of(VertexId v) const { return vertex_sets[v.index]; }
};

inline HasseDiagram build_hasse(const SetSystem& sys) {
  const auto& m = sys.members();
  if (m.empty()) throw Error(ErrorCode::EmptyFamily, "the Hasse diagram of an empty family is undefined");
  const std::size_t n = m.size();

  // below[i]: members strictly contained in member i.
  std::vector<VertexSet> below(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m[j].is_subset_of(m[i])) below[i].set(j);

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    VertexSet covers = below[i];
    below[i].for_each([&](std::size_t j) { covers -= below[j]; });
    covers.for_each([&](std::size_t j) { edges.emplace_back(i, j); });
  }

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : m) labels.push_back(set_key(sys.labels_of(s)));
  return HasseDiagram{Dag::from_indices(std::move(labels), std::move(edges)), sys.ground(), m};
}

// Hasse(C) has exactly one vertex of in-degree 0.
inline PropertyReport hasse_is_network(const SetSystem& sys) {
  HasseDiagram h = build_hasse(sys);
  auto roots = h.dag.roots();
  if (roots.size() == 1) return PropertyReport::pass(Property::NETWORK, std::nullopt, Witness().add("subject", sys.labels_of(h.set_of(roots[0]))));
  std::vector<LabelSet> maximal;
  for (VertexId r : roots) maximal.push_back(sys.labels_of(h.set_of(r)));
  return PropertyReport::fail(Property::NETWORK, std::nullopt, Witness().add("subject", std::move(maximal)));
}

// The same test for an arbitrary DAG.
inline PropertyReport is_network_report(const Dag& g) {
  auto roots = g.roots();
  LabelSet labels;
  for (VertexId r : roots) labels.push_back(g.label(r));
  labels = sorted_labels(std::move(labels));
  if (roots.size() == 1) return PropertyReport::pass(Property::NETWORK, std::nullopt, Witness().add("subject", labels));
  return PropertyReport::fail(Property::NETWORK, std::nullopt, Witness().add("subject", labels));
}

}  // namespace lcadag
