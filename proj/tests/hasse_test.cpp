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

#include <gtest/gtest.h>

#include "lcadag.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace lcadag;

namespace {

// Parent label -> sorted child labels.
std::map<std::string, LabelSet> covers(const HasseDiagram& h) {
  std::map<std::string, LabelSet> out;
  for (const auto& [p, c] : h.dag.edges()) out[h.dag.labels()[p]].push_back(h.dag.labels()[c]);
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

TEST(Hasse, Ex1IsARootedTree) {
  HasseDiagram h = build_hasse(transit_sets(ex1_transit()));
  auto c = covers(h);
  EXPECT_EQ(c["a+b+c+d"], labels({"a+b+c", "d"}));
  EXPECT_EQ(c["a+b+c"], labels({"a", "b", "c"}));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_TRUE(h.dag.is_network());
  EXPECT_TRUE(hasse_is_network(transit_sets(ex1_transit())).holds);
}

TEST(Hasse, StarOverSingletons) {
  SetSystem s = SetSystem::from_labels({"a", "b"}, {{"a"}, {"b"}, {"a", "b"}});
  auto c = covers(build_hasse(s));
  EXPECT_EQ(c["a+b"], labels({"a", "b"}));
  EXPECT_TRUE(hasse_is_network(s).holds);
}

TEST(Hasse, Fig1) {
  SetSystem s = cluster_system(fig1_dag());
  HasseDiagram h = build_hasse(s);
  EXPECT_EQ(h.dag.vertex_count(), 8u);
  auto roots = h.dag.roots();
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(h.dag.label(roots[0]), "w+x+y+z");
  VertexId xy = h.dag.id("x+y");
  LabelSet parents;
  for (auto p : h.dag.parents(xy)) parents.push_back(h.dag.labels()[p]);
  std::sort(parents.begin(), parents.end());
  EXPECT_EQ(parents, labels({"w+x+y", "x+y+z"}));
  // Leaves of the diagram are the singletons, so its cluster system is C.
  EXPECT_EQ(oracle::family(cluster_system(h.dag)), oracle::family(s));
}

TEST(Hasse, NotANetwork) {
  auto r = hasse_is_network(SetSystem::from_labels({"a", "b", "c"}, {{"a"}, {"b"}, {"a", "c"}, {"b", "c"}, {"c"}}));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness && r.witness->subject_sets());
  EXPECT_EQ(*r.witness->subject_sets(), (std::vector<LabelSet>{labels({"a", "c"}), labels({"b", "c"})}));
  EXPECT_TRUE(hasse_is_network(SetSystem::from_labels({"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "b", "c"}})).holds);
}

TEST(Hasse, EmptyFamily) {
  EXPECT_ERROR_CODE(build_hasse(SetSystem(GroundSet({"a"}), {})), EmptyFamily);
}

// Edges are exactly the cover pairs: A strictly inside B with nothing between.
TEST(Hasse, EdgesAreCoverPairs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    SetSystem s = random_set_system(seed, n, 1 + seed % ((1u << n) - 1) % 10, seed % 3 == 0);
    HasseDiagram h = build_hasse(s);
    std::set<std::pair<std::size_t, std::size_t>> edges(h.dag.edges().begin(), h.dag.edges().end());
    const auto& m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        bool cover = m[j].is_proper_subset_of(m[i]);
        for (std::size_t t = 0; t < m.size() && cover; ++t)
          if (m[j].is_proper_subset_of(m[t]) && m[t].is_proper_subset_of(m[i])) cover = false;
        // Vertex i of the diagram is member i.
        EXPECT_EQ(edges.count({i, j}) > 0, cover);
        EXPECT_EQ(h.set_of(VertexId{i}), m[i]);
      }
  }
}

// Hasse diagrams of clustering systems satisfy (PCC) and reproduce C.
TEST(Hasse, ClusteringSystemsRoundTrip) {
  for (int n = 1; n <= 4; ++n)
    enumerate_set_systems(n, SetScope::clustering, [&](const SetSystem& s) {
      HasseDiagram h = build_hasse(s);
      ASSERT_TRUE(has_pcc(h.dag).holds) << emit_set_system(s);
      ASSERT_EQ(oracle::family(cluster_system(h.dag)), oracle::family(s));
      ASSERT_TRUE(h.dag.is_network());
    });
}
