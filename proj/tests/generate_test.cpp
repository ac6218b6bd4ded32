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

#include <set>

#include "lcadag.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace lcadag;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t r) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

// Labeled DAGs on n vertices: a(n) = sum_k (-1)^(k+1) C(n,k) 2^(k(n-k)) a(n-k).
std::int64_t labeled_dags(int n) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) {
      std::int64_t term = static_cast<std::int64_t>(binom(m, k)) * (std::int64_t{1} << (k * (m - k))) * a[m - k];
      a[m] += (k % 2 ? term : -term);
    }
  return a[n];
}

}  // namespace

TEST(EnumerateDags, CountsFollowTheLabeledDagRecurrence) {
  for (int n = 1; n <= 5; ++n) {
    std::int64_t count = 0;
    std::set<std::string> distinct;
    enumerate_dags(n, {}, [&](const Dag& g) {
      ++count;
      distinct.insert(emit_dag(g));
    });
    EXPECT_EQ(count, labeled_dags(n)) << n;
    EXPECT_EQ(static_cast<std::int64_t>(distinct.size()), count);
  }
  EXPECT_EQ(labeled_dags(6), 3781503);
}

TEST(EnumerateDags, Examples) {
  EXPECT_EQ(all_dags(1).size(), 1u);
  EXPECT_EQ(all_dags(2).size(), 3u);
  for (const auto& g : all_dags(3, {.network = true})) EXPECT_EQ(g.roots().size(), 1u);
  for (const auto& g : all_dags(4, {.pcc = true})) EXPECT_TRUE(has_pcc(g).holds);
  EXPECT_ERROR_CODE(all_dags(0), BoundExceeded);
  EXPECT_ERROR_CODE(all_dags(7), BoundExceeded);
  EXPECT_EQ(DagEnumeration(8, {}, 8).size(), 22876792454961u);  // 3^28
}

TEST(EnumerateDags, NetworkFilterCountsMatchBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    std::size_t expect = 0;
    for (const auto& g : all_dags(n)) expect += g.is_network();
    EXPECT_EQ(all_dags(n, {.network = true}).size(), expect);
  }
}

TEST(EnumerateSets, Counts) {
  EXPECT_EQ(all_set_systems(2, SetScope::clustering).size(), 1u);
  EXPECT_EQ(all_set_systems(3, SetScope::clustering).size(), 8u);
  EXPECT_EQ(all_set_systems(4, SetScope::clustering).size(), 1024u);
  auto one = all_set_systems(1, SetScope::all);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(oracle::family(one[0]), (oracle::Family{{"a"}}));
  for (int n = 1; n <= 3; ++n) {
    auto all = all_set_systems(n, SetScope::all);
    EXPECT_EQ(all.size(), (std::size_t{1} << ((1u << n) - 1)) - 1);
    std::set<oracle::Family> distinct;
    for (const auto& s : all) distinct.insert(oracle::family(s));
    EXPECT_EQ(distinct.size(), all.size());
  }
  for (const auto& s : all_set_systems(4, SetScope::clustering)) EXPECT_TRUE(is_clustering_system(s).holds);
  EXPECT_ERROR_CODE(all_set_systems(5, SetScope::clustering), BoundExceeded);
  EXPECT_ERROR_CODE(all_set_systems(0, SetScope::all), BoundExceeded);
}

TEST(EnumerateTransit, CountsAndAxioms) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 2; k <= 3; ++k) {
      std::uint64_t expect = 1;
      for (int s = 2; s <= std::min(n, k); ++s) expect <<= (n - s) * static_cast<int>(binom(n, s));
      std::uint64_t count = 0;
      enumerate_transit_functions(n, k, [&](const TransitFunction& r) {
        ++count;
        EXPECT_TRUE(check_t1(r).holds);
        EXPECT_TRUE(check_t3(r).holds);
      });
      EXPECT_EQ(count, expect) << n << " " << k;
    }
}

TEST(RandomDag, Examples) {
  EXPECT_EQ(emit_dag(random_dag(42, 7, 0.4)), emit_dag(random_dag(42, 7, 0.4)));
  EXPECT_TRUE(random_dag(5, 6, 0.0).edges().empty());
  Dag t = random_dag(9, 3, 1.0);
  EXPECT_EQ(t.edges().size(), 3u);
  // A transitive tournament is a total order.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(t.is_comparable(VertexId{i}, VertexId{j}));
  EXPECT_ERROR_CODE(random_dag(1, 0, 0.5), InvalidArgument);
  EXPECT_ERROR_CODE(random_dag(1, 3, 1.5), InvalidArgument);
}

TEST(RandomSetSystem, Examples) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SetSystem s = random_set_system(seed, 5, 4, true);
    EXPECT_TRUE(check_ks(s).holds);
    EXPECT_TRUE(check_k1(s).holds);
  }
  EXPECT_EQ(random_set_system(3, 6, 10, false), random_set_system(3, 6, 10, false));
  EXPECT_EQ(random_set_system(3, 4, 15, false).size(), 15u);
  EXPECT_EQ(random_set_system(3, 4, 7, false).size(), 7u);
  EXPECT_ERROR_CODE(random_set_system(3, 3, 8, false), TooManyMembers);
}

TEST(RandomTransit, Basics) {
  EXPECT_EQ(random_transit(4, 5, 3, 0.5), random_transit(4, 5, 3, 0.5));
  EXPECT_TRUE(check_t1(random_transit(4, 5, 3, 0.5)).holds);
  EXPECT_ERROR_CODE(random_transit(4, 5, 1, 0.5), InvalidArity);
}

TEST(Labels, ElementLabels) {
  EXPECT_EQ(element_labels(3), labels({"a", "b", "c"}));
  EXPECT_EQ(element_label(0, 30), "v0");
}
