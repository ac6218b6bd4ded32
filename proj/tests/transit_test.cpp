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

// A 2-ary table on the labels of `ground` given as (U, R(U)) label lists;
// unlisted singletons map to themselves and unlisted pairs to X.
TransitFunction table2(std::vector<std::string> ground,
                       std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> entries) {
  GroundSet g(std::move(ground));
  std::vector<TransitFunction::Entry> t;
  for_each_small_subset(g.size(), 2, SizeOrder::ascending, [&](const Subset& u) {
    Subset r = u.count() == 1 ? u : g.full();
    for (const auto& [l, v] : entries)
      if (g.subset(l) == u) r = g.subset(v);
    t.emplace_back(u, r);
    return true;
  });
  return TransitFunction(g, 2, std::move(t));
}

SetSystem fig_sets(int i) { return cluster_system(i == 1 ? fig1_dag() : i == 2 ? fig2_dag() : fig3_dag()); }

std::optional<LabelSet> subject(const PropertyReport& r) { return r.witness ? r.witness->subject_set() : std::nullopt; }

}  // namespace

TEST(TransitConstruction, RejectsBadTables) {
  GroundSet g({"a", "b"});
  EXPECT_ERROR_CODE(TransitFunction(g, 1, {}), InvalidArity);
  EXPECT_ERROR_CODE(TransitFunction(g, 2, {{g.subset({"a"}), g.subset({"a"})}}), IncompleteTable);
  std::vector<TransitFunction::Entry> dup{{g.subset({"a"}), g.subset({"a"})}, {g.subset({"a"}), g.subset({"a"})}};
  EXPECT_ERROR_CODE(TransitFunction(g, 2, dup), InvalidArgument);
}

TEST(TransitConstruction, TupleLookupCollapsesRepeats) {
  TransitFunction r = ex1_transit();
  std::vector<std::string> aa{"a", "a"}, ca{"c", "a"};
  EXPECT_EQ(r.value_of_tuple(aa), r.ground().subset({"a"}));
  EXPECT_EQ(r.ground().labels_of(r.value_of_tuple(ca)), labels({"a", "b", "c"}));
}

TEST(T1, Examples) {
  EXPECT_TRUE(check_t1(ex1_transit()).holds);
  auto r = check_t1(table2({"a", "b"}, {{{"a", "b"}, {"a"}}}));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(subject(r), labels({"a", "b"}));
  EXPECT_TRUE(check_t1(canonical_of_setsystem(fig_sets(1), 2)).holds);
}

TEST(T3, Examples) {
  EXPECT_TRUE(check_t3(ex1_transit()).holds);
  EXPECT_FALSE(check_t3(table2({"a", "b"}, {{{"a"}, {"a", "b"}}})).holds);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(check_t3(canonical_of_setsystem(fig_sets(i), 2)).holds);
}

TEST(Monotone, Examples) {
  auto r = check_monotone(ex1_transit());
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(*r.witness->subject_sets(), (std::vector<LabelSet>{labels({"a", "c"}), labels({"a", "b"})}));
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(check_monotone(canonical_of_setsystem(fig_sets(i), 2)).holds);
  EXPECT_TRUE(check_monotone(r_g_of_dag(fig3_dag(), 2)).holds);
}

// (m): W within R(U) implies R(W) within R(U), checked by brute force.
TEST(Monotone, MatchesBruteForceOnEnumeratedTables) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 2; k <= 3; ++k)
      enumerate_transit_functions(n, k, [&](const TransitFunction& r) {
        bool expect = true;
        for (const auto& [u, ru] : r.entries())
          for (const auto& [w, rw] : r.entries())
            if (w.is_subset_of(ru) && !rw.is_subset_of(ru)) expect = false;
        ASSERT_EQ(check_monotone(r).holds, expect) << emit_transit(r);
      });
}

TEST(APrime, Examples) {
  auto r = check_a_prime(ex1_transit());
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(subject(r), labels({"a", "b"}));
  auto c = check_a_prime(canonical_of_setsystem(fig_sets(2), 2));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(subject(c), labels({"w", "x"}));
  GroundSet g({"a", "b", "c"});
  std::vector<TransitFunction::Entry> id;
  for_each_small_subset(3, 2, SizeOrder::ascending, [&](const Subset& u) {
    id.emplace_back(u, u);
    return true;
  });
  EXPECT_FALSE(check_a_prime(TransitFunction(g, 2, id)).holds);
}

TEST(TransitSets, Examples) {
  EXPECT_EQ(oracle::family(transit_sets(ex1_transit())),
            (oracle::Family{{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b", "c"}, {"a", "b", "c", "d"}}));
  EXPECT_EQ(oracle::family(transit_sets(canonical_of_setsystem(fig_sets(1), 2))), oracle::family(fig_sets(1)));
  EXPECT_EQ(oracle::family(transit_sets(table2({"a", "b", "c"}, {}))), (oracle::Family{{"a"}, {"b"}, {"c"}, {"a", "b", "c"}}));
  GroundSet g({"a", "b"});
  std::vector<TransitFunction::Entry> t{{g.subset({"a"}), g.subset({"a"})},
                                        {g.subset({"b"}), g.subset({"b"})},
                                        {g.subset({"a", "b"}), g.empty_subset()}};
  EXPECT_ERROR_CODE(transit_sets(TransitFunction(g, 2, t)), EmptyTransitSet);
}

TEST(Canonical, Examples) {
  SetSystem s1 = fig_sets(1);
  auto r1 = canonical_of_setsystem(s1, 2);
  EXPECT_EQ(r1.ground().labels_of(r1(r1.ground().subset({"w", "z"}))), labels({"w", "x", "y", "z"}));
  auto r2 = canonical_of_setsystem(fig_sets(2), 2);
  EXPECT_EQ(r2.ground().labels_of(r2(r2.ground().subset({"x", "y"}))), labels({"x", "y", "z"}));
  for (const auto& x : s1.ground().labels()) EXPECT_EQ(r1.ground().labels_of(r1(r1.ground().subset({x}))), LabelSet{x});
  SetSystem open = SetSystem::from_labels({"a", "b"}, {{"a"}, {"b"}});
  EXPECT_ERROR_CODE(canonical_of_setsystem(open, 2), UncoveredTuple);
  EXPECT_ERROR_CODE(canonical_of_setsystem(s1, 1), InvalidArity);
}

TEST(Canonical, ValuesAreClosures) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SetSystem s = random_set_system(seed, 1 + static_cast<int>(seed % 6), 1 + seed % 6, true);
    for (int k = 2; k <= 3; ++k) {
      auto r = canonical_of_setsystem(s, k);
      auto fam = oracle::family(s);
      for (const auto& [u, v] : r.entries()) {
        auto ul = s.labels_of(u);
        EXPECT_EQ(oracle::to_set(s.labels_of(v)), *oracle::closure(fam, oracle::to_set(ul)));
      }
      EXPECT_TRUE(check_monotone(r).holds);
      EXPECT_TRUE(check_t1(r).holds);
      EXPECT_TRUE(check_t3(r).holds);
    }
  }
}

TEST(Rg, Examples) {
  auto r = r_g_of_dag(fig3_dag(), 2);
  EXPECT_EQ(r.ground().labels_of(r(r.ground().subset({"w", "x"}))), labels({"w", "x"}));
  try {
    r_g_of_dag(fig1_dag(), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KlcaViolation);
    EXPECT_EQ(e.witness(), labels({"x", "y"}));
    EXPECT_NE(std::string(e.what()).find("LCA = {p,q,v}"), std::string::npos) << e.what();
  }
  for (int k = 2; k <= 4; ++k) {
    auto one = r_g_of_dag(Dag::build({"a"}, {}), k);
    EXPECT_EQ(one.entries().size(), 1u);
    EXPECT_EQ(one.ground().labels_of(one.entries()[0].second), labels({"a"}));
  }
}

TEST(Identified, Examples) {
  EXPECT_TRUE(is_identified_by_canonical(fig_sets(3), 2).holds);
  EXPECT_TRUE(is_identified_by_canonical(fig_sets(2), 2).holds);
  EXPECT_TRUE(is_identified_by_canonical(SetSystem::from_labels({"a", "b", "c", "d"},
                                                                {{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b", "c", "d"}}),
                                         2)
                  .holds);
  // {a,b,c} needs three generators at k=2.
  SetSystem s = SetSystem::from_labels({"a", "b", "c", "d"},
                                       {{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b"}, {"b", "c"}, {"a", "c"}, {"a", "b", "c"}, {"a", "b", "c", "d"}});
  auto r = is_identified_by_canonical(s, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(subject(r), labels({"a", "b", "c"}));
}

// A monotone (t1),(t3) table is identified by its transit sets: the
// canonical function of C_R is R itself.
TEST(Identified, MonotoneTablesAreCanonical) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 2; k <= 3; ++k)
      enumerate_transit_functions(n, k, [&](const TransitFunction& r) {
        bool mono = check_monotone(r).holds;
        bool canonical = canonical_of_setsystem(transit_sets(r), k) == r;
        ASSERT_EQ(mono, canonical) << emit_transit(r);
      });
}

// T-systems are exactly the systems identified by their canonical function.
TEST(Identified, EquivalentToTSystemOnClusteringSystems) {
  for (int n = 1; n <= 4; ++n)
    enumerate_set_systems(n, SetScope::clustering, [&](const SetSystem& s) {
      for (int k = 2; k <= 3; ++k) ASSERT_EQ(is_t_system(s, k).holds, is_identified_by_canonical(s, k).holds);
    });
}
