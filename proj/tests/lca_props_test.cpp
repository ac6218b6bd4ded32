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

std::optional<LabelSet> subject(const PropertyReport& r) { return r.witness ? r.witness->subject_set() : std::nullopt; }

Dag star(int leaves) {
  std::vector<std::string> v{"root"};
  std::vector<std::pair<std::string, std::string>> e;
  for (int i = 0; i < leaves; ++i) {
    v.push_back("l" + std::to_string(i));
    e.emplace_back("root", v.back());
  }
  return Dag::build(v, e);
}

// Brute-force reference predicates on label sets.
struct Ref {
  oracle::Graph g;
  oracle::Labels x;
  explicit Ref(const Dag& d) : g(d), x(g.leaves()) {}

  bool klca(std::size_t k) const {
    for (const auto& a : oracle::subsets(x, k))
      if (g.lca(a).size() != 1) return false;
    return true;
  }
  bool pcc() const {
    for (const auto& u : g.vertices)
      for (const auto& v : g.vertices) {
        bool comparable = g.below(u, v) || g.below(v, u);
        auto cu = g.cluster(u), cv = g.cluster(v);
        bool nested = oracle::subset_of(cu, cv) || oracle::subset_of(cv, cu);
        if (comparable != nested) return false;
      }
    return true;
  }
  bool cl() const {
    for (const auto& v : g.vertices)
      if (g.lca(g.cluster(v)).size() != 1) return false;
    return true;
  }
  std::string lca_of(const oracle::Labels& a) const { return *g.lca(a).begin(); }
  bool strict(std::size_t k) const {
    if (!klca(k) || !cl()) return false;
    for (const auto& v : g.vertices) {
      auto c = g.cluster(v);
      std::string top = lca_of(c);
      bool found = false;
      for (const auto& u : oracle::subsets(c, k))
        if (lca_of(u) == top) found = true;
      if (!found) return false;
    }
    return true;
  }
  // Every A has U within A, |U| <= k, with the same unique lca.
  bool strong(std::size_t k) const {
    if (!klca(x.size())) return false;
    for (const auto& a : oracle::subsets(x)) {
      bool found = false;
      for (const auto& u : oracle::subsets(a, k))
        if (lca_of(u) == lca_of(a)) found = true;
      if (!found) return false;
    }
    return true;
  }
};

}  // namespace

TEST(Pcc, Examples) {
  EXPECT_FALSE(has_pcc(fig1_dag()).holds);
  EXPECT_TRUE(has_pcc(build_hasse(cluster_system(fig1_dag())).dag).holds);
  EXPECT_TRUE(has_pcc(Dag::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})).holds);
}

TEST(Cl, Examples) {
  auto r = has_cl(fig2_dag());
  EXPECT_FALSE(r.holds);
  const auto* cl = r.witness->find("cluster");
  ASSERT_NE(cl, nullptr);
  EXPECT_EQ(std::get<LabelSet>(*cl), labels({"x", "y", "z"}));
  EXPECT_TRUE(has_cl(fig3_dag()).holds);
}

TEST(LcaProperty, Examples) {
  EXPECT_TRUE(has_lca_property(fig3_dag()).holds);
  auto r = has_lca_property(fig1_dag());
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(subject(r), labels({"x", "y"}));
  EXPECT_TRUE(has_lca_property(Dag::build({"a"}, {})).holds);
  EXPECT_ERROR_CODE(has_lca_property(star(30)), LeafSetTooLarge);
  EXPECT_TRUE(has_lca_property(star(30), 30).holds);
}

TEST(KlcaProperty, Examples) {
  auto r2 = has_klca_property(fig2_dag(), 2);
  EXPECT_FALSE(r2.holds);
  EXPECT_EQ(subject(r2), labels({"x", "y"}));
  auto r3 = has_klca_property(fig2_dag(), 3);
  EXPECT_FALSE(r3.holds);
  EXPECT_EQ(subject(r3), labels({"x", "y", "z"}));
  EXPECT_TRUE(has_klca_property(fig3_dag(), 2).holds);
  auto f1 = has_klca_property(fig1_dag(), 2);
  const auto* lca = f1.witness->find("LCA");
  ASSERT_NE(lca, nullptr);
  EXPECT_EQ(std::get<LabelSet>(*lca), labels({"p", "q", "v"}));
  EXPECT_ERROR_CODE(has_klca_property(fig1_dag(), 0), InvalidArgument);
}

TEST(StrictKlca, Examples) {
  EXPECT_TRUE(has_strict_klca(fig3_dag(), 2).holds);
  EXPECT_FALSE(has_strict_klca(fig2_dag(), 2).holds);
  EXPECT_TRUE(has_strict_klca(Dag::build({"r", "m", "a", "b"}, {{"r", "m"}, {"m", "a"}, {"m", "b"}}), 2).holds);
}

TEST(StrongKlca, Examples) {
  auto r = has_strong_klca(fig3_dag(), 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(subject(r), labels({"w", "x", "y"}));
  EXPECT_TRUE(has_strong_klca(fig3_dag(), 3).holds);
  for (int k = 2; k <= 4; ++k) EXPECT_TRUE(has_strong_klca(star(5), k).holds);
  EXPECT_FALSE(has_strong_klca(fig1_dag(), 2).holds);
}

TEST(StrongKlca, ReadingsAgreeOnSmallDags) {
  for (int n = 1; n <= 5; ++n)
    enumerate_dags(n, {}, [&](const Dag& g) {
      for (int k = 2; k <= 3; ++k) {
        auto f = strong_klca_forms(g, k);
        if (f.lca_property) {
          ASSERT_EQ(f.within, f.literal) << emit_dag(g);
        }
      }
    });
}

// Every verdict against the label-level reference on all DAGs with up to
// five vertices.
TEST(LcaOracle, VerdictsMatchBruteForce) {
  for (int n = 1; n <= 5; ++n)
    enumerate_dags(n, {}, [&](const Dag& g) {
      Ref ref(g);
      ASSERT_EQ(has_pcc(g).holds, ref.pcc()) << emit_dag(g);
      ASSERT_EQ(has_cl(g).holds, ref.cl()) << emit_dag(g);
      ASSERT_EQ(has_lca_property(g).holds, ref.klca(ref.x.size())) << emit_dag(g);
      for (int k = 1; k <= 3; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        ASSERT_EQ(has_klca_property(g, k).holds, ref.klca(kk)) << emit_dag(g) << "k=" << k;
        ASSERT_EQ(has_strict_klca(g, k).holds, ref.strict(kk)) << emit_dag(g) << "k=" << k;
        ASSERT_EQ(has_strong_klca(g, k).holds, ref.strong(kk)) << emit_dag(g) << "k=" << k;
      }
    });
}

TEST(LcaOracle, RandomLargerDags) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Dag g = random_dag(seed, 9, 0.3);
    Ref ref(g);
    for (int k = 2; k <= 3; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      EXPECT_EQ(has_klca_property(g, k).holds, ref.klca(kk));
      EXPECT_EQ(has_strict_klca(g, k).holds, ref.strict(kk));
      EXPECT_EQ(has_strong_klca(g, k).holds, ref.strong(kk));
    }
  }
}

TEST(LcaProps, FailureWitnessesAreGenuine) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Dag g = random_dag(seed, 8, 0.35);
    for (int k = 2; k <= 3; ++k) {
      auto r = has_klca_property(g, k);
      if (!r.holds) {
        auto a = subject(r);
        ASSERT_TRUE(a);
        EXPECT_LE(a->size(), static_cast<std::size_t>(k));
        EXPECT_FALSE(g.unique_lca(g.leaf_subset(*a)).defined());
      }
    }
  }
}
