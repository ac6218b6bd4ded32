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

// Named reference instances with the claims each one must reproduce.
//
// make_fixture() rebuilds the instance and re-checks every claim; a single
// mismatch throws FixtureAssertionFailed naming all failed claims.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/lca_props.hpp"
#include "lcadag/properties.hpp"
#include "lcadag/report.hpp"
#include "lcadag/report_io.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transit.hpp"

namespace lcadag {

enum class FixtureName { FIG1, FIG2, FIG3, EX1, SEC2_NO_ANC };

inline constexpr FixtureName kAllFixtures[] = {FixtureName::FIG1, FixtureName::FIG2, FixtureName::FIG3,
                                               FixtureName::EX1, FixtureName::SEC2_NO_ANC};

inline std::string_view to_string(FixtureName f) {
  switch (f) {
    case FixtureName::FIG1: return "FIG1";
    case FixtureName::FIG2: return "FIG2";
    case FixtureName::FIG3: return "FIG3";
    case FixtureName::EX1: return "EX1";
    case FixtureName::SEC2_NO_ANC: return "SEC2_NO_ANC";
  }
  return "?";
}

inline Dag fig1_dag() {
  return Dag::build({"r", "p", "v", "q", "w", "x", "y", "z"},
                    {{"r", "p"}, {"r", "v"}, {"r", "q"}, {"p", "w"}, {"p", "x"}, {"p", "y"},
                     {"v", "x"}, {"v", "y"}, {"q", "x"}, {"q", "y"}, {"q", "z"}});
}

inline Dag fig2_dag() {
  return Dag::build({"r", "u1", "u2", "w", "x", "y", "z"},
                    {{"r", "u1"}, {"r", "u2"}, {"r", "w"}, {"u1", "x"}, {"u1", "y"}, {"u1", "z"},
                     {"u2", "x"}, {"u2", "y"}, {"u2", "z"}});
}

inline Dag fig3_dag() {
  return Dag::build({"r", "a", "b", "c", "w", "x", "y", "z"},
                    {{"r", "a"}, {"r", "b"}, {"r", "c"}, {"r", "z"}, {"a", "w"}, {"a", "x"},
                     {"b", "w"}, {"b", "y"}, {"c", "x"}, {"c", "y"}});
}

inline Dag sec2_no_anc_dag() {
  return Dag::build({"p", "q", "x", "y", "z"}, {{"p", "x"}, {"p", "y"}, {"q", "x"}, {"q", "z"}});
}

// X = {a,b,c,d}, k = 2: R({a,b}) = X, R({a,c}) = {a,b,c}, every other pair
// maps to X and singletons to themselves.
inline TransitFunction ex1_transit() {
  GroundSet g({"a", "b", "c", "d"});
  std::vector<TransitFunction::Entry> table;
  for_each_small_subset(4, 2, SizeOrder::ascending, [&](const Subset& u) {
    if (u.count() == 1)
      table.emplace_back(u, u);
    else if (u == g.subset({"a", "c"}))
      table.emplace_back(u, g.subset({"a", "b", "c"}));
    else
      table.emplace_back(u, g.full());
    return true;
  });
  return TransitFunction(std::move(g), 2, std::move(table));
}

// A DAG or a transit function under test.
struct Instance {
  std::variant<Dag, TransitFunction> payload;

  bool is_dag() const { return std::holds_alternative<Dag>(payload); }
  const Dag& dag() const { return std::get<Dag>(payload); }
  const TransitFunction& transit() const { return std::get<TransitFunction>(payload); }
};

// A verdict for one (property, k) pair, optionally pinning the witness
// subject.
struct Expectation {
  Property property;
  std::optional<int> k;
  bool holds;
  std::optional<WitnessValue> subject;
  std::string source;
};

// Any other claim, checked by a predicate.
struct FixtureClaim {
  std::string statement;
  std::string source;
  std::function<bool(const Instance&)> check;
};

struct Fixture {
  FixtureName name;
  Instance instance;
  std::vector<Expectation> expected;
  std::vector<FixtureClaim> claims;

  bool is_dag() const { return instance.is_dag(); }
  const Dag& dag() const { return instance.dag(); }
  const TransitFunction& transit() const { return instance.transit(); }
};

inline PropertyReport evaluate(const Instance& f, const Expectation& e) {
  if (f.is_dag()) return evaluate_property(f.dag(), e.property, e.k);
  return evaluate_property(f.transit(), e.property);
}

inline std::string describe(const Expectation& e) {
  std::string out(to_string(e.property));
  if (e.k) out += "(k=" + std::to_string(*e.k) + ")";
  out += e.holds ? " holds" : " fails";
  if (e.subject) out += " with witness " + render_value(*e.subject);
  return out;
}

// Failed claims, empty when the instance reproduces everything.
inline std::vector<std::string> verify(const Instance& f, const std::vector<Expectation>& expected,
                                       const std::vector<FixtureClaim>& claims) {
  std::vector<std::string> failed;
  for (const auto& e : expected) {
    PropertyReport r = evaluate(f, e);
    bool ok = r.holds == e.holds;
    if (ok && e.subject) {
      const WitnessValue* got = r.witness ? r.witness->find("subject") : nullptr;
      ok = got != nullptr && *got == *e.subject;
    }
    if (!ok) failed.push_back(describe(e) + " [" + e.source + "], got: " + render_text(r));
  }
  for (const auto& c : claims)
    if (!c.check(f)) failed.push_back(c.statement + " [" + c.source + "]");
  return failed;
}

inline std::vector<std::string> verify(const Fixture& f) { return verify(f.instance, f.expected, f.claims); }

namespace detail {

inline const std::string kComputed = "direct computation";

inline bool family_is(const SetSystem& sys, const std::vector<std::vector<std::string>>& family) {
  std::vector<std::string> ground(sys.ground().labels().begin(), sys.ground().labels().end());
  return sys == SetSystem::from_labels(std::move(ground), family);
}

inline bool lca_set_is(const Dag& g, std::initializer_list<std::string_view> a, const LabelSet& expected) {
  return g.labels_of(g.lca_set(g.leaf_subset(a))) == expected;
}

inline Fixture build_fig1() {
  Fixture f{FixtureName::FIG1, {fig1_dag()}, {}, {}};
  const std::string caption = "is closed and satisfies";
  f.claims.push_back({"C_G = {{w},{x},{y},{z},{x,y},{w,x,y},{x,y,z},{w,x,y,z}}", "The cluster system", [](const Instance& x) {
                        return family_is(cluster_system(x.dag()),
                                         {{"w"}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"w", "x", "y"}, {"x", "y", "z"}, {"w", "x", "y", "z"}});
                      }});
  f.claims.push_back({"leaves = {w,x,y,z}", caption,
                      [](const Instance& x) { return x.dag().leaf_labels() == LabelSet{"w", "x", "y", "z"}; }});
  f.claims.push_back({"LCA({x,y}) = {p,q,v}", "\\LCA(\\{x,y\\})=\\{p,v,q\\}",
                      [](const Instance& x) { return lca_set_is(x.dag(), {"x", "y"}, {"p", "q", "v"}); }});
  f.expected.push_back({Property::NETWORK, std::nullopt, true, std::nullopt, "of the network $G$"});
  f.expected.push_back({Property::CLOSED, std::nullopt, true, std::nullopt, caption});
  for (int k = 1; k <= 4; ++k)
    f.expected.push_back({Property::KC, k, true, std::nullopt, "satisfies \\AX{(KC)} for every $k\\in \\{1,2,3,4\\}$"});
  f.expected.push_back({Property::KLCA, 2, false, LabelSet{"x", "y"}, "does not have the pairwise"});
  f.expected.push_back({Property::PCC, std::nullopt, false, std::nullopt, "which is not satisfied by $G$"});
  return f;
}

inline Fixture build_fig2() {
  Fixture f{FixtureName::FIG2, {fig2_dag()}, {}, {}};
  f.claims.push_back({"C_G = {{x},{y},{z},{w},{x,y,z},X}", "Consider the DAG $G$ with leaf set", [](const Instance& x) {
                        return family_is(cluster_system(x.dag()), {{"x"}, {"y"}, {"z"}, {"w"}, {"x", "y", "z"}, {"w", "x", "y", "z"}});
                      }});
  for (auto pair : {std::pair{"x", "y"}, std::pair{"x", "z"}, std::pair{"y", "z"}}) {
    std::string st = std::string("lca(") + pair.first + "," + pair.second + ") undefined";
    f.claims.push_back({st, "are not defined", [pair](const Instance& x) {
                          return x.dag().lca_set(x.dag().leaf_subset({pair.first, pair.second})).count() > 1;
                        }});
  }
  f.claims.push_back({"lca(x,y,z) undefined", "$\\lca(x,y,z)$ is not defined", [](const Instance& x) {
                        return x.dag().lca_set(x.dag().leaf_subset({"x", "y", "z"})).count() > 1;
                      }});
  f.expected.push_back({Property::KS, std::nullopt, true, std::nullopt, "satisfies \\AX{(KS)}"});
  f.expected.push_back({Property::KC, 2, true, std::nullopt, "\\AX{(KC)} for $k=2$"});
  f.expected.push_back({Property::KC, 3, true, std::nullopt, "\\AX{(KC)} for $k=3$"});
  f.expected.push_back({Property::KLCA, 2, false, LabelSet{"x", "y"}, "is not a pairwise $\\lca$-network"});
  f.expected.push_back({Property::KLCA, 3, false, LabelSet{"x", "y", "z"}, "is not a \\textit{3}-$\\lca$-network"});
  f.expected.push_back({Property::CL, std::nullopt, false, std::nullopt, kComputed});
  return f;
}

inline Fixture build_fig3() {
  Fixture f{FixtureName::FIG3, {fig3_dag()}, {}, {}};
  f.claims.push_back({"C_G = {{x},{y},{z},{w},{w,x},{w,y},{x,y},X}", "has the clustering systems", [](const Instance& x) {
                        return family_is(cluster_system(x.dag()),
                                         {{"x"}, {"y"}, {"z"}, {"w"}, {"w", "x"}, {"w", "y"}, {"x", "y"}, {"w", "x", "y", "z"}});
                      }});
  f.claims.push_back({"lca({w,x,y}) = r, differing from lca of every pair inside",
                      "$\\lca(\\{w,x,y\\})=r\\neq \\lca(\\{u,v\\})$", [](const Instance& x) {
                        const Dag& g = x.dag();
                        auto top = g.unique_lca(g.leaf_subset({"w", "x", "y"}));
                        if (!top.defined() || g.label(*top.vertex()) != "r") return false;
                        for (auto [a, b] : {std::pair{"w", "x"}, std::pair{"w", "y"}, std::pair{"x", "y"}}) {
                          auto l = g.unique_lca(g.leaf_subset({a, b}));
                          if (!l.defined() || *l.vertex() == *top.vertex()) return false;
                        }
                        return true;
                      }});
  f.expected.push_back({Property::NETWORK, std::nullopt, true, std::nullopt, "The network $G$"});
  f.expected.push_back({Property::KS, std::nullopt, true, std::nullopt, "satisfying \\AX{(KS)}"});
  for (int k = 2; k <= 4; ++k) {
    f.expected.push_back({Property::KC, k, true, std::nullopt, "\\AX{(KC)} and \\AX{(KR)} for $k =2,3,4$"});
    f.expected.push_back({Property::KR, k, true, std::nullopt, "\\AX{(KC)} and \\AX{(KR)} for $k =2,3,4$"});
  }
  f.expected.push_back({Property::T_SYSTEM, 2, true, std::nullopt, "\\AX{(KS)}, \\AX{(KC)} and \\AX{(KR)}"});
  f.expected.push_back({Property::KLCA, 2, true, std::nullopt, "$\\lca(u,v)$ is defined for all"});
  f.expected.push_back({Property::LCA, std::nullopt, true, std::nullopt, "$G$ is an $\\lca$-network"});
  f.expected.push_back({Property::WEAK_HIER, std::nullopt, false,
                        std::vector<LabelSet>{{"w", "x"}, {"w", "y"}, {"x", "y"}}, "violates the condition of weak hierarchy"});
  f.expected.push_back({Property::STRONG_KLCA, 2, false, LabelSet{"w", "x", "y"}, "not a strong-2-$\\lca$-network"});
  f.expected.push_back({Property::STRICT_KLCA, 2, true, std::nullopt, kComputed});
  f.expected.push_back({Property::STRONG_KLCA, 3, true, std::nullopt, kComputed});
  return f;
}

inline Fixture build_ex1() {
  Fixture f{FixtureName::EX1, {ex1_transit()}, {}, {}};
  const std::string example = "is a rooted tree having pairwise";
  f.expected.push_back({Property::T1, std::nullopt, true, std::nullopt, "\\AX{(t1)} and \\AX{(t3)} is satisfied"});
  f.expected.push_back({Property::T3, std::nullopt, true, std::nullopt, "\\AX{(t1)} and \\AX{(t3)} is satisfied"});
  f.expected.push_back({Property::A_PRIME, 2, true, LabelSet{"a", "b"}, "satisfying \\AX{(a')}"});
  f.expected.push_back({Property::MONOTONE, std::nullopt, false, std::vector<LabelSet>{{"a", "c"}, {"a", "b"}},
                        "not monotone since $R(a,b)=X\\nsubseteq R(a,c)$"});
  f.expected.push_back({Property::NETWORK, std::nullopt, true, LabelSet{"a", "b", "c", "d"}, "is a network with root $X$"});
  f.claims.push_back({"C_R = {{a},{b},{c},{d},{a,b,c},X}", kComputed, [](const Instance& x) {
                        return family_is(transit_sets(x.transit()), {{"a"}, {"b"}, {"c"}, {"d"}, {"a", "b", "c"}, {"a", "b", "c", "d"}});
                      }});
  f.claims.push_back({"Hasse(C_R) is a rooted tree", example, [](const Instance& x) {
                        HasseDiagram h = build_hasse(transit_sets(x.transit()));
                        if (!h.dag.is_network()) return false;
                        for (std::size_t v = 0; v < h.dag.vertex_count(); ++v)
                          if (h.dag.parents(VertexId{v}).size() > 1) return false;
                        return true;
                      }});
  f.claims.push_back({"Hasse(C_R) has the pairwise lca-property", example, [](const Instance& x) {
                        return has_klca_property(build_hasse(transit_sets(x.transit())).dag, 2).holds;
                      }});
  return f;
}

inline Fixture build_sec2_no_anc() {
  Fixture f{FixtureName::SEC2_NO_ANC, {sec2_no_anc_dag()}, {}, {}};
  f.claims.push_back({"C(p) = {x,y} and C(q) = {x,z}", "two maximal vertices $\\{p,q\\}$", [](const Instance& x) {
                        const Dag& g = x.dag();
                        return g.leaf_labels_of(g.cluster(g.id("p"))) == LabelSet{"x", "y"} &&
                               g.leaf_labels_of(g.cluster(g.id("q"))) == LabelSet{"x", "z"};
                      }});
  f.claims.push_back({"Anc({y,z}) is empty and lca({y,z}) has no candidate", kComputed, [](const Instance& x) {
                        const Dag& g = x.dag();
                        Subset yz = g.leaf_subset({"y", "z"});
                        return g.common_ancestors(yz).none() && g.unique_lca(yz).status == LcaStatus::none;
                      }});
  f.claims.push_back({"Anc({x,z}) = {q}", kComputed, [](const Instance& x) {
                        const Dag& g = x.dag();
                        return g.labels_of(g.common_ancestors(g.leaf_subset({"x", "z"}))) == LabelSet{"q"};
                      }});
  f.expected.push_back({Property::NETWORK, std::nullopt, false, LabelSet{"p", "q"}, kComputed});
  return f;
}

}  // namespace detail

// Builds and re-verifies a fixture.
inline Fixture make_fixture(FixtureName name) {
  Fixture f = [&] {
    switch (name) {
      case FixtureName::FIG1: return detail::build_fig1();
      case FixtureName::FIG2: return detail::build_fig2();
      case FixtureName::FIG3: return detail::build_fig3();
      case FixtureName::EX1: return detail::build_ex1();
      case FixtureName::SEC2_NO_ANC: break;
    }
    return detail::build_sec2_no_anc();
  }();
  auto failed = verify(f);
  if (!failed.empty()) {
    std::string msg = std::string(to_string(name)) + " no longer reproduces:";
    for (const auto& s : failed) msg += "\n  " + s;
    throw Error(ErrorCode::FixtureAssertionFailed, msg, failed);
  }
  return f;
}

}  // namespace lcadag
