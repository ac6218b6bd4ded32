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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Expected values are written out literally here rather
// than taken from the fixture module.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lcadag.hpp"

using namespace lcadag;

namespace {

using Clock = std::chrono::steady_clock;
using Sets = std::vector<LabelSet>;

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Sets family_of(const SetSystem& s) {
  Sets out;
  for (const auto& m : s.members()) out.push_back(sorted_labels(s.labels_of(m)));
  std::sort(out.begin(), out.end());
  return out;
}

Sets sorted_family(Sets f) {
  for (auto& s : f) s = sorted_labels(s);
  std::sort(f.begin(), f.end());
  return f;
}

std::optional<LabelSet> subject(const PropertyReport& r) {
  if (!r.witness) return std::nullopt;
  return r.witness->subject_set();
}

void fig1(Check& c) {
  Dag g = parse_dag(read_file(LCADAG_DATA_DIR "/fig1.dag"));
  c.expect(family_of(cluster_system(g)) ==
               sorted_family({{"w"}, {"x"}, {"y"}, {"z"}, {"x", "y"}, {"w", "x", "y"}, {"x", "y", "z"},
                              {"w", "x", "y", "z"}}),
           "cluster system");
  c.expect(sorted_labels(g.labels_of(g.lca_set(g.leaf_subset({"x", "y"})))) == LabelSet{"p", "q", "v"},
           "LCA({x,y})");
  c.expect(!has_klca_property(g, 2).holds, "2-lca fails");
  SetSystem cs = cluster_system(g);
  c.expect(is_closed(cs).holds, "closed");
  for (int k = 1; k <= 4; ++k) c.expect(check_kc(cs, k).holds, "KC k=" + std::to_string(k));
  c.expect(!has_pcc(g).holds, "PCC fails");
}

void fig2(Check& c) {
  Dag g = parse_dag(read_file(LCADAG_DATA_DIR "/fig2.dag"));
  SetSystem cs = cluster_system(g);
  c.expect(check_kc(cs, 2).holds && check_kc(cs, 3).holds, "KC k=2,3");
  auto k2 = has_klca_property(g, 2), k3 = has_klca_property(g, 3);
  c.expect(!k2.holds && subject(k2) == LabelSet{"x", "y"}, "2-lca fails on {x,y}");
  c.expect(!k3.holds && subject(k3) == LabelSet{"x", "y", "z"}, "3-lca fails on {x,y,z}");
  c.expect(!has_cl(g).holds, "CL fails");
}

void fig3(Check& c) {
  Dag g = parse_dag(read_file(LCADAG_DATA_DIR "/fig3.dag"));
  c.expect(has_lca_property(g).holds, "lca-property");
  auto top = g.unique_lca(g.leaf_subset({"w", "x", "y"}));
  c.expect(top.defined() && g.label(*top.vertex()) == "r", "lca({w,x,y}) = r");
  for (auto pair : {std::array<std::string_view, 2>{"w", "x"}, {"w", "y"}, {"x", "y"}}) {
    auto l = g.unique_lca(g.leaf_subset({pair[0], pair[1]}));
    c.expect(l.defined() && g.label(*l.vertex()) != "r", "pair lca below the root");
  }
  SetSystem cs = cluster_system(g);
  c.expect(is_t_system(cs, 2).holds, "2-ary T-system");
  auto weak = is_weak_hierarchy(cs);
  c.expect(!weak.holds && weak.witness && weak.witness->subject_sets() == Sets{{"w", "x"}, {"w", "y"}, {"x", "y"}},
           "weak hierarchy fails on ({w,x},{w,y},{x,y})");
  c.expect(has_strict_klca(g, 2).holds, "strict 2-lca");
  c.expect(!has_strong_klca(g, 2).holds, "strong 2-lca fails");
  c.expect(has_strong_klca(g, 3).holds, "strong 3-lca");
}

void ex1(Check& c) {
  TransitFunction r = parse_transit(read_file(LCADAG_DATA_DIR "/ex1.transit"));
  auto m = check_monotone(r);
  c.expect(!m.holds && m.witness && m.witness->subject_sets() == Sets{{"a", "c"}, {"a", "b"}},
           "monotone fails on (U={a,c}, W={a,b})");
  c.expect(check_a_prime(r).holds, "(a')");
  Dag h = build_hasse(transit_sets(r)).dag;
  c.expect(h.is_network(), "Hasse is a network");
  bool tree = true;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) tree &= h.parents(VertexId{v}).size() <= 1;
  c.expect(tree, "Hasse is a tree");
  c.expect(has_klca_property(h, 2).holds, "Hasse has 2-lca");
}

void harness(Check& c) {
  const TheoremId ids[] = {TheoremId::OBS1, TheoremId::PROP1, TheoremId::LEM2,  TheoremId::FACT2, TheoremId::LEM3,
                           TheoremId::LEM4, TheoremId::FACT3, TheoremId::PROP2, TheoremId::PROP3, TheoremId::THM1,
                           TheoremId::LEM5, TheoremId::THM2,  TheoremId::LEM9,  TheoremId::PROP5, TheoremId::LEM6,
                           TheoremId::PROP6, TheoremId::THM3};
  Bounds b;  // |X| <= 4, DAGs with <= 6 vertices, k in {2,3}
  ValidateOptions o;
  o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (const auto& r : cross_validate(ids, b, o)) {
    c.expect(r.instances_checked > 0, std::string(to_string(r.theorem)) + " checked nothing");
    c.expect(r.discrepancy_count == 0, std::string(to_string(r.theorem)) + ": " +
                                           std::to_string(r.discrepancy_count) + " discrepancies");
  }
}

void closure_suite(Check& c) {
  std::size_t bad = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    std::mt19937_64 rng(i);
    const int n = 1 + static_cast<int>(rng() % 7);
    const std::uint64_t avail = (std::uint64_t{1} << n) - 1;
    SetSystem s = random_set_system(i, n, 1 + rng() % avail, false);
    const auto full = Subset::full(static_cast<std::size_t>(n));
    for_each_nonempty_subset(static_cast<std::size_t>(n), SizeOrder::ascending, [&](const Subset& a) {
      auto ca = s.closure(a);
      if (ca) {
        bad += !a.is_subset_of(*ca);
        auto cca = s.closure(*ca);
        bad += !(cca && *cca == *ca);
      }
      // Isotony against every single-element extension.
      for (std::size_t x = 0; x < full.size(); ++x) {
        if (a.test(x)) continue;
        Subset b = a;
        b.set(x);
        auto cb = s.closure(b);
        if (cb) bad += !(ca && ca->is_subset_of(*cb));
      }
      return true;
    });
    // The canonical function needs every small set covered; add X.
    std::vector<Subset> with_x(s.members());
    with_x.push_back(full);
    SetSystem sx(s.ground(), std::move(with_x));
    for (int k = 2; k <= 3; ++k) bad += !check_monotone(canonical_of_setsystem(sx, k)).holds;
  }
  c.expect(bad == 0, std::to_string(bad) + " closure-axiom or monotonicity failures");
}

void k_weak_oracles(Check& c) {
  std::size_t disagreements = 0;
  for (int n = 1; n <= 4; ++n)
    enumerate_set_systems(n, SetScope::clustering, [&](const SetSystem& s) {
      for (int k = 2; k <= 4; ++k) {
        bool a = is_k_weak_hierarchy(s, k).holds;
        bool b = k_weak_closure_criterion(s, k).holds;
        bool d = k_weak_removal_criterion(s, k).holds;
        disagreements += !(a == b && b == d);
      }
    });
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

void catalog(Check& c) {
  try {
    auto entries = counterexample_catalog();
    c.expect(entries.size() >= 4, "catalog has fewer than four entries");
  } catch (const Error& e) {
    c.expect(false, e.what());
  }
}

std::string run(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> p(popen(cmd.c_str(), "r"), pclose);
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p.get())) > 0) out.append(buf.data(), got);
  return out;
}

void determinism(Check& c) {
  const std::string cli = LCADAG_CLI;
  const std::string data = LCADAG_DATA_DIR;
  const std::vector<std::string> commands = {
      "validate OBS1 PROP5 LEM9 THM3 IMPL_DIAGRAM --bounds n=3,v=4,k=2..3,r=40,rv=8 --seed 7 --format json",
      "validate --bounds n=3,v=4,k=2..2,r=10 --format json",
      "check-dag " + data + "/fig1.dag --k 2 --format json",
      "check-dag " + data + "/fig3.dag --k 3 --format json",
      "check-sets " + data + "/fig2.sets --k 3 --format json",
      "check-transit " + data + "/ex1.transit --format json",
  };
  for (const auto& cmd : commands) {
    std::string base = run(cli + " " + cmd + " --jobs 1 2>/dev/null");
    c.expect(!base.empty(), "no output from: " + cmd);
    for (int jobs : {1, 2, 4}) {
      std::string again = run(cli + " " + cmd + " --jobs " + std::to_string(jobs) + " 2>/dev/null");
      c.expect(again == base, "output differs with --jobs " + std::to_string(jobs) + ": " + cmd);
    }
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "FIG1 fixture", 1, fig1},
      {2, "FIG2 fixture", 1, fig2},
      {3, "FIG3 fixture", 1, fig3},
      {4, "EX1 fixture", 1, ex1},
      {5, "theorem harness, |X|<=4, DAGs<=6 vertices, k=2..3", 300, harness},
      {6, "closure operator axioms and canonical monotonicity", 30, closure_suite},
      {7, "k-weak hierarchy oracle equivalence", 120, k_weak_oracles},
      {8, "counterexample catalog", 10, catalog},
      {9, "determinism across runs and --jobs", 120, determinism},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = Clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (s >= cr.limit_s) c.expect(false, "took " + std::to_string(s) + " s, limit " + std::to_string(cr.limit_s) + " s");
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("criterion %d %-55s %s (%.2f s)\n", cr.id, cr.name.c_str(), ok ? "PASS" : "FAIL", s);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
