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

// Brute-force cross-validation of the stated equivalences and implications.
//
// Each theorem is one row of kTheorems: the instance domains it ranges over,
// whether it is checked once per k, and a function that evaluates both
// sides on one instance. All requested theorems share a single pass over the
// instance streams; per-instance verdicts are cached in a facts object so a
// property used by several theorems is computed once.
//
// Work is split into chunks of consecutive stream indices; chunk results are
// concatenated in chunk order, so output does not depend on the job count.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/generate.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/lca_props.hpp"
#include "lcadag/properties.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/text_format.hpp"
#include "lcadag/transit.hpp"

namespace lcadag {

enum class TheoremId {
  OBS1, PROP1, LEM2, FACT2, LEM3, LEM4, FACT3, PROP2, PROP3,
  THM1, LEM5, THM2, LEM9, PROP5, LEM6, PROP6, THM3, IMPL_DIAGRAM,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::OBS1, TheoremId::PROP1, TheoremId::LEM2,  TheoremId::FACT2, TheoremId::LEM3, TheoremId::LEM4,
    TheoremId::FACT3, TheoremId::PROP2, TheoremId::PROP3, TheoremId::THM1, TheoremId::LEM5, TheoremId::THM2,
    TheoremId::LEM9, TheoremId::PROP5, TheoremId::LEM6,  TheoremId::PROP6, TheoremId::THM3, TheoremId::IMPL_DIAGRAM,
};

inline std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::OBS1: return "OBS1";
    case TheoremId::PROP1: return "PROP1";
    case TheoremId::LEM2: return "LEM2";
    case TheoremId::FACT2: return "FACT2";
    case TheoremId::LEM3: return "LEM3";
    case TheoremId::LEM4: return "LEM4";
    case TheoremId::FACT3: return "FACT3";
    case TheoremId::PROP2: return "PROP2";
    case TheoremId::PROP3: return "PROP3";
    case TheoremId::THM1: return "THM1";
    case TheoremId::LEM5: return "LEM5";
    case TheoremId::THM2: return "THM2";
    case TheoremId::LEM9: return "LEM9";
    case TheoremId::PROP5: return "PROP5";
    case TheoremId::LEM6: return "LEM6";
    case TheoremId::PROP6: return "PROP6";
    case TheoremId::THM3: return "THM3";
    case TheoremId::IMPL_DIAGRAM: return "IMPL_DIAGRAM";
  }
  return "?";
}

inline TheoremId parse_theorem_id(std::string_view s) {
  for (TheoremId t : kAllTheorems)
    if (to_string(t) == s) return t;
  throw Error(ErrorCode::UnknownTheorem, "unknown theorem '" + std::string(s) + "'", {std::string(s)});
}

// Instance ranges. Set systems and transit functions use ground sets of
// size 1..n; DAGs have 1..max_vertices vertices, plus `random_dags` seeded
// samples with up to random_vertices vertices.
struct Bounds {
  int n = kMaxEnumeratedElements;
  int max_vertices = kMaxEnumeratedVertices;
  int k_lo = 2;
  int k_hi = 3;
  std::uint64_t random_dags = 0;
  int random_vertices = 12;
  std::uint64_t seed = 1;
  int member_cap = 0;  // 0: no cap on the number of members
  SetScope scope = SetScope::clustering;
};

inline constexpr int kMaxK = 8;
inline constexpr std::uint64_t kMaxRandomDags = 1'000'000;
inline constexpr int kMaxRandomVertices = 16;

inline void check_bounds(const Bounds& b) {
  detail::require_bound(b.n, 1, kMaxEnumeratedElements, "n");
  detail::require_bound(b.max_vertices, 0, kMaxEnumeratedVertices, "v");
  detail::require_bound(b.k_lo, 2, kMaxK, "k");
  detail::require_bound(b.k_hi, b.k_lo, kMaxK, "k");
  detail::require_bound(b.random_vertices, 1, kMaxRandomVertices, "random vertices");
  if (b.random_dags > kMaxRandomDags)
    throw Error(ErrorCode::BoundExceeded, "r = " + std::to_string(b.random_dags) + " exceeds " + std::to_string(kMaxRandomDags));
  if (b.member_cap < 0) throw Error(ErrorCode::BoundExceeded, "m must be non-negative");
}

inline nlohmann::ordered_json to_json(const Bounds& b) {
  nlohmann::ordered_json j;
  j["n"] = b.n;
  j["v"] = b.max_vertices;
  j["k"] = {b.k_lo, b.k_hi};
  j["r"] = b.random_dags;
  j["rv"] = b.random_vertices;
  j["seed"] = b.seed;
  j["m"] = b.member_cap;
  j["scope"] = b.scope == SetScope::all ? "all" : "clustering";
  return j;
}

struct Discrepancy {
  std::string kind;  // "dag", "sets" or "transit"
  std::string instance;
  std::optional<int> k;
  std::string clause;
  bool left = false;
  bool right = false;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

// An instance on which the two readings of the strong k-lca condition
// (U within A, U anywhere in X^(k)) disagree.
struct ReadingDivergence {
  std::string instance;
  int k = 0;
  bool within = false;
  bool literal = false;

  friend bool operator==(const ReadingDivergence&, const ReadingDivergence&) = default;
};

inline constexpr std::size_t kMaxListed = 100;

struct ValidationReport {
  TheoremId theorem{};
  Bounds bounds;
  std::uint64_t instances_checked = 0;
  std::uint64_t discrepancy_count = 0;
  std::vector<Discrepancy> discrepancies;  // the first kMaxListed, in stream order
  std::uint64_t divergence_count = 0;
  std::vector<ReadingDivergence> reading_divergences;
  double elapsed_ms = 0;

  bool passed() const { return discrepancy_count == 0; }
};

inline nlohmann::ordered_json to_json(const ValidationReport& r, bool with_elapsed) {
  nlohmann::ordered_json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["bounds"] = to_json(r.bounds);
  j["instances_checked"] = r.instances_checked;
  j["discrepancy_count"] = r.discrepancy_count;
  nlohmann::ordered_json ds = nlohmann::ordered_json::array();
  for (const auto& d : r.discrepancies) {
    nlohmann::ordered_json e;
    e["kind"] = d.kind;
    e["instance"] = d.instance;
    e["k"] = d.k ? nlohmann::ordered_json(*d.k) : nlohmann::ordered_json(nullptr);
    e["clause"] = d.clause;
    e["left"] = d.left;
    e["right"] = d.right;
    ds.push_back(std::move(e));
  }
  j["discrepancies"] = std::move(ds);
  j["divergence_count"] = r.divergence_count;
  nlohmann::ordered_json rd = nlohmann::ordered_json::array();
  for (const auto& d : r.reading_divergences)
    rd.push_back({{"instance", d.instance}, {"k", d.k}, {"within", d.within}, {"literal", d.literal}});
  j["reading_divergences"] = std::move(rd);
  if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

// ---------------------------------------------------------------------------
// Per-instance caches.

namespace detail {

inline std::vector<LabelSet> family_labels(const SetSystem& s) {
  std::vector<LabelSet> out;
  for (const auto& m : s.members()) out.push_back(s.labels_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<LabelSet, LabelSet>> table_labels(const TransitFunction& r) {
  std::vector<std::pair<LabelSet, LabelSet>> out;
  for (const auto& [u, v] : r.entries()) out.emplace_back(r.ground().labels_of(u), r.ground().labels_of(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Verdict cache keyed by (property, k).
class VerdictCache {
 public:
  template <typename F>
  bool get(Property p, std::optional<int> k, F&& compute) {
    const int kk = k.value_or(-1);
    for (const auto& [key, v] : entries_)
      if (key.first == p && key.second == kk) return v;
    bool v = compute();
    entries_.push_back({{p, kk}, v});
    return v;
  }

 private:
  std::vector<std::pair<std::pair<Property, int>, bool>> entries_;
};

}  // namespace detail

class SetFacts {
 public:
  explicit SetFacts(const SetSystem& sys, std::size_t max_leaves) : sys_(sys), max_leaves_(max_leaves) {}

  const SetSystem& system() const { return sys_; }

  bool holds(Property p, std::optional<int> k) {
    return cache_.get(p, k, [&] { return evaluate_property(sys_, p, k, max_leaves_).holds; });
  }

  const HasseDiagram& hasse() {
    if (!hasse_) hasse_ = build_hasse(sys_);
    return *hasse_;
  }
  bool hasse_klca(int k) {
    return hasse_cache_.get(Property::KLCA, k, [&] { return has_klca_property(hasse().dag, k).holds; });
  }
  // C_Hasse(C) = C, compared by labels.
  bool hasse_reproduces() {
    if (!hasse_reproduces_)
      hasse_reproduces_ = detail::family_labels(cluster_system(hasse().dag)) == detail::family_labels(sys_);
    return *hasse_reproduces_;
  }

  std::string serialize() const { return emit_set_system(sys_); }

 private:
  const SetSystem& sys_;
  std::size_t max_leaves_;
  detail::VerdictCache cache_;
  detail::VerdictCache hasse_cache_;
  std::optional<HasseDiagram> hasse_;
  std::optional<bool> hasse_reproduces_;
};

class DagFacts {
 public:
  DagFacts(const Dag& g, std::size_t max_leaves) : g_(g), max_leaves_(max_leaves) {}

  const Dag& dag() const { return g_; }

  const SetSystem& clusters() {
    if (!clusters_) clusters_ = cluster_system(g_);
    return *clusters_;
  }
  SetFacts& cluster_facts() {
    if (!cluster_facts_) cluster_facts_.emplace(clusters(), max_leaves_);
    return *cluster_facts_;
  }

  bool holds(Property p, std::optional<int> k) {
    switch (p) {
      case Property::PCC:
      case Property::CL:
      case Property::LCA:
      case Property::KLCA:
      case Property::STRICT_KLCA:
      case Property::NETWORK:
        return cache_.get(p, k, [&] { return evaluate_property(g_, p, k, max_leaves_).holds; });
      case Property::STRONG_KLCA:
        return holds(Property::LCA, std::nullopt) && strong_forms(*k).within;
      default:
        return cluster_facts().holds(p, k);
    }
  }

  const StrongKlcaForms& strong_forms(int k) {
    for (const auto& [kk, f] : strong_)
      if (kk == k) return f;
    strong_.emplace_back(k, strong_klca_forms(g_, k, max_leaves_));
    return strong_.back().second;
  }

  // R_G for k, or nothing when some lca is undefined.
  const std::optional<TransitFunction>& r_g(int k) {
    for (const auto& [kk, r] : rg_)
      if (kk == k) return r;
    std::optional<TransitFunction> r;
    try {
      r = r_g_of_dag(g_, k);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::KlcaViolation) throw;
    }
    rg_.emplace_back(k, std::move(r));
    return rg_.back().second;
  }

  std::string serialize() const { return emit_dag(g_); }

 private:
  const Dag& g_;
  std::size_t max_leaves_;
  detail::VerdictCache cache_;
  std::optional<SetSystem> clusters_;
  std::optional<SetFacts> cluster_facts_;
  std::vector<std::pair<int, StrongKlcaForms>> strong_;
  std::vector<std::pair<int, std::optional<TransitFunction>>> rg_;
};

class TransitFacts {
 public:
  explicit TransitFacts(const TransitFunction& r) : r_(r) {}

  const TransitFunction& transit() const { return r_; }
  int k() const { return r_.arity(); }

  bool holds(Property p) {
    return cache_.get(p, std::nullopt, [&] { return evaluate_property(r_, p).holds; });
  }
  const SetSystem& transit_sets_of() {
    if (!sets_) sets_ = transit_sets(r_);
    return *sets_;
  }
  SetFacts& set_facts() {
    if (!set_facts_) set_facts_.emplace(transit_sets_of(), kDefaultMaxLeaves);
    return *set_facts_;
  }

  std::string serialize() const { return emit_transit(r_); }

 private:
  const TransitFunction& r_;
  detail::VerdictCache cache_;
  std::optional<SetSystem> sets_;
  std::optional<SetFacts> set_facts_;
};

// ---------------------------------------------------------------------------
// Clause recording.

class Recorder {
 public:
  // Both sides must agree. The premise, when given, restricts the clause.
  template <typename L, typename R>
  void iff(std::string_view clause, L&& left, R&& right) {
    bool l = left();
    bool r = right();
    if (l != r) report(clause, l, r);
  }
  template <typename L, typename R>
  void implies(std::string_view clause, L&& left, R&& right) {
    if (!left()) return;
    if (!right()) report(clause, true, false);
  }
  void divergence(int k, bool within, bool literal) { divergences_.push_back({k, within, literal}); }

  struct Entry {
    std::string clause;
    bool left;
    bool right;
  };
  struct Divergence {
    int k;
    bool within;
    bool literal;
  };
  std::vector<Entry>& entries() { return entries_; }
  std::vector<Divergence>& divergences() { return divergences_; }
  void clear() {
    entries_.clear();
    divergences_.clear();
  }

 private:
  void report(std::string_view clause, bool l, bool r) { entries_.push_back({std::string(clause), l, r}); }
  std::vector<Entry> entries_;
  std::vector<Divergence> divergences_;
};

// ---------------------------------------------------------------------------
// Theorem bodies.

namespace theorems {

using P = Property;
constexpr std::optional<int> none = std::nullopt;

inline void obs1(SetFacts& f, int k, Recorder& rec) {
  rec.iff("k-weak hierarchy <=> removal criterion", [&] { return f.holds(P::K_WEAK_HIER, k); },
          [&] { return f.holds(P::K_WEAK_REMOVAL, k); });
}

inline void prop1(SetFacts& f, int k, Recorder& rec) {
  rec.iff("k-weak hierarchy <=> closure criterion", [&] { return f.holds(P::K_WEAK_HIER, k); },
          [&] { return f.holds(P::K_WEAK_CLOSURE, k); });
}

// The existential side uses the Hasse diagram as the witness DAG.
inline void thm1(SetFacts& f, int k, Recorder& rec) {
  if (!f.holds(P::CLUSTERING, none)) return;
  rec.iff("pre-k-ary <=> Hasse(C) has k-lca and reproduces C", [&] { return f.holds(P::KC, k); },
          [&] { return f.hasse_klca(k) && f.hasse_reproduces(); });
}

inline void lem2(DagFacts& f, Recorder& rec) {
  rec.implies("v <= w implies C(v) within C(w)", [] { return true; }, [&] {
    const Dag& g = f.dag();
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
      bool ok = true;
      g.descendants(VertexId{w}).for_each([&](std::size_t v) {
        if (!g.cluster(VertexId{v}).is_subset_of(g.cluster(VertexId{w}))) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  });
}

inline void fact2(DagFacts& f, Recorder& rec, std::size_t max_leaves) {
  const Dag& g = f.dag();
  detail::require_exhaustive(g.leaf_count(), max_leaves);
  bool i_ok = true, ii_ok = true, iii_ok = true;
  for_each_nonempty_subset(g.leaf_count(), SizeOrder::ascending, [&](const Subset& a) {
    auto l = g.unique_lca(a);
    if (!l.defined()) return true;
    const VertexId m = *l.vertex();
    const Subset& cm = g.cluster(m);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const Subset& cv = g.cluster(VertexId{v});
      if (!a.is_subset_of(cv)) continue;
      if (!g.precedes(m, VertexId{v})) i_ok = false;
      // (ii): every cluster containing A contains C(lca(A)), so C(lca(A)) is
      // the unique minimal one.
      if (!cm.is_subset_of(cv)) ii_ok = false;
    }
    if (!a.is_subset_of(cm)) ii_ok = false;
    auto back = g.unique_lca(cm);
    if (!back.defined() || *back.vertex() != m) iii_ok = false;
    return true;
  });
  auto yes = [] { return true; };
  rec.implies("(i) lca(A) below every v with A within C(v)", yes, [&] { return i_ok; });
  rec.implies("(ii) C(lca(A)) unique minimal cluster containing A", yes, [&] { return ii_ok; });
  rec.implies("(iii) lca(C(lca(A))) = lca(A)", yes, [&] { return iii_ok; });
}

inline void lem3(TransitFacts& f, Recorder& rec) {
  rec.iff("Hasse(C_R) is a network <=> (a')", [&] { return f.holds(P::NETWORK); },
          [&] { return f.holds(P::A_PRIME); });
}

inline void lem4(DagFacts& f, Recorder& rec) {
  rec.implies("lca-property => C_G closed", [&] { return f.holds(P::LCA, none); },
              [&] { return f.holds(P::CLOSED, none); });
}

inline void fact3(DagFacts& f, Recorder& rec, std::size_t max_leaves) {
  rec.implies("lca-property => C(lca(Y)) = cl(Y) for all Y", [&] { return f.holds(P::LCA, none); }, [&] {
    const Dag& g = f.dag();
    detail::require_exhaustive(g.leaf_count(), max_leaves);
    const SetSystem& c = f.clusters();
    bool ok = true;
    for_each_nonempty_subset(g.leaf_count(), SizeOrder::ascending, [&](const Subset& y) {
      auto l = g.unique_lca(y);
      auto cl = c.closure(y);
      ok = l.defined() && cl && *cl == g.cluster(*l.vertex());
      return ok;
    });
    return ok;
  });
}

inline void prop2(DagFacts& f, int k, Recorder& rec) {
  auto klca = [&] { return f.holds(P::KLCA, k); };
  rec.implies("k-lca => R_G defined", klca, [&] { return f.r_g(k).has_value(); });
  rec.implies("k-lca => R_G monotone", klca, [&] { return f.r_g(k) && check_monotone(*f.r_g(k)).holds; });
  rec.implies("k-lca => R_G satisfies (t1) and (t3)", klca,
              [&] { return f.r_g(k) && check_t1(*f.r_g(k)).holds && check_t3(*f.r_g(k)).holds; });
  rec.implies("k-lca => R_G = R_{C_G}", klca,
              [&] { return f.r_g(k) && *f.r_g(k) == canonical_of_setsystem(f.clusters(), k); });
  rec.implies("k-lca => C_G pre-k-ary", klca, [&] { return f.holds(P::KC, k); });
}

inline void prop3(DagFacts& f, int k, Recorder& rec) {
  if (!f.holds(P::PCC, none)) return;
  rec.iff("(PCC): k-lca <=> C_G pre-k-ary", [&] { return f.holds(P::KLCA, k); }, [&] { return f.holds(P::KC, k); });
}

inline void lem5(TransitFacts& f, Recorder& rec) {
  rec.implies("monotone => Hasse(C_R) has k-lca", [&] { return f.holds(P::MONOTONE); },
              [&] { return f.set_facts().hasse_klca(f.k()); });
}

// The existential side uses Hasse(C_R) as the witness DAG.
inline void thm2(TransitFacts& f, Recorder& rec) {
  rec.iff("monotone <=> Hasse(C_R) has k-lca, C_G = C_R and R_{C_G} = R", [&] { return f.holds(P::MONOTONE); },
          [&] {
            SetFacts& s = f.set_facts();
            if (!s.hasse_klca(f.k()) || !s.hasse_reproduces()) return false;
            SetSystem cg = cluster_system(s.hasse().dag);
            return detail::table_labels(canonical_of_setsystem(cg, f.k())) == detail::table_labels(f.transit());
          });
}

inline void lem9(DagFacts& f, Recorder& rec) {
  rec.implies("(CL) => C(lca(C(v))) = C(v)", [&] { return f.holds(P::CL, none); }, [&] {
    const Dag& g = f.dag();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const Subset& c = g.cluster(VertexId{v});
      auto l = g.unique_lca(c);
      if (!l.defined() || g.cluster(*l.vertex()) != c) return false;
    }
    return true;
  });
}

inline void prop5(DagFacts& f, int k, Recorder& rec) {
  if (!f.holds(P::KLCA, k)) return;
  rec.iff("k-lca: strict k-lca <=> C_G k-ary T-system", [&] { return f.holds(P::STRICT_KLCA, k); },
          [&] { return f.holds(P::T_SYSTEM, k); });
  rec.implies("k-lca: strict k-lca => C_G identified by R_G", [&] { return f.holds(P::STRICT_KLCA, k); },
              [&] { return f.r_g(k) && transit_sets(*f.r_g(k)) == f.clusters(); });
}

inline void note_readings(DagFacts& f, int k, Recorder& rec) {
  if (!f.holds(P::LCA, none)) return;
  const StrongKlcaForms& s = f.strong_forms(k);
  if (s.within != s.literal) rec.divergence(k, s.within, s.literal);
}

inline void lem6(DagFacts& f, int k, Recorder& rec) {
  note_readings(f, k, rec);
  rec.implies("strong k-lca => strict k-lca", [&] { return f.holds(P::STRONG_KLCA, k); },
              [&] { return f.holds(P::STRICT_KLCA, k); });
}

inline void prop6(DagFacts& f, int k, Recorder& rec) {
  if (!f.holds(P::LCA, none)) return;
  note_readings(f, k, rec);
  rec.iff("lca-property: strong k-lca <=> closure criterion on C_G", [&] { return f.holds(P::STRONG_KLCA, k); },
          [&] { return f.holds(P::K_WEAK_CLOSURE, k); });
}

inline void thm3(DagFacts& f, int k, Recorder& rec) {
  note_readings(f, k, rec);
  rec.iff("strong k-lca <=> lca-property and C_G k-weak hierarchy", [&] { return f.holds(P::STRONG_KLCA, k); },
          [&] { return f.holds(P::LCA, none) && f.holds(P::K_WEAK_HIER, k); });
}

inline void impl_dag(DagFacts& f, int k, Recorder& rec) {
  auto h = [&](P p, std::optional<int> kk = std::nullopt) { return [&f, p, kk] { return f.holds(p, kk); }; };
  rec.implies("strong k-lca => strict k-lca", h(P::STRONG_KLCA, k), h(P::STRICT_KLCA, k));
  rec.implies("strong k-lca => lca-property", h(P::STRONG_KLCA, k), h(P::LCA));
  rec.implies("lca-property => k-lca", h(P::LCA), h(P::KLCA, k));
  rec.implies("lca-property => (CL)", h(P::LCA), h(P::CL));
  rec.implies("strict k-lca => k-lca and (CL)", h(P::STRICT_KLCA, k),
              [&] { return f.holds(P::KLCA, k) && f.holds(P::CL, none); });
  rec.implies("k-lca => C_G pre-k-ary", h(P::KLCA, k), h(P::KC, k));
  rec.implies("lca-property => C_G closed", h(P::LCA), h(P::CLOSED));
  rec.implies("strict k-lca => C_G k-ary T-system", h(P::STRICT_KLCA, k), h(P::T_SYSTEM, k));
  rec.implies("strong k-lca => C_G k-weak hierarchy", h(P::STRONG_KLCA, k), h(P::K_WEAK_HIER, k));
  rec.implies("strong k-lca => strong (k+1)-lca", h(P::STRONG_KLCA, k), h(P::STRONG_KLCA, k + 1));
  rec.implies("(k+1)-lca => k-lca", h(P::KLCA, k + 1), h(P::KLCA, k));
}

inline void impl_sets(SetFacts& f, int k, Recorder& rec) {
  if (!f.holds(P::CLUSTERING, none)) return;
  auto h = [&](P p, std::optional<int> kk = std::nullopt) { return [&f, p, kk] { return f.holds(p, kk); }; };
  rec.iff("weak hierarchy <=> 2-weak hierarchy", h(P::WEAK_HIER), h(P::K_WEAK_HIER, 2));
  rec.implies("weak hierarchy => (KR) for k=2", h(P::WEAK_HIER), h(P::KR, 2));
  rec.implies("k-weak hierarchy => (k+1)-weak hierarchy", h(P::K_WEAK_HIER, k), h(P::K_WEAK_HIER, k + 1));
  rec.implies("k-weak hierarchy => (KR) for k", h(P::K_WEAK_HIER, k), h(P::KR, k));
  if (f.holds(P::WEAK_HIER, none))
    rec.iff("weak hierarchy: (KC) for k=2 <=> closed", h(P::KC, 2), h(P::CLOSED));
}

}  // namespace theorems

// ---------------------------------------------------------------------------
// Registry.

enum class Direction { iff, implies, mixed };

struct TheoremEntry {
  TheoremId id;
  std::string_view statement;
  Direction direction;
  bool per_k;
  std::function<void(SetFacts&, int, Recorder&)> sets;
  std::function<void(DagFacts&, int, Recorder&, std::size_t)> dag;
  std::function<void(TransitFacts&, Recorder&)> transit;
};

inline const std::vector<TheoremEntry>& theorem_registry() {
  using namespace theorems;
  static const std::vector<TheoremEntry> table = {
      {TheoremId::OBS1, "k-weak hierarchy iff every A with |A| > k has z in A with z in cl(A - z)", Direction::iff, true,
       obs1, nullptr, nullptr},
      {TheoremId::PROP1, "k-weak hierarchy iff every non-empty A has U within A, |U| <= k, cl(A) = cl(U)", Direction::iff,
       true, prop1, nullptr, nullptr},
      {TheoremId::LEM2, "v <= w implies C(v) within C(w)", Direction::implies, false, nullptr,
       [](DagFacts& f, int, Recorder& r, std::size_t) { lem2(f, r); }, nullptr},
      {TheoremId::FACT2, "lca(A) defined implies (i), (ii) and (iii)", Direction::implies, false, nullptr,
       [](DagFacts& f, int, Recorder& r, std::size_t m) { fact2(f, r, m); }, nullptr},
      {TheoremId::LEM3, "Hasse(C_R) is a network iff R satisfies (a')", Direction::iff, false, nullptr, nullptr, lem3},
      {TheoremId::LEM4, "lca-property implies C_G closed", Direction::implies, false, nullptr,
       [](DagFacts& f, int, Recorder& r, std::size_t) { lem4(f, r); }, nullptr},
      {TheoremId::FACT3, "lca-property implies C(lca(Y)) = cl(Y) for all non-empty Y", Direction::implies, false, nullptr,
       [](DagFacts& f, int, Recorder& r, std::size_t m) { fact3(f, r, m); }, nullptr},
      {TheoremId::PROP2, "k-lca implies R_G monotone k-ary transit, R_G = R_{C_G}, C_G pre-k-ary", Direction::implies,
       true, nullptr, [](DagFacts& f, int k, Recorder& r, std::size_t) { prop2(f, k, r); }, nullptr},
      {TheoremId::PROP3, "under (PCC): k-lca iff C_G pre-k-ary", Direction::iff, true, nullptr,
       [](DagFacts& f, int k, Recorder& r, std::size_t) { prop3(f, k, r); }, nullptr},
      {TheoremId::THM1, "clustering system pre-k-ary iff some DAG with k-lca has C_G = C", Direction::iff, true, thm1,
       nullptr, nullptr},
      {TheoremId::LEM5, "R monotone implies Hasse(C_R) has k-lca", Direction::implies, false, nullptr, nullptr, lem5},
      {TheoremId::THM2, "R monotone iff some DAG with k-lca has C_G = C_R and R_{C_G} = R", Direction::iff, false,
       nullptr, nullptr, thm2},
      {TheoremId::LEM9, "(CL) implies C(lca(C(v))) = C(v)", Direction::implies, false, nullptr,
       [](DagFacts& f, int, Recorder& r, std::size_t) { lem9(f, r); }, nullptr},
      {TheoremId::PROP5, "under k-lca: strict k-lca iff C_G k-ary T-system; then R_G identifies C_G", Direction::mixed,
       true, nullptr, [](DagFacts& f, int k, Recorder& r, std::size_t) { prop5(f, k, r); }, nullptr},
      {TheoremId::LEM6, "strong k-lca implies strict k-lca", Direction::implies, true, nullptr,
       [](DagFacts& f, int k, Recorder& r, std::size_t) { lem6(f, k, r); }, nullptr},
      {TheoremId::PROP6, "under lca-property: strong k-lca iff closure criterion on C_G", Direction::iff, true, nullptr,
       [](DagFacts& f, int k, Recorder& r, std::size_t) { prop6(f, k, r); }, nullptr},
      {TheoremId::THM3, "strong k-lca iff lca-property and C_G k-weak hierarchy", Direction::iff, true, nullptr,
       [](DagFacts& f, int k, Recorder& r, std::size_t) { thm3(f, k, r); }, nullptr},
      {TheoremId::IMPL_DIAGRAM, "implication diagram between the DAG and set-system properties", Direction::mixed, true,
       impl_sets, [](DagFacts& f, int k, Recorder& r, std::size_t) { impl_dag(f, k, r); }, nullptr},
  };
  return table;
}

inline const TheoremEntry& theorem_entry(TheoremId id) {
  for (const auto& e : theorem_registry())
    if (e.id == id) return e;
  throw Error(ErrorCode::UnknownTheorem, "unregistered theorem");
}

// ---------------------------------------------------------------------------
// Instance streams and the driver.

struct ValidateOptions {
  int jobs = 1;
  std::size_t max_leaves = kDefaultMaxLeaves;
};

namespace detail {

enum class StreamKind { sets, transit, dag, random_dag };

struct Stream {
  StreamKind kind;
  int size_param;  // n for sets/transit, vertex count for dag
  int k = 0;       // arity for transit
  std::uint64_t length = 0;
};

struct Chunk {
  std::size_t stream;
  std::uint64_t begin, end;
};

struct ChunkResult {
  std::vector<std::uint64_t> instances;
  std::vector<std::uint64_t> discrepancy_count;
  std::vector<std::vector<Discrepancy>> discrepancies;
  std::vector<std::uint64_t> divergence_count;
  std::vector<std::vector<ReadingDivergence>> divergences;
};

inline Dag random_validation_dag(std::uint64_t seed, std::uint64_t i, int max_vertices) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + i);
  int vertices = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
  double density = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return random_dag(rng(), vertices, density);
}

}  // namespace detail

inline std::vector<ValidationReport> cross_validate(std::span<const TheoremId> ids, const Bounds& bounds,
                                                    const ValidateOptions& opts = {}) {
  check_bounds(bounds);
  const auto start = std::chrono::steady_clock::now();
  std::vector<const TheoremEntry*> entries;
  for (TheoremId id : ids) entries.push_back(&theorem_entry(id));
  const std::size_t t_count = entries.size();
  bool need_sets = false, need_dag = false, need_transit = false;
  for (const auto* e : entries) {
    need_sets |= static_cast<bool>(e->sets);
    need_dag |= static_cast<bool>(e->dag);
    need_transit |= static_cast<bool>(e->transit);
  }

  using detail::StreamKind;
  std::vector<detail::Stream> streams;
  if (need_sets)
    for (int n = 1; n <= bounds.n; ++n)
      streams.push_back({StreamKind::sets, n, 0, SetSystemEnumeration(n, bounds.scope).size()});
  if (need_transit)
    for (int n = 1; n <= bounds.n; ++n)
      for (int k = bounds.k_lo; k <= bounds.k_hi; ++k)
        streams.push_back({StreamKind::transit, n, k, TransitEnumeration(n, k).size()});
  if (need_dag) {
    for (int v = 1; v <= bounds.max_vertices; ++v)
      streams.push_back({StreamKind::dag, v, 0, DagEnumeration(v).size()});
    if (bounds.random_dags) streams.push_back({StreamKind::random_dag, bounds.random_vertices, 0, bounds.random_dags});
  }

  constexpr std::uint64_t kChunk = 8192;
  std::vector<detail::Chunk> chunks;
  for (std::size_t s = 0; s < streams.size(); ++s)
    for (std::uint64_t b = 0; b < streams[s].length; b += kChunk)
      chunks.push_back({s, b, std::min(streams[s].length, b + kChunk)});

  std::vector<detail::ChunkResult> results(chunks.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    Recorder rec;
    while (true) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks.size()) return;
      const auto& chunk = chunks[c];
      const auto& stream = streams[chunk.stream];
      auto& out = results[c];
      out.instances.assign(t_count, 0);
      out.discrepancy_count.assign(t_count, 0);
      out.discrepancies.assign(t_count, {});
      out.divergence_count.assign(t_count, 0);
      out.divergences.assign(t_count, {});

      auto flush = [&](std::size_t t, const char* kind, std::optional<int> k, const auto& serialize) {
        for (auto& e : rec.entries()) {
          if (out.discrepancies[t].size() < kMaxListed)
            out.discrepancies[t].push_back({kind, serialize(), k, std::move(e.clause), e.left, e.right});
          ++out.discrepancy_count[t];
        }
        for (auto& d : rec.divergences()) {
          if (out.divergences[t].size() < kMaxListed)
            out.divergences[t].push_back({serialize(), d.k, d.within, d.literal});
          ++out.divergence_count[t];
        }
        rec.clear();
      };

      try {
        std::optional<SetSystemEnumeration> sets;
        std::optional<TransitEnumeration> transit;
        std::optional<DagEnumeration> dags;
        if (stream.kind == StreamKind::sets) sets.emplace(stream.size_param, bounds.scope);
        if (stream.kind == StreamKind::transit) transit.emplace(stream.size_param, stream.k);
        if (stream.kind == StreamKind::dag) dags.emplace(stream.size_param);

        for (std::uint64_t i = chunk.begin; i < chunk.end; ++i) {
          if (sets) {
            SetSystem sys = sets->at(i);
            if (bounds.member_cap && sys.members().size() > static_cast<std::size_t>(bounds.member_cap)) continue;
            SetFacts f(sys, opts.max_leaves);
            auto ser = [&] { return f.serialize(); };
            for (std::size_t t = 0; t < t_count; ++t) {
              if (!entries[t]->sets) continue;
              ++out.instances[t];
              for (int k = bounds.k_lo; k <= bounds.k_hi; ++k) {
                entries[t]->sets(f, k, rec);
                flush(t, "sets", k, ser);
              }
            }
          } else if (transit) {
            TransitFunction r = transit->at(i);
            TransitFacts f(r);
            auto ser = [&] { return f.serialize(); };
            for (std::size_t t = 0; t < t_count; ++t) {
              if (!entries[t]->transit) continue;
              ++out.instances[t];
              entries[t]->transit(f, rec);
              flush(t, "transit", r.arity(), ser);
            }
          } else {
            std::optional<Dag> g;
            if (dags)
              g = dags->at(i);
            else
              g = detail::random_validation_dag(bounds.seed, i, stream.size_param);
            if (!g) continue;
            DagFacts f(*g, opts.max_leaves);
            auto ser = [&] { return f.serialize(); };
            for (std::size_t t = 0; t < t_count; ++t) {
              if (!entries[t]->dag) continue;
              ++out.instances[t];
              if (!entries[t]->per_k) {
                entries[t]->dag(f, 0, rec, opts.max_leaves);
                flush(t, "dag", std::nullopt, ser);
                continue;
              }
              for (int k = bounds.k_lo; k <= bounds.k_hi; ++k) {
                entries[t]->dag(f, k, rec, opts.max_leaves);
                flush(t, "dag", k, ser);
              }
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = chunks.size();
        return;
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::vector<ValidationReport> reports(t_count);
  for (std::size_t t = 0; t < t_count; ++t) {
    auto& r = reports[t];
    r.theorem = entries[t]->id;
    r.bounds = bounds;
    r.elapsed_ms = elapsed;
    for (auto& c : results) {
      r.instances_checked += c.instances[t];
      r.discrepancy_count += c.discrepancy_count[t];
      r.divergence_count += c.divergence_count[t];
      for (auto& d : c.discrepancies[t])
        if (r.discrepancies.size() < kMaxListed) r.discrepancies.push_back(std::move(d));
      for (auto& d : c.divergences[t])
        if (r.reading_divergences.size() < kMaxListed) r.reading_divergences.push_back(std::move(d));
    }
  }
  return reports;
}

inline ValidationReport cross_validate(TheoremId id, const Bounds& bounds, const ValidateOptions& opts = {}) {
  TheoremId ids[] = {id};
  return cross_validate(ids, bounds, opts).front();
}

inline ValidationReport cross_validate(std::string_view id, const Bounds& bounds, const ValidateOptions& opts = {}) {
  return cross_validate(parse_theorem_id(id), bounds, opts);
}

}  // namespace lcadag
