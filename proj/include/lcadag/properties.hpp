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

// Property names as used on the command line, and evaluation of a list of
// them against one object.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/lca_props.hpp"
#include "lcadag/report.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transit.hpp"

namespace lcadag {

enum class Domain { dag, sets, transit };

struct PropertyName {
  std::string_view name;
  Domain domain;
  bool needs_k;
};

inline constexpr PropertyName kPropertyNames[] = {
    {"pcc", Domain::dag, false},
    {"cl", Domain::dag, false},
    {"lca", Domain::dag, false},
    {"klca", Domain::dag, true},
    {"strict", Domain::dag, true},
    {"strong", Domain::dag, true},
    {"network", Domain::dag, false},
    {"ks", Domain::sets, false},
    {"k1", Domain::sets, false},
    {"kc", Domain::sets, true},
    {"kr", Domain::sets, true},
    {"closed", Domain::sets, false},
    {"weak", Domain::sets, false},
    {"kweak", Domain::sets, true},
    {"kweak-closure", Domain::sets, true},
    {"kweak-removal", Domain::sets, true},
    {"tsystem", Domain::sets, true},
    {"clustering", Domain::sets, false},
    {"identified", Domain::sets, true},
    {"hasse-network", Domain::sets, false},
    {"t1", Domain::transit, false},
    {"t3", Domain::transit, false},
    {"monotone", Domain::transit, false},
    {"aprime", Domain::transit, false},
    {"hasse-network", Domain::transit, false},
};

inline const PropertyName* find_property(std::string_view name, Domain d) {
  for (const auto& p : kPropertyNames)
    if (p.name == name && p.domain == d) return &p;
  return nullptr;
}

// Names accepted for a domain. DAG verbs also accept set-system names, which
// are evaluated on the cluster system.
inline std::vector<std::string> property_names(Domain d) {
  std::vector<std::string> out;
  for (const auto& p : kPropertyNames)
    if (p.domain == d) out.emplace_back(p.name);
  return out;
}

namespace detail {

inline const PropertyName& resolve(std::string_view name, Domain d) {
  const PropertyName* p = find_property(name, d);
  if (!p && d == Domain::dag) p = find_property(name, Domain::sets);
  if (!p) throw Error(ErrorCode::UnknownProperty, "unknown property '" + std::string(name) + "'");
  return *p;
}

inline int need_k(const PropertyName& p, std::optional<int> k) {
  if (!k) throw Error(ErrorCode::MissingK, "property '" + std::string(p.name) + "' requires --k");
  return *k;
}

// Without an explicit list: every property of the domain, skipping the
// k-parameterized ones when no k is given.
inline std::vector<std::string> default_names(Domain d, std::optional<int> k) {
  std::vector<std::string> out;
  for (const auto& p : kPropertyNames)
    if (p.domain == d && (k || !p.needs_k)) out.emplace_back(p.name);
  return out;
}

inline PropertyReport eval_set_property(const SetSystem& sys, const PropertyName& p, std::optional<int> k,
                                        std::size_t max_leaves) {
  const std::string_view n = p.name;
  if (n == "ks") return check_ks(sys);
  if (n == "k1") return check_k1(sys);
  if (n == "closed") return is_closed(sys);
  if (n == "weak") return is_weak_hierarchy(sys);
  if (n == "clustering") return is_clustering_system(sys);
  if (n == "hasse-network") return hasse_is_network(sys);
  const int kk = need_k(p, k);
  if (n == "kc") return check_kc(sys, kk);
  if (n == "kr") return check_kr(sys, kk);
  if (n == "kweak") return is_k_weak_hierarchy(sys, kk);
  if (n == "kweak-closure") return k_weak_closure_criterion(sys, kk, max_leaves);
  if (n == "kweak-removal") return k_weak_removal_criterion(sys, kk, max_leaves);
  if (n == "tsystem") return is_t_system(sys, kk);
  if (n == "identified") return is_identified_by_canonical(sys, kk);
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + std::string(n) + "'");
}

}  // namespace detail

inline std::vector<PropertyReport> evaluate_sets(const SetSystem& sys, std::span<const std::string> names,
                                                 std::optional<int> k, std::size_t max_leaves = kDefaultMaxLeaves) {
  std::vector<std::string> all;
  if (names.empty()) names = all = detail::default_names(Domain::sets, k);
  std::vector<PropertyReport> out;
  for (const auto& name : names) out.push_back(detail::eval_set_property(sys, detail::resolve(name, Domain::sets), k, max_leaves));
  return out;
}

inline std::vector<PropertyReport> evaluate_dag(const Dag& g, std::span<const std::string> names, std::optional<int> k,
                                                std::size_t max_leaves = kDefaultMaxLeaves) {
  std::vector<std::string> all;
  if (names.empty()) names = all = detail::default_names(Domain::dag, k);
  std::optional<SetSystem> clusters;
  std::vector<PropertyReport> out;
  for (const auto& name : names) {
    const PropertyName& p = detail::resolve(name, Domain::dag);
    if (p.domain == Domain::sets) {
      if (!clusters) clusters = cluster_system(g);
      out.push_back(detail::eval_set_property(*clusters, p, k, max_leaves));
      continue;
    }
    const std::string_view n = p.name;
    if (n == "pcc") out.push_back(has_pcc(g));
    else if (n == "cl") out.push_back(has_cl(g));
    else if (n == "lca") out.push_back(has_lca_property(g, max_leaves));
    else if (n == "network") out.push_back(is_network_report(g));
    else if (n == "klca") out.push_back(has_klca_property(g, detail::need_k(p, k)));
    else if (n == "strict") out.push_back(has_strict_klca(g, detail::need_k(p, k)));
    else if (n == "strong") out.push_back(has_strong_klca(g, detail::need_k(p, k), max_leaves));
  }
  return out;
}

// Transit properties take their parameter from the table's arity; a
// conflicting --k is rejected.
inline std::vector<PropertyReport> evaluate_transit(const TransitFunction& r, std::span<const std::string> names,
                                                    std::optional<int> k) {
  if (k && *k != r.arity())
    throw Error(ErrorCode::InvalidArgument,
                "--k " + std::to_string(*k) + " does not match the table arity " + std::to_string(r.arity()));
  std::vector<std::string> all;
  if (names.empty()) names = all = detail::default_names(Domain::transit, k);
  std::vector<PropertyReport> out;
  for (const auto& name : names) {
    const std::string_view n = detail::resolve(name, Domain::transit).name;
    if (n == "t1") out.push_back(check_t1(r));
    else if (n == "t3") out.push_back(check_t3(r));
    else if (n == "monotone") out.push_back(check_monotone(r));
    else if (n == "aprime") out.push_back(check_a_prime(r));
    else if (n == "hasse-network") out.push_back(hasse_is_network(transit_sets(r)));
  }
  return out;
}

// Dispatch by Property value. DAG overloads evaluate set properties on the
// cluster system; transit overloads evaluate NETWORK on Hasse(C_R).
inline PropertyReport evaluate_property(const SetSystem& sys, Property p, std::optional<int> k,
                                        std::size_t max_leaves = kDefaultMaxLeaves) {
  auto need = [&] {
    if (!k) throw Error(ErrorCode::MissingK, std::string(to_string(p)) + " requires k");
    return *k;
  };
  switch (p) {
    case Property::KS: return check_ks(sys);
    case Property::K1: return check_k1(sys);
    case Property::KC: return check_kc(sys, need());
    case Property::KR: return check_kr(sys, need());
    case Property::CLOSED: return is_closed(sys);
    case Property::WEAK_HIER: return is_weak_hierarchy(sys);
    case Property::K_WEAK_HIER: return is_k_weak_hierarchy(sys, need());
    case Property::K_WEAK_CLOSURE: return k_weak_closure_criterion(sys, need(), max_leaves);
    case Property::K_WEAK_REMOVAL: return k_weak_removal_criterion(sys, need(), max_leaves);
    case Property::T_SYSTEM: return is_t_system(sys, need());
    case Property::CLUSTERING: return is_clustering_system(sys);
    case Property::IDENTIFIED: return is_identified_by_canonical(sys, need());
    case Property::NETWORK: return hasse_is_network(sys);
    default: break;
  }
  throw Error(ErrorCode::UnknownProperty, std::string(to_string(p)) + " is not a set-system property");
}

inline PropertyReport evaluate_property(const Dag& g, Property p, std::optional<int> k,
                                        std::size_t max_leaves = kDefaultMaxLeaves) {
  auto need = [&] {
    if (!k) throw Error(ErrorCode::MissingK, std::string(to_string(p)) + " requires k");
    return *k;
  };
  switch (p) {
    case Property::PCC: return has_pcc(g);
    case Property::CL: return has_cl(g);
    case Property::LCA: return has_lca_property(g, max_leaves);
    case Property::KLCA: return has_klca_property(g, need());
    case Property::STRICT_KLCA: return has_strict_klca(g, need());
    case Property::STRONG_KLCA: return has_strong_klca(g, need(), max_leaves);
    case Property::NETWORK: return is_network_report(g);
    default: return evaluate_property(cluster_system(g), p, k, max_leaves);
  }
}

inline PropertyReport evaluate_property(const TransitFunction& r, Property p) {
  switch (p) {
    case Property::T1: return check_t1(r);
    case Property::T3: return check_t3(r);
    case Property::MONOTONE: return check_monotone(r);
    case Property::A_PRIME: return check_a_prime(r);
    case Property::NETWORK: return hasse_is_network(transit_sets(r));
    default: break;
  }
  throw Error(ErrorCode::UnknownProperty, std::string(to_string(p)) + " is not a transit property");
}

}  // namespace lcadag
