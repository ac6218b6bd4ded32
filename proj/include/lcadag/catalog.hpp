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

// Separating instances for non-implications between the properties. Every
// entry is re-verified each time the catalog is built.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lcadag/error.hpp"
#include "lcadag/fixtures.hpp"
#include "lcadag/generate.hpp"
#include "lcadag/hasse.hpp"
#include "lcadag/report_io.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/text_format.hpp"

namespace lcadag {

struct CatalogEntry {
  std::string claim;     // "P =/=> Q"
  std::string instance;  // fixture or generated instance name
  Instance payload;
  std::vector<Expectation> separation;
  std::vector<FixtureClaim> claims;
};

// Hasse diagram of every non-empty subset of an n-element set.
inline Dag full_power_set_hasse(int n) {
  std::vector<Subset> members;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m = 1; m <= full; ++m) members.push_back(Subset::from_mask(static_cast<std::size_t>(n), m));
  return build_hasse(SetSystem(GroundSet(element_labels(static_cast<std::size_t>(n))), std::move(members))).dag;
}

// Hasse diagram of: B with |B| = k+1, every subset of B of size 2..k,
// B + {u}, B + {v}, X = B + {u, v}, and all singletons. Every lca of at most
// k leaves is defined, but B has the two minimal upper bounds B + {u} and
// B + {v}.
inline Dag twin_tops_hasse(int k) {
  const auto b = static_cast<std::size_t>(k + 1);
  const std::size_t n = b + 2;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b; ++i) labels.push_back("b" + std::to_string(i));
  labels.push_back("u");
  labels.push_back("v");
  std::vector<Subset> members;
  const std::uint64_t base = (std::uint64_t{1} << b) - 1;
  for (std::uint64_t m = 1; m <= base; ++m) {
    int c = std::popcount(m);
    if (c == 1 || (c >= 2 && c <= k)) members.push_back(Subset::from_mask(n, m));
  }
  members.push_back(Subset::from_mask(n, std::uint64_t{1} << b));
  members.push_back(Subset::from_mask(n, std::uint64_t{1} << (b + 1)));
  members.push_back(Subset::from_mask(n, base | (std::uint64_t{1} << b)));
  members.push_back(Subset::from_mask(n, base | (std::uint64_t{1} << (b + 1))));
  members.push_back(Subset::from_mask(n, (std::uint64_t{1} << n) - 1));
  return build_hasse(SetSystem(GroundSet(std::move(labels)), std::move(members))).dag;
}

namespace detail {

inline Expectation holds(Property p, std::optional<int> k, std::string source) {
  return {p, k, true, std::nullopt, std::move(source)};
}
inline Expectation fails(Property p, std::optional<int> k, std::string source) {
  return {p, k, false, std::nullopt, std::move(source)};
}

}  // namespace detail

// Throws FixtureAssertionFailed if any entry stops separating its pair.
inline std::vector<CatalogEntry> counterexample_catalog() {
  using detail::fails;
  using detail::holds;
  const std::string computed = "direct computation";
  const std::string no_impl = "there are no implications between";
  std::vector<CatalogEntry> out;

  Fixture fig1 = make_fixture(FixtureName::FIG1);
  out.push_back({"closed and pre-binary =/=> pairwise lca-property", "FIG1", fig1.instance,
                 {holds(Property::CLOSED, std::nullopt, "is closed and satisfies"),
                  holds(Property::KC, 2, "satisfies \\AX{(KC)} for every"),
                  fails(Property::KLCA, 2, "The example in this Figure shows that the converse is not true")},
                 {}});

  Fixture fig2 = make_fixture(FixtureName::FIG2);
  out.push_back({"pre-k-ary =/=> k-lca without (PCC)", "FIG2", fig2.instance,
                 {fails(Property::PCC, std::nullopt, computed), holds(Property::KC, 2, "\\AX{(KC)} for $k=2$"),
                  holds(Property::KC, 3, "\\AX{(KC)} for $k=3$"),
                  fails(Property::KLCA, 2, "is not a pairwise $\\lca$-network"),
                  fails(Property::KLCA, 3, "is not a \\textit{3}-$\\lca$-network")},
                 {}});

  Fixture fig3 = make_fixture(FixtureName::FIG3);
  out.push_back({"lca-property =/=> strong 2-lca", "FIG3", fig3.instance,
                 {holds(Property::LCA, std::nullopt, "$G$ is an $\\lca$-network"),
                  fails(Property::STRONG_KLCA, 2, "not a strong-2-$\\lca$-network")},
                 {}});

  Fixture ex1 = make_fixture(FixtureName::EX1);
  out.push_back({"Hasse(C_R) has k-lca =/=> R monotone", "EX1", ex1.instance,
                 {fails(Property::MONOTONE, std::nullopt, "not monotone since")},
                 {{"Hasse(C_R) has the pairwise lca-property", "having pairwise", [](const Instance& x) {
                     return has_klca_property(build_hasse(transit_sets(x.transit())).dag, 2).holds;
                   }}}});

  Instance full3{full_power_set_hasse(3)};
  Instance full4{full_power_set_hasse(4)};
  Instance twin2{twin_tops_hasse(2)};
  Instance twin3{twin_tops_hasse(3)};
  out.push_back({"lca-property =/=> strict 2-lca", "FULL3", full3,
                 {holds(Property::LCA, std::nullopt, no_impl), fails(Property::STRICT_KLCA, 2, no_impl)}, {}});
  out.push_back({"strict 2-lca =/=> lca-property", "TWIN_TOPS2", twin2,
                 {holds(Property::STRICT_KLCA, 2, no_impl), fails(Property::LCA, std::nullopt, no_impl)}, {}});
  out.push_back({"strict 3-lca =/=> strict 2-lca", "FULL3", full3,
                 {holds(Property::STRICT_KLCA, 3, no_impl), fails(Property::STRICT_KLCA, 2, no_impl)}, {}});
  out.push_back({"strict 2-lca =/=> strict 3-lca", "TWIN_TOPS2", twin2,
                 {holds(Property::STRICT_KLCA, 2, no_impl), fails(Property::STRICT_KLCA, 3, no_impl)}, {}});
  out.push_back({"lca-property =/=> strict 3-lca", "FULL4", full4,
                 {holds(Property::LCA, std::nullopt, no_impl), fails(Property::STRICT_KLCA, 3, no_impl)}, {}});
  out.push_back({"strict 3-lca =/=> lca-property", "TWIN_TOPS3", twin3,
                 {holds(Property::STRICT_KLCA, 3, no_impl), fails(Property::LCA, std::nullopt, no_impl)}, {}});

  std::vector<std::string> failed;
  for (const auto& e : out)
    for (const auto& f : verify(e.payload, e.separation, e.claims)) failed.push_back(e.claim + " on " + e.instance + ": " + f);
  if (!failed.empty()) {
    std::string msg = "catalog entries no longer separate:";
    for (const auto& f : failed) msg += "\n  " + f;
    throw Error(ErrorCode::FixtureAssertionFailed, msg, failed);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["claim"] = e.claim;
  j["instance"] = e.instance;
  nlohmann::ordered_json sep = nlohmann::ordered_json::array();
  for (const auto& s : e.separation) sep.push_back(describe(s));
  for (const auto& c : e.claims) sep.push_back(c.statement);
  j["separation"] = std::move(sep);
  j["payload"] = e.payload.is_dag() ? emit_dag(e.payload.dag()) : emit_transit(e.payload.transit());
  return j;
}

}  // namespace lcadag
