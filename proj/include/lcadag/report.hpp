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

// Verdicts of the property checkers.
//
// A report names the property, its parameter k (if any), the verdict and an
// optional witness. Witnesses hold labels only, never indices, so a report
// is meaningful without the object it was computed from. A failing report
// always has a witness; a passing one may carry a certificate.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lcadag {

enum class Property {
  PCC,
  CL,
  LCA,
  KLCA,
  STRICT_KLCA,
  STRONG_KLCA,
  KS,
  K1,
  KC,
  KR,
  CLOSED,
  WEAK_HIER,
  K_WEAK_HIER,
  K_WEAK_CLOSURE,
  K_WEAK_REMOVAL,
  T_SYSTEM,
  CLUSTERING,
  T1,
  T3,
  MONOTONE,
  A_PRIME,
  NETWORK,
  IDENTIFIED,
};

inline std::string_view to_string(Property p) {
  switch (p) {
    case Property::PCC: return "PCC";
    case Property::CL: return "CL";
    case Property::LCA: return "LCA";
    case Property::KLCA: return "KLCA";
    case Property::STRICT_KLCA: return "STRICT_KLCA";
    case Property::STRONG_KLCA: return "STRONG_KLCA";
    case Property::KS: return "KS";
    case Property::K1: return "K1";
    case Property::KC: return "KC";
    case Property::KR: return "KR";
    case Property::CLOSED: return "CLOSED";
    case Property::WEAK_HIER: return "WEAK_HIER";
    case Property::K_WEAK_HIER: return "K_WEAK_HIER";
    case Property::K_WEAK_CLOSURE: return "K_WEAK_CLOSURE";
    case Property::K_WEAK_REMOVAL: return "K_WEAK_REMOVAL";
    case Property::T_SYSTEM: return "T_SYSTEM";
    case Property::CLUSTERING: return "CLUSTERING";
    case Property::T1: return "T1";
    case Property::T3: return "T3";
    case Property::MONOTONE: return "MONOTONE";
    case Property::A_PRIME: return "A_PRIME";
    case Property::NETWORK: return "NETWORK";
    case Property::IDENTIFIED: return "IDENTIFIED";
  }
  return "UNKNOWN";
}

// Sorted list of element or vertex labels.
using LabelSet = std::vector<std::string>;

inline LabelSet sorted_labels(LabelSet labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

// Ordered key -> label-set association, e.g. member -> spanning set.
using LabelMapping = std::vector<std::pair<std::string, LabelSet>>;

using WitnessValue =
    std::variant<bool, std::int64_t, std::string, LabelSet, std::vector<LabelSet>, LabelMapping>;

struct WitnessEntry {
  std::string key;
  WitnessValue value;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

// The primary counterexample or certificate is stored under "subject";
// further entries add context (LCA sets, closures, failing stage, ...).
class Witness {
 public:
  Witness() = default;

  Witness& add(std::string key, WitnessValue value) {
    entries_.push_back({std::move(key), std::move(value)});
    return *this;
  }

  const std::vector<WitnessEntry>& entries() const { return entries_; }

  const WitnessValue* find(std::string_view key) const {
    for (const auto& e : entries_)
      if (e.key == key) return &e.value;
    return nullptr;
  }

  // Convenience for tests: the subject as a label set, if it is one.
  std::optional<LabelSet> subject_set() const {
    const WitnessValue* v = find("subject");
    if (v == nullptr) return std::nullopt;
    if (const auto* s = std::get_if<LabelSet>(v)) return *s;
    return std::nullopt;
  }
  std::optional<std::vector<LabelSet>> subject_sets() const {
    const WitnessValue* v = find("subject");
    if (v == nullptr) return std::nullopt;
    if (const auto* s = std::get_if<std::vector<LabelSet>>(v)) return *s;
    return std::nullopt;
  }

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  std::vector<WitnessEntry> entries_;
};

struct PropertyReport {
  Property property;
  std::optional<int> k;
  bool holds = false;
  std::optional<Witness> witness;

  static PropertyReport pass(Property p, std::optional<int> k = std::nullopt,
                             std::optional<Witness> certificate = std::nullopt) {
    return {p, k, true, std::move(certificate)};
  }
  static PropertyReport fail(Property p, std::optional<int> k, Witness w) {
    return {p, k, false, std::move(w)};
  }

  explicit operator bool() const { return holds; }

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

}  // namespace lcadag
