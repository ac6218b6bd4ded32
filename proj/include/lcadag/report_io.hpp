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

// Text and JSON renderings of PropertyReport. Both are derived from the same
// report values and are byte-stable for a fixed input.

#pragma once

#include <span>
#include <string>
#include <variant>

#include "json.hpp"
#include "lcadag/report.hpp"

namespace lcadag {

enum class ReportFormat { text, json };

namespace detail {

inline std::string render_set(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

struct TextVisitor {
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(const std::string& s) const { return s; }
  std::string operator()(const LabelSet& s) const { return render_set(s); }
  std::string operator()(const std::vector<LabelSet>& sets) const {
    std::string out = "(";
    for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? "," : "") + render_set(sets[i]);
    return out + ")";
  }
  std::string operator()(const LabelMapping& m) const {
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + m[i].first + "->" + render_set(m[i].second);
    return out + "]";
  }
};

struct JsonVisitor {
  nlohmann::ordered_json operator()(bool b) const { return b; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(const LabelSet& s) const { return s; }
  nlohmann::ordered_json operator()(const std::vector<LabelSet>& sets) const { return sets; }
  nlohmann::ordered_json operator()(const LabelMapping& m) const {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
  }
};

}  // namespace detail

inline std::string render_value(const WitnessValue& v) { return std::visit(detail::TextVisitor{}, v); }

// "KLCA(k=2): FAIL witness={x,y} LCA={p,v,q}"
inline std::string render_text(const PropertyReport& r) {
  std::string out(to_string(r.property));
  if (r.k) out += "(k=" + std::to_string(*r.k) + ")";
  out += r.holds ? ": PASS" : ": FAIL";
  if (r.witness) {
    for (const auto& e : r.witness->entries())
      out += " " + (e.key == "subject" ? std::string("witness") : e.key) + "=" + render_value(e.value);
  }
  return out;
}

inline nlohmann::ordered_json to_json(const Witness& w) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& e : w.entries()) out[e.key] = std::visit(detail::JsonVisitor{}, e.value);
  return out;
}

inline nlohmann::ordered_json to_json(const PropertyReport& r) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["property"] = std::string(to_string(r.property));
  out["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
  out["holds"] = r.holds;
  out["witness"] = r.witness ? to_json(*r.witness) : nlohmann::ordered_json(nullptr);
  return out;
}

// JSON: one compact array. Text: one line per report.
inline std::string emit_report(std::span<const PropertyReport> reports, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump();
  }
  std::string out;
  for (const auto& r : reports) out += render_text(r) + "\n";
  return out;
}

}  // namespace lcadag
