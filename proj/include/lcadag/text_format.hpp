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

// Line-oriented text formats for DAGs, set systems and transit functions.
//
//   # DAG
//   vertex: r
//   edge: r x          # parent child; undeclared endpoints are added
//
//   # set system
//   ground: a b c d
//   set: a b
//
//   # transit function
//   ground: a b c d
//   arity: 2
//   map: a b -> a b c
//
// '#' starts a comment. Labels are whitespace-free tokens. The emitters
// write the canonical form, which parses back to an equal object.

#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/error.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transit.hpp"

namespace lcadag {

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string directive;
  std::size_t directive_column;
  std::vector<Token> args;
};

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

inline std::vector<Token> tokenize(std::string_view text, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    out.push_back({std::string(text.substr(start, i - start)), base_column + start});
  }
  return out;
}

// Splits the input into `directive: args` lines, dropping comments and
// blank lines.
inline std::vector<Line> split_lines(std::string_view input) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view raw = input.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t first = 0;
    while (first < raw.size() && is_space(raw[first])) ++first;
    if (first == raw.size()) {
      if (end == input.size()) break;
      continue;
    }
    std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) throw ParseError(number, first + 1, "expected 'directive: ...'");
    std::string_view key = raw.substr(first, colon - first);
    while (!key.empty() && is_space(key.back())) key.remove_suffix(1);
    out.push_back({number, std::string(key), first + 1, tokenize(raw.substr(colon + 1), colon + 2)});
    if (end == input.size()) break;
  }
  return out;
}

inline std::string locate(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
}

// Re-raises a construction error with a file position prepended.
[[noreturn]] inline void rethrow_at(const Error& e, std::size_t line, std::size_t column) {
  std::string what = e.what();
  std::string prefix = std::string(to_string(e.code())) + ": ";
  if (what.rfind(prefix, 0) == 0) what = what.substr(prefix.size());
  throw Error(e.code(), locate(line, column) + what, e.witness());
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Dag parse_dag(std::string_view text) {
  std::vector<std::string> vertices;
  std::map<std::string, std::size_t, std::less<>> declared_line;
  struct EdgeAt {
    std::string parent, child;
    std::size_t line, column;
  };
  std::vector<EdgeAt> edges;
  auto declare = [&](const detail::Token& t, std::size_t line, bool explicit_decl) {
    auto it = declared_line.find(t.text);
    if (it != declared_line.end()) {
      if (explicit_decl)
        throw Error(ErrorCode::DuplicateLabel, detail::locate(line, t.column) + "vertex '" + t.text + "' already declared",
                    {t.text});
      return;
    }
    declared_line.emplace(t.text, line);
    vertices.push_back(t.text);
  };
  for (const auto& l : detail::split_lines(text)) {
    if (l.directive == "vertex") {
      if (l.args.empty()) throw ParseError(l.number, l.directive_column, "vertex needs a label");
      for (const auto& t : l.args) declare(t, l.number, true);
    } else if (l.directive == "edge") {
      if (l.args.size() != 2) throw ParseError(l.number, l.directive_column, "edge needs exactly two labels");
      if (l.args[0].text == l.args[1].text)
        throw Error(ErrorCode::CycleDetected, detail::locate(l.number, l.args[0].column) + "self-loop at '" + l.args[0].text + "'",
                    {l.args[0].text, l.args[0].text});
      edges.push_back({l.args[0].text, l.args[1].text, l.number, l.args[0].column});
    } else {
      throw ParseError(l.number, l.directive_column, "unknown directive '" + l.directive + "'");
    }
  }
  // Endpoints seen only in edges follow the explicit vertex lines, in order
  // of first appearance.
  for (const auto& e : edges) {
    declare({e.parent, e.column}, e.line, false);
    declare({e.child, e.column}, e.line, false);
  }
  if (vertices.empty()) throw ParseError(1, 1, "no vertices");
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) pairs.emplace_back(e.parent, e.child);
  try {
    return Dag::build(std::move(vertices), pairs);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::CycleDetected && err.witness().size() >= 2) {
      for (const auto& e : edges)
        if (e.parent == err.witness()[0] && e.child == err.witness()[1]) detail::rethrow_at(err, e.line, e.column);
    }
    throw;
  }
}

inline SetSystem parse_set_system(std::string_view text) {
  std::optional<GroundSet> ground;
  std::vector<Subset> members;
  for (const auto& l : detail::split_lines(text)) {
    if (l.directive == "ground") {
      if (ground) throw ParseError(l.number, l.directive_column, "ground declared twice");
      std::vector<std::string> labels;
      for (const auto& t : l.args) labels.push_back(t.text);
      try {
        ground.emplace(std::move(labels));
      } catch (const Error& e) {
        detail::rethrow_at(e, l.number, l.directive_column);
      }
    } else if (l.directive == "set") {
      if (!ground) throw ParseError(l.number, l.directive_column, "set before ground");
      if (l.args.empty())
        throw Error(ErrorCode::EmptyMember, detail::locate(l.number, l.directive_column) + "empty member");
      Subset s(ground->size());
      for (const auto& t : l.args) {
        auto i = ground->find(t.text);
        if (!i)
          throw Error(ErrorCode::ElementNotInGround,
                      detail::locate(l.number, t.column) + "'" + t.text + "' is not in the ground set", {t.text});
        s.set(*i);
      }
      members.push_back(std::move(s));
    } else {
      throw ParseError(l.number, l.directive_column, "unknown directive '" + l.directive + "'");
    }
  }
  if (!ground) throw ParseError(1, 1, "missing 'ground:' line");
  return SetSystem(std::move(*ground), std::move(members));
}

struct TransitParseOptions {
  // Fill missing singleton entries with R({x}) = {x}.
  bool implicit_t3 = false;
};

inline TransitFunction parse_transit(std::string_view text, TransitParseOptions opts = {}) {
  std::optional<GroundSet> ground;
  std::optional<int> arity;
  std::vector<TransitFunction::Entry> table;
  std::size_t last_line = 1;
  auto read_set = [&](const std::vector<detail::Token>& toks, std::size_t line) {
    Subset s(ground->size());
    for (const auto& t : toks) {
      auto i = ground->find(t.text);
      if (!i)
        throw Error(ErrorCode::ElementNotInGround,
                    detail::locate(line, t.column) + "'" + t.text + "' is not in the ground set", {t.text});
      s.set(*i);
    }
    return s;
  };
  for (const auto& l : detail::split_lines(text)) {
    last_line = l.number;
    if (l.directive == "ground") {
      if (ground) throw ParseError(l.number, l.directive_column, "ground declared twice");
      std::vector<std::string> labels;
      for (const auto& t : l.args) labels.push_back(t.text);
      try {
        ground.emplace(std::move(labels));
      } catch (const Error& e) {
        detail::rethrow_at(e, l.number, l.directive_column);
      }
    } else if (l.directive == "arity") {
      if (arity) throw ParseError(l.number, l.directive_column, "arity declared twice");
      if (l.args.size() != 1) throw ParseError(l.number, l.directive_column, "arity needs one integer");
      try {
        std::size_t used = 0;
        arity = std::stoi(l.args[0].text, &used);
        if (used != l.args[0].text.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(l.number, l.args[0].column, "arity is not an integer");
      }
      if (*arity < 2) throw ParseError(l.number, l.args[0].column, "arity must be at least 2");
    } else if (l.directive == "map") {
      if (!ground || !arity) throw ParseError(l.number, l.directive_column, "map before ground and arity");
      std::size_t arrow = l.args.size();
      for (std::size_t i = 0; i < l.args.size(); ++i)
        if (l.args[i].text == "->") arrow = i;
      if (arrow == l.args.size()) throw ParseError(l.number, l.directive_column, "map needs '->'");
      std::vector<detail::Token> lhs(l.args.begin(), l.args.begin() + static_cast<std::ptrdiff_t>(arrow));
      std::vector<detail::Token> rhs(l.args.begin() + static_cast<std::ptrdiff_t>(arrow) + 1, l.args.end());
      Subset u = read_set(lhs, l.number);
      if (u.none() || u.count() > static_cast<std::size_t>(*arity))
        throw ParseError(l.number, l.directive_column, "left side must have 1..arity elements");
      for (const auto& e : table)
        if (e.first == u) throw ParseError(l.number, l.directive_column, "duplicate map entry");
      table.emplace_back(std::move(u), read_set(rhs, l.number));
    } else {
      throw ParseError(l.number, l.directive_column, "unknown directive '" + l.directive + "'");
    }
  }
  if (!ground) throw ParseError(1, 1, "missing 'ground:' line");
  if (!arity) throw ParseError(1, 1, "missing 'arity:' line");
  if (opts.implicit_t3) {
    for (std::size_t x = 0; x < ground->size(); ++x) {
      Subset s(ground->size());
      s.set(x);
      bool present = false;
      for (const auto& e : table) present = present || e.first == s;
      if (!present) table.emplace_back(s, s);
    }
  }
  try {
    return TransitFunction(std::move(*ground), *arity, std::move(table));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IncompleteTable) {
      std::string what = e.what();
      throw ParseError(last_line + 1, 1, what.substr(what.find(": ") + 2));
    }
    throw;
  }
}

inline std::string emit_dag(const Dag& g) {
  std::string out;
  for (const auto& l : g.labels()) out += "vertex: " + l + "\n";
  for (const auto& [p, c] : g.edges()) out += "edge: " + g.labels()[p] + " " + g.labels()[c] + "\n";
  return out;
}

namespace detail {
inline std::string join_in_order(const GroundSet& g, const Subset& s) {
  std::string out;
  s.for_each([&](std::size_t i) {
    if (!out.empty()) out += ' ';
    out += g.label(i);
  });
  return out;
}
}  // namespace detail

inline std::string emit_set_system(const SetSystem& sys) {
  std::string out = "ground:";
  for (const auto& l : sys.ground().labels()) out += " " + l;
  out += "\n";
  for (const auto& m : sys.members()) out += "set: " + detail::join_in_order(sys.ground(), m) + "\n";
  return out;
}

inline std::string emit_transit(const TransitFunction& r) {
  std::string out = "ground:";
  for (const auto& l : r.ground().labels()) out += " " + l;
  out += "\narity: " + std::to_string(r.arity()) + "\n";
  for (const auto& [u, v] : r.entries()) {
    out += "map: " + detail::join_in_order(r.ground(), u) + " ->";
    if (v.any()) out += " " + detail::join_in_order(r.ground(), v);
    out += "\n";
  }
  return out;
}

inline std::string to_dot(const Dag& g, std::string_view name = "G") {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "digraph " + std::string(name) + " {\n";
  for (const auto& l : g.labels()) out += "  " + quote(l) + ";\n";
  for (const auto& [p, c] : g.edges()) out += "  " + quote(g.labels()[p]) + " -> " + quote(g.labels()[c]) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace lcadag
