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

// Immutable DAGs with precomputed reachability.
//
// An edge (u, v) points from ancestor u to descendant v, so v <= u in the
// induced partial order. The order is reflexive: every vertex is its own
// ancestor and descendant. Leaves are the vertices without outgoing edges;
// they are indexed in sorted label order, and that index is the bit position
// used for clusters and leaf subsets.
//
// Construction computes the transitive closure as one bitset per vertex in
// each direction, so ancestor/descendant queries are bitset lookups and
// common ancestors of a set are a chain of ANDs.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcadag/bitset.hpp"
#include "lcadag/error.hpp"
#include "lcadag/report.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

struct VertexId {
  std::size_t index = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

enum class LcaStatus { unique, none, multiple };

struct LcaResult {
  LcaStatus status = LcaStatus::none;
  VertexSet candidates;  // the full LCA set

  bool defined() const { return status == LcaStatus::unique; }
  std::optional<VertexId> vertex() const {
    if (!defined()) return std::nullopt;
    return VertexId{candidates.first()};
  }
};

class Dag {
 public:
  Dag() = default;

  // Validates and freezes a DAG. Duplicate edges are collapsed.
  static Dag build(std::vector<std::string> vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    Dag g;
    g.init_labels(std::move(vertices));
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    idx.reserve(edges.size());
    for (const auto& [p, c] : edges) idx.emplace_back(g.id(p).index, g.id(c).index);
    g.init_edges(std::move(idx));
    return g;
  }

  // Same as build() with edges given as vertex indices into `vertices`.
  static Dag from_indices(std::vector<std::string> vertices, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    Dag g;
    g.init_labels(std::move(vertices));
    for (const auto& [p, c] : edges) {
      if (p >= g.labels_.size() || c >= g.labels_.size())
        throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    }
    g.init_edges(std::move(edges));
    return g;
  }

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v.index]; }

  std::optional<VertexId> find(std::string_view label) const {
    auto it = std::lower_bound(by_label_.begin(), by_label_.end(), label,
                               [](const auto& e, std::string_view l) { return e.first < l; });
    if (it == by_label_.end() || it->first != label) return std::nullopt;
    return VertexId{it->second};
  }
  VertexId id(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + std::string(label) + "'", {std::string(label)});
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& children(VertexId v) const { return children_[v.index]; }
  const std::vector<std::size_t>& parents(VertexId v) const { return parents_[v.index]; }
  const std::vector<std::size_t>& topological_order() const { return topo_; }

  // Reflexive descendant / ancestor sets.
  const VertexSet& descendants(VertexId v) const { return desc_[v.index]; }
  const VertexSet& ancestors(VertexId v) const { return anc_[v.index]; }

  // v <= w: there is a directed path from w to v (or v == w).
  bool precedes(VertexId v, VertexId w) const { return desc_[w.index].test(v.index); }
  bool is_comparable(VertexId u, VertexId v) const { return precedes(u, v) || precedes(v, u); }

  // Leaves in canonical (sorted label) order.
  std::size_t leaf_count() const { return leaf_vertex_.size(); }
  const std::vector<std::string>& leaf_labels() const { return leaf_ground_.labels(); }
  const GroundSet& leaf_ground() const { return leaf_ground_; }
  VertexId leaf_vertex(std::size_t leaf_index) const { return VertexId{leaf_vertex_[leaf_index]}; }
  std::optional<std::size_t> leaf_index(VertexId v) const {
    std::size_t i = leaf_of_vertex_[v.index];
    if (i == kNotALeaf) return std::nullopt;
    return i;
  }
  Subset leaves() const { return Subset::full(leaf_count()); }
  VertexSet leaf_vertices() const {
    VertexSet s(vertex_count());
    for (std::size_t v : leaf_vertex_) s.set(v);
    return s;
  }

  // C(v): the leaves below v.
  const Subset& cluster(VertexId v) const { return clusters_[v.index]; }
  // Anc(x) for the leaf with the given canonical index.
  const VertexSet& leaf_ancestors(std::size_t leaf_index) const { return anc_[leaf_vertex_[leaf_index]]; }

  // Anc(Y) for a non-empty vertex set.
  VertexSet common_ancestors(const VertexSet& y) const {
    if (y.none()) throw Error(ErrorCode::EmptyQuery, "common ancestors of the empty set");
    VertexSet out = VertexSet::full(vertex_count());
    y.for_each([&](std::size_t w) { out &= anc_[w]; });
    return out;
  }
  // Anc(A) for a non-empty leaf subset.
  VertexSet common_ancestors(const Subset& a) const {
    if (a.none()) throw Error(ErrorCode::EmptyQuery, "common ancestors of the empty set");
    VertexSet out = VertexSet::full(vertex_count());
    a.for_each([&](std::size_t i) { out &= anc_[leaf_vertex_[i]]; });
    return out;
  }

  // The inclusion-minimal elements of a vertex set under <=.
  VertexSet minimal_elements(const VertexSet& s) const {
    VertexSet out = s;
    s.for_each([&](std::size_t u) {
      VertexSet strict_above = anc_[u];
      strict_above.reset(u);
      out -= strict_above;
    });
    return out;
  }

  VertexSet lca_set(const VertexSet& y) const { return minimal_elements(common_ancestors(y)); }
  VertexSet lca_set(const Subset& a) const { return minimal_elements(common_ancestors(a)); }

  LcaResult unique_lca(const VertexSet& y) const { return classify(lca_set(y)); }
  LcaResult unique_lca(const Subset& a) const { return classify(lca_set(a)); }

  std::vector<VertexId> roots() const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (parents_[v].empty()) out.push_back(VertexId{v});
    return out;
  }
  // Exactly one vertex of in-degree 0.
  bool is_network() const { return roots().size() == 1; }

  // Label helpers.
  template <typename Range>
  VertexSet vertex_set(const Range& labels) const {
    VertexSet s(vertex_count());
    for (const auto& l : labels) s.set(id(l).index);
    return s;
  }
  VertexSet vertex_set(std::initializer_list<std::string_view> labels) const {
    VertexSet s(vertex_count());
    for (auto l : labels) s.set(id(l).index);
    return s;
  }
  template <typename Range>
  Subset leaf_subset(const Range& labels) const {
    Subset s(leaf_count());
    for (const auto& l : labels) s.set(require_leaf(l));
    return s;
  }
  Subset leaf_subset(std::initializer_list<std::string_view> labels) const {
    Subset s(leaf_count());
    for (auto l : labels) s.set(require_leaf(l));
    return s;
  }
  LabelSet labels_of(const VertexSet& s) const {
    LabelSet out;
    s.for_each([&](std::size_t v) { out.push_back(labels_[v]); });
    return sorted_labels(std::move(out));
  }
  LabelSet leaf_labels_of(const Subset& s) const { return leaf_ground_.labels_of(s); }

 private:
  static constexpr std::size_t kNotALeaf = static_cast<std::size_t>(-1);

  std::size_t require_leaf(std::string_view l) const {
    VertexId v = id(l);
    if (auto i = leaf_index(v)) return *i;
    throw Error(ErrorCode::NotALeaf, "'" + std::string(l) + "' is not a leaf", {std::string(l)});
  }

  static LcaResult classify(VertexSet lcas) {
    std::size_t c = lcas.count();
    LcaStatus s = c == 0 ? LcaStatus::none : (c == 1 ? LcaStatus::unique : LcaStatus::multiple);
    return {s, std::move(lcas)};
  }

  void init_labels(std::vector<std::string> vertices) {
    labels_ = std::move(vertices);
    if (labels_.empty()) throw Error(ErrorCode::EmptyGraph, "a DAG needs at least one vertex");
    by_label_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw Error(ErrorCode::EmptyLabel, "empty vertex label");
      by_label_.emplace_back(labels_[i], i);
    }
    std::sort(by_label_.begin(), by_label_.end());
    for (std::size_t i = 1; i < by_label_.size(); ++i)
      if (by_label_[i].first == by_label_[i - 1].first)
        throw Error(ErrorCode::DuplicateLabel, "duplicate vertex '" + by_label_[i].first + "'",
                    {by_label_[i].first});
  }

  void init_edges(std::vector<std::pair<std::size_t, std::size_t>> edges) {
    const std::size_t n = labels_.size();
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [p, c] : edges)
      if (p == c) throw Error(ErrorCode::CycleDetected, "self-loop at '" + labels_[p] + "'", {labels_[p], labels_[p]});
    edges_ = std::move(edges);
    children_.assign(n, {});
    parents_.assign(n, {});
    for (const auto& [p, c] : edges_) {
      children_[p].push_back(c);
      parents_[c].push_back(p);
    }

    // Kahn's algorithm; lowest index first keeps the order deterministic.
    std::vector<std::size_t> indeg(n);
    for (std::size_t v = 0; v < n; ++v) indeg[v] = parents_[v].size();
    std::vector<std::size_t> ready;
    for (std::size_t v = n; v-- > 0;)
      if (indeg[v] == 0) ready.push_back(v);
    topo_.clear();
    topo_.reserve(n);
    while (!ready.empty()) {
      std::size_t v = ready.back();
      ready.pop_back();
      topo_.push_back(v);
      for (std::size_t c : children_[v])
        if (--indeg[c] == 0) ready.push_back(c);
    }
    if (topo_.size() != n) throw_cycle(indeg);

    desc_.assign(n, VertexSet(n));
    anc_.assign(n, VertexSet(n));
    for (std::size_t i = n; i-- > 0;) {
      std::size_t v = topo_[i];
      desc_[v].set(v);
      for (std::size_t c : children_[v]) desc_[v] |= desc_[c];
    }
    for (std::size_t v : topo_) {
      anc_[v].set(v);
      for (std::size_t p : parents_[v]) anc_[v] |= anc_[p];
    }

    std::vector<std::string> leaf_labels;
    for (std::size_t v = 0; v < n; ++v)
      if (children_[v].empty()) leaf_labels.push_back(labels_[v]);
    std::sort(leaf_labels.begin(), leaf_labels.end());
    leaf_ground_ = GroundSet(leaf_labels);
    leaf_vertex_.resize(leaf_labels.size());
    leaf_of_vertex_.assign(n, kNotALeaf);
    for (std::size_t i = 0; i < leaf_labels.size(); ++i) {
      leaf_vertex_[i] = find(leaf_labels[i])->index;
      leaf_of_vertex_[leaf_vertex_[i]] = i;
    }
    clusters_.assign(n, Subset(leaf_vertex_.size()));
    for (std::size_t i = 0; i < leaf_vertex_.size(); ++i)
      anc_[leaf_vertex_[i]].for_each([&](std::size_t a) { clusters_[a].set(i); });
  }

  // Reports one directed cycle among the vertices Kahn could not remove.
  [[noreturn]] void throw_cycle(const std::vector<std::size_t>& indeg) const {
    const std::size_t n = labels_.size();
    // Every unremoved vertex has an unremoved parent; walk parents until a
    // vertex repeats.
    std::size_t start = 0;
    while (indeg[start] == 0) ++start;
    std::vector<std::size_t> seen_at(n, kNotALeaf);
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (seen_at[v] == kNotALeaf) {
      seen_at[v] = walk.size();
      walk.push_back(v);
      for (std::size_t p : parents_[v]) {
        if (indeg[p] != 0) {
          v = p;
          break;
        }
      }
    }
    // walk[seen_at[v]..] is the cycle in child->parent direction.
    std::vector<std::string> cycle;
    for (std::size_t i = walk.size(); i-- > seen_at[v];) cycle.push_back(labels_[walk[i]]);
    cycle.push_back(cycle.front());
    std::string text;
    for (std::size_t i = 0; i < cycle.size(); ++i) text += (i ? " -> " : "") + cycle[i];
    throw Error(ErrorCode::CycleDetected, "cycle " + text, std::move(cycle));
  }

  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, std::size_t>> by_label_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::size_t> topo_;
  std::vector<VertexSet> desc_;
  std::vector<VertexSet> anc_;
  GroundSet leaf_ground_;
  std::vector<std::size_t> leaf_vertex_;
  std::vector<std::size_t> leaf_of_vertex_;
  std::vector<Subset> clusters_;
};

// C_G: the distinct clusters of all vertices, over the leaf set.
inline SetSystem cluster_system(const Dag& g) {
  std::vector<Subset> members;
  members.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) members.push_back(g.cluster(VertexId{v}));
  return SetSystem(g.leaf_ground(), std::move(members));
}

}  // namespace lcadag
