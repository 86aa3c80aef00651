// Copyright 2026 The gematch Authors.
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

#ifndef GEM_GRAPH_HPP
#define GEM_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gem {

/// Thrown when an input exceeds one of the documented size guards
/// (subset sweeps, matching enumeration, exhaustive graph iteration).
class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

using Edge = std::pair<int, int>;  // stored with first < second

/// Immutable simple undirected graph on vertices 0..n-1.
/// Self-loops and parallel edges are rejected at construction.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n, std::vector<Edge> edges = {}) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0");
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("self-loop rejected");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("parallel edge rejected");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Canonically sorted, duplicate-free subset of a graph's vertices.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
  }

  static VertexSet from_bitmask(unsigned long long mask, int n) {
    std::vector<int> m;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) m.push_back(v);
    return VertexSet(std::move(m));
  }

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  void validate_for(const Graph& g) const {
    for (int v : members_)
      if (v < 0 || v >= g.n())
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range for graph of order " +
                                    std::to_string(g.n()));
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet& o) const { return members_ == o.members_; }
  bool operator<(const VertexSet& o) const { return members_ < o.members_; }

 private:
  std::vector<int> members_;
};

/// Connected components of G-S split by cardinality parity.
struct ComponentSplit {
  std::vector<VertexSet> odd_components;
  std::vector<VertexSet> even_components;
  VertexSet deleted;

  int od() const { return static_cast<int>(odd_components.size()); }
};

/// Result of deleting a vertex set: the remaining graph with vertices
/// relabeled densely, plus both directions of the label map.
struct DeletedGraph {
  Graph graph;
  std::vector<int> old_of_new;  // new id -> original id
  std::vector<int> new_of_old;  // original id -> new id, -1 if deleted
};

/// Bipartite minor <G,S>: S on the left versus one node per odd
/// S-component on the right. Right nodes are ordered by the smallest
/// original vertex of their component.
struct BipartiteMinor {
  VertexSet left;                    // original vertex ids of S
  int right_count = 0;               // = od(S)
  std::vector<Edge> edges;           // (index into left.members, right node)
  std::vector<VertexSet> back_map;   // right node -> original odd component

  bool has_minor_edge(int left_idx, int right_node) const {
    return std::binary_search(edges.begin(), edges.end(),
                              Edge{left_idx, right_node});
  }
};

inline DeletedGraph delete_vertices(const Graph& g, const VertexSet& s) {
  s.validate_for(g);
  DeletedGraph out;
  out.new_of_old.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (!s.contains(v)) {
      out.new_of_old[v] = static_cast<int>(out.old_of_new.size());
      out.old_of_new.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (out.new_of_old[u] >= 0 && out.new_of_old[v] >= 0)
      edges.emplace_back(out.new_of_old[u], out.new_of_old[v]);
  out.graph = Graph(static_cast<int>(out.old_of_new.size()), std::move(edges));
  return out;
}

inline ComponentSplit component_split(const Graph& g, const VertexSet& s) {
  s.validate_for(g);
  ComponentSplit split;
  split.deleted = s;
  std::vector<int> label(g.n(), -1);
  for (int root = 0; root < g.n(); ++root) {
    if (label[root] >= 0 || s.contains(root)) continue;
    std::vector<int> comp, stack{root};
    label[root] = root;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (label[w] < 0 && !s.contains(w)) {
          label[w] = root;
          stack.push_back(w);
        }
      }
    }
    VertexSet vs(std::move(comp));
    (vs.size() % 2 == 1 ? split.odd_components : split.even_components)
        .push_back(std::move(vs));
  }
  return split;
}

/// Subgraph induced by a component, densely relabeled.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> others;
  for (int v = 0; v < g.n(); ++v)
    if (!keep.contains(v)) others.push_back(v);
  return delete_vertices(g, VertexSet(std::move(others))).graph;
}

inline BipartiteMinor bipartite_minor(const Graph& g, const VertexSet& s) {
  auto split = component_split(g, s);
  if (s.size() + split.od() < 2)
    throw std::domain_error("minor undefined: |S| + od(S) < 2");
  BipartiteMinor minor;
  minor.left = s;
  minor.right_count = split.od();
  minor.back_map = split.odd_components;  // already ordered by min vertex
  std::vector<int> comp_of(g.n(), -1);
  for (int c = 0; c < minor.right_count; ++c)
    for (int v : minor.back_map[c]) comp_of[v] = c;
  for (int i = 0; i < s.size(); ++i) {
    std::vector<int> hit(minor.right_count, 0);
    for (int w : g.neighbors(s.members()[i]))
      if (comp_of[w] >= 0) hit[comp_of[w]] = 1;
    for (int c = 0; c < minor.right_count; ++c)
      if (hit[c]) minor.edges.emplace_back(i, c);
  }
  return minor;
}

}  // namespace gem

#endif  // GEM_GRAPH_HPP
