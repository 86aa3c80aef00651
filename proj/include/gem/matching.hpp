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

#ifndef GEM_MATCHING_HPP
#define GEM_MATCHING_HPP

#include <deque>
#include <numeric>

#include "gem/graph.hpp"

namespace gem {

constexpr int kExposed = -1;

/// A matching as a per-vertex mate table. mate[v] == kExposed means v is
/// incident with no matching edge.
class Matching {
 public:
  Matching() = default;

  explicit Matching(std::vector<int> mate) : mate_(std::move(mate)) {
    for (int v = 0; v < n(); ++v) {
      int w = mate_[v];
      if (w == kExposed) continue;
      if (w < 0 || w >= n() || w == v || mate_[w] != v)
        throw std::invalid_argument("mate table is not an involution");
      if (w > v) ++size_;
    }
  }

  int n() const { return static_cast<int>(mate_.size()); }
  int size() const { return size_; }
  int mate(int v) const { return mate_.at(v); }
  bool is_exposed(int v) const { return mate_.at(v) == kExposed; }

  std::vector<Edge> edge_list() const {
    std::vector<Edge> out;
    for (int v = 0; v < n(); ++v)
      if (mate_[v] > v) out.emplace_back(v, mate_[v]);
    return out;
  }

  /// Checks that every matched pair is an edge of g.
  void validate_for(const Graph& g) const {
    if (n() != g.n()) throw std::invalid_argument("matching order mismatch");
    for (int v = 0; v < n(); ++v)
      if (mate_[v] > v && !g.has_edge(v, mate_[v]))
        throw std::invalid_argument("matched pair is not an edge");
  }

 private:
  std::vector<int> mate_;
  int size_ = 0;
};

namespace detail {

// Edmonds blossom shrinking, the classic array formulation: a BFS tree of
// even vertices grown from each exposed root, odd cycles contracted by
// rebasing the `base` table at the cycle's lowest common ancestor.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.n()), mate_(n_, kExposed), parent_(n_), base_(n_) {}

  std::vector<int> run() {
    // Roots scanned in ascending id; neighbor lists are sorted, so the
    // augmenting path found is the first in BFS order. Deterministic.
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == kExposed) augment_from(v);
    return mate_;
  }

 private:
  void augment_from(int root) {
    std::vector<char> used(n_, 0);
    parent_.assign(n_, -1);
    std::iota(base_.begin(), base_.end(), 0);
    used[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g_.neighbors(v)) {
        if (base_[v] == base_[w] || mate_[v] == w) continue;
        if (w == root || (mate_[w] != kExposed && parent_[mate_[w]] != -1)) {
          // Odd cycle: contract the blossom through the LCA of v and w.
          int a = lca(v, w);
          std::vector<char> in_blossom(n_, 0);
          mark_path(v, a, w, in_blossom);
          mark_path(w, a, v, in_blossom);
          for (int u = 0; u < n_; ++u) {
            if (in_blossom[base_[u]]) {
              base_[u] = a;
              if (!used[u]) {
                used[u] = 1;
                queue.push_back(u);
              }
            }
          }
        } else if (parent_[w] == -1) {
          parent_[w] = v;
          if (mate_[w] == kExposed) {
            flip_path(w);
            return;
          }
          used[mate_[w]] = 1;
          queue.push_back(mate_[w]);
        }
      }
    }
  }

  int lca(int a, int b) const {
    std::vector<char> seen(n_, 0);
    for (int v = a;; v = parent_[mate_[v]]) {
      seen[base_[v]] = 1;
      if (mate_[base_[v]] == kExposed) break;
    }
    for (int v = b;; v = parent_[mate_[v]]) {
      if (seen[base_[v]]) return base_[v];
    }
  }

  void mark_path(int v, int stop, int child, std::vector<char>& in_blossom) {
    while (base_[v] != stop) {
      in_blossom[base_[v]] = 1;
      in_blossom[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void flip_path(int v) {
    while (v != -1) {
      int pv = parent_[v];
      int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_;
  std::vector<int> parent_;
  std::vector<int> base_;
};

}  // namespace detail

/// Maximum-cardinality matching of a general graph. Deterministic for a
/// fixed graph: roots and neighbors are scanned in ascending id.
inline Matching maximum_matching(const Graph& g) {
  return Matching(detail::BlossomMatcher(g).run());
}

/// Expands a bipartite minor into a plain graph (left block first, then the
/// contracted right nodes) and reuses the general engine. The returned mate
/// table is indexed the same way: 0..|S|-1 left, then right nodes.
inline Matching bipartite_maximum_matching(const BipartiteMinor& h) {
  int ls = h.left.size();
  std::vector<Edge> edges;
  edges.reserve(h.edges.size());
  for (const auto& [li, rc] : h.edges) edges.emplace_back(li, ls + rc);
  return maximum_matching(Graph(ls + h.right_count, std::move(edges)));
}

inline bool left_side_covered(const BipartiteMinor& h, const Matching& m) {
  return m.size() == h.left.size();
}

inline bool has_perfect_matching(const Graph& g) {
  return 2 * maximum_matching(g).size() == g.n();
}

inline bool is_factor_critical(const Graph& g) {
  if (g.n() == 0) return false;
  if (g.n() % 2 == 0) return false;  // parity fast reject; handles n >= 2
  for (int v = 0; v < g.n(); ++v) {
    auto rest = delete_vertices(g, VertexSet({v}));
    if (!has_perfect_matching(rest.graph)) return false;
  }
  return true;  // K1 falls through: the empty matching is perfect on G-v
}

inline VertexSet exposed_vertices(const Graph& g, const Matching& m) {
  m.validate_for(g);
  std::vector<int> out;
  for (int v = 0; v < g.n(); ++v)
    if (m.is_exposed(v)) out.push_back(v);
  return VertexSet(std::move(out));
}

}  // namespace gem

#endif  // GEM_MATCHING_HPP
