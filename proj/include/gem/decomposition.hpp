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

#ifndef GEM_DECOMPOSITION_HPP
#define GEM_DECOMPOSITION_HPP

#include <optional>
#include <string>

#include "gem/graph.hpp"
#include "gem/matching.hpp"

namespace gem {

/// Deficiency bookkeeping for one subset S: od(S) odd components,
/// df(S) = od(S) - |S|, and Df(S) = total vertex count over the
/// S-components of either parity that lack a perfect matching.
struct DeficiencyProfile {
  VertexSet set;
  int od = 0;
  int s = 0;
  int df = 0;
  int Df = 0;
};

inline DeficiencyProfile deficiency_profile(const Graph& g,
                                            const VertexSet& set) {
  auto split = component_split(g, set);
  DeficiencyProfile p;
  p.set = set;
  p.od = split.od();
  p.s = set.size();
  p.df = p.od - p.s;
  for (const auto& comp : split.odd_components) p.Df += comp.size();
  for (const auto& comp : split.even_components)
    if (!has_perfect_matching(induced_subgraph(g, comp))) p.Df += comp.size();
  return p;
}

/// The Gallai-Edmonds triple: D = vertices exposed by some maximum
/// matching, A = N(D), C = the rest. split is the component split of G-A.
struct Decomposition {
  VertexSet D;
  VertexSet A;
  VertexSet C;
  ComponentSplit split;
  int nu = 0;
  int deficiency = 0;  // = n - 2*nu = df(A)
};

/// D(G) = { v : nu(G - v) = nu(G) }, i.e. the vertices some maximum
/// matching leaves exposed. n+1 matching calls.
inline VertexSet compute_D(const Graph& g) {
  int nu = maximum_matching(g).size();
  std::vector<int> d;
  for (int v = 0; v < g.n(); ++v) {
    auto rest = delete_vertices(g, VertexSet({v}));
    if (maximum_matching(rest.graph).size() == nu) d.push_back(v);
  }
  return VertexSet(std::move(d));
}

inline Decomposition gallai_edmonds(const Graph& g) {
  Decomposition dec;
  dec.D = compute_D(g);
  std::vector<int> a, c;
  for (int v = 0; v < g.n(); ++v) {
    if (dec.D.contains(v)) continue;
    bool touches_d = false;
    for (int w : g.neighbors(v))
      if (dec.D.contains(w)) {
        touches_d = true;
        break;
      }
    (touches_d ? a : c).push_back(v);
  }
  dec.A = VertexSet(std::move(a));
  dec.C = VertexSet(std::move(c));
  dec.split = component_split(g, dec.A);
  dec.nu = maximum_matching(g).size();
  dec.deficiency = g.n() - 2 * dec.nu;

  std::vector<int> odd_union;
  for (const auto& comp : dec.split.odd_components)
    odd_union.insert(odd_union.end(), comp.begin(), comp.end());
  if (VertexSet(std::move(odd_union)) != dec.D)
    throw std::logic_error(
        "engine bug: D does not equal the union of odd A-components");
  return dec;
}

/// S is Tutte-Berge iff its deficiency equals the graph's maximum
/// deficiency n - 2*nu (some matching then achieves exactly df(S) exposed).
inline bool is_tutte_berge(const Graph& g, const VertexSet& s) {
  auto p = deficiency_profile(g, s);
  return p.df == g.n() - 2 * maximum_matching(g).size();
}

inline bool tutte_berge_formula_check(const Graph& g, int max_df) {
  return g.n() - 2 * maximum_matching(g).size() == max_df;
}

/// Hall's condition on the left side of a bipartite minor. surplus 0 is
/// Hall's theorem via one maximum matching; surplus 1 deletes each right
/// vertex in turn and re-checks coverage (equivalent to requiring
/// |N(T)| >= |T| + 1 for every nonempty left subset T).
inline bool hall_condition(const BipartiteMinor& h, int surplus) {
  if (surplus != 0 && surplus != 1)
    throw std::invalid_argument("surplus must be 0 or 1");
  if (surplus == 0)
    return left_side_covered(h, bipartite_maximum_matching(h));
  std::vector<int> degree(h.left.size(), 0);
  for (const auto& [li, rc] : h.edges) ++degree[li];
  for (int d : degree)
    if (d == 0) return false;
  for (int y = 0; y < h.right_count; ++y) {
    BipartiteMinor reduced;
    reduced.left = h.left;
    reduced.right_count = h.right_count - 1;
    for (const auto& [li, rc] : h.edges)
      if (rc != y) reduced.edges.emplace_back(li, rc < y ? rc : rc - 1);
    if (!left_side_covered(reduced, bipartite_maximum_matching(reduced)))
      return false;
  }
  return true;
}

/// Clause-by-clause check of the Gallai-Edmonds conditions for a subset S:
/// (a) every even S-component has a perfect matching, (b) every odd
/// S-component is factor-critical, (c) S empty or S satisfies Hall's
/// condition with surplus one in <G,S>.
struct GeConditionReport {
  bool even_components_perfect = true;   // (a)
  bool odd_components_critical = true;   // (b)
  bool hall_surplus_one = true;          // (c)
  std::optional<std::string> witness;

  bool pass() const {
    return even_components_perfect && odd_components_critical &&
           hall_surplus_one;
  }
};

namespace detail {

inline std::string set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (int v : s) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  }
  return out + "}";
}

}  // namespace detail

inline GeConditionReport verify_ge_conditions(const Graph& g,
                                              const VertexSet& s) {
  GeConditionReport report;
  auto split = component_split(g, s);
  for (const auto& comp : split.even_components) {
    if (!has_perfect_matching(induced_subgraph(g, comp))) {
      report.even_components_perfect = false;
      report.witness = "even component " + detail::set_to_string(comp) +
                       " has no perfect matching";
      return report;
    }
  }
  for (const auto& comp : split.odd_components) {
    if (!is_factor_critical(induced_subgraph(g, comp))) {
      report.odd_components_critical = false;
      report.witness = "odd component " + detail::set_to_string(comp) +
                       " is not factor-critical";
      return report;
    }
  }
  if (!s.empty()) {
    // |S| = 1 with no odd components leaves the minor undefined; the lone
    // S-vertex then has no minor neighbors, so surplus one fails outright.
    if (s.size() + split.od() < 2 || !hall_condition(bipartite_minor(g, s), 1)) {
      report.hall_surplus_one = false;
      report.witness = "S = " + detail::set_to_string(s) +
                       " fails Hall's condition with surplus one";
    }
  }
  return report;
}

}  // namespace gem

#endif  // GEM_DECOMPOSITION_HPP
