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

#ifndef GEM_IO_HPP
#define GEM_IO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gem/decomposition.hpp"
#include "gem/graph.hpp"

namespace gem {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(msg + " at line " + std::to_string(line)) {}
};

enum class SourceFormat { kEdgelist, kDimacs };

struct GraphDocument {
  Graph graph;
  SourceFormat source_format = SourceFormat::kEdgelist;
  std::optional<std::string> name;
};

namespace detail {

inline void add_edge_checked(std::vector<Edge>& edges, int u, int v, int n,
                             int line) {
  if (u == v) throw ParseError("self-loop", line);
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ParseError("vertex id out of range", line);
  Edge e{std::min(u, v), std::max(u, v)};
  if (std::find(edges.begin(), edges.end(), e) != edges.end())
    throw ParseError("duplicate edge", line);
  edges.push_back(e);
}

}  // namespace detail

/// Edgelist format: first non-comment line "n m", then m lines "u v" with
/// 0-based ids. Lines starting with '#' are ignored.
inline GraphDocument parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        throw ParseError("expected header \"n m\"", lineno);
      continue;
    }
    int u, v;
    if (!(fields >> u >> v)) throw ParseError("expected edge \"u v\"", lineno);
    detail::add_edge_checked(edges, u, v, n, lineno);
  }
  if (n < 0) throw ParseError("missing header", lineno);
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge count does not match header", lineno);
  return {Graph(n, std::move(edges)), SourceFormat::kEdgelist, std::nullopt};
}

/// DIMACS format: "p edge n m" header, "e u v" lines with 1-based ids,
/// "c" comment lines.
inline GraphDocument parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) throw ParseError("duplicate problem line", lineno);
      if (!(fields >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        throw ParseError("expected \"p edge n m\"", lineno);
    } else if (tag == "e") {
      if (n < 0) throw ParseError("edge before problem line", lineno);
      int u, v;
      if (!(fields >> u >> v)) throw ParseError("expected \"e u v\"", lineno);
      detail::add_edge_checked(edges, u - 1, v - 1, n, lineno);
    } else {
      throw ParseError("unknown line descriptor \"" + tag + "\"", lineno);
    }
  }
  if (n < 0) throw ParseError("missing problem line", lineno);
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge count does not match problem line", lineno);
  return {Graph(n, std::move(edges)), SourceFormat::kDimacs, std::nullopt};
}

/// Canonical edgelist text: header then edges in ascending order.
inline std::string serialize_edgelist(const Graph& g) {
  std::string out =
      std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {

inline nlohmann::ordered_json set_to_json(const VertexSet& s) {
  return nlohmann::ordered_json(s.members());
}

inline nlohmann::ordered_json components_to_json(
    const std::vector<VertexSet>& comps) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : comps) arr.push_back(c.members());
  return arr;
}

}  // namespace detail

/// Single-line JSON with a frozen key set; byte-stable for a fixed input.
inline std::string emit_decomposition_json(const Decomposition& d) {
  nlohmann::ordered_json j;
  int n = d.D.size() + d.A.size() + d.C.size();
  j["n"] = n;
  j["nu"] = d.nu;
  j["deficiency"] = d.deficiency;
  j["D"] = detail::set_to_json(d.D);
  j["A"] = detail::set_to_json(d.A);
  j["C"] = detail::set_to_json(d.C);
  j["odd_components"] = detail::components_to_json(d.split.odd_components);
  j["even_components"] = detail::components_to_json(d.split.even_components);
  return j.dump();
}

/// DOT output: class=D|A|C per node, one cluster per component of G-A.
inline std::string emit_dot(const Graph& g, const Decomposition& d) {
  std::vector<const VertexSet*> comps;
  for (const auto& c : d.split.odd_components) comps.push_back(&c);
  for (const auto& c : d.split.even_components) comps.push_back(&c);
  std::sort(comps.begin(), comps.end(),
            [](const VertexSet* a, const VertexSet* b) {
              return a->members().front() < b->members().front();
            });
  std::string out = "graph G {\n";
  int cluster = 0;
  for (const VertexSet* comp : comps) {
    out += "  subgraph cluster_" + std::to_string(cluster++) + " {\n";
    for (int v : *comp) {
      const char* cls = d.D.contains(v) ? "D" : "C";
      out += "    " + std::to_string(v) + " [class=\"" + cls + "\"];\n";
    }
    out += "  }\n";
  }
  for (int v : d.A) out += "  " + std::to_string(v) + " [class=\"A\"];\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

/// splitmix64, fixed by specification so generated corpora are
/// reproducible bit-for-bit in any implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// G(n, p_num/p_den): edge slots visited in lexicographic order; slot
/// {u,v} is included when the next splitmix64 draw mod p_den < p_num.
inline Graph random_graph(int n, std::uint64_t p_numerator,
                          std::uint64_t p_denominator, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (p_denominator == 0 || p_numerator > p_denominator)
    throw std::invalid_argument("probability must satisfy 0 <= num <= den");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next() % p_denominator < p_numerator) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

constexpr int kMaxEnumeratedOrder = 6;

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int slot = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++slot)
      if (mask >> slot & 1ull) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// All 2^C(n,2) labeled graphs of order n, edge-mask ascending. The
/// callback returns false to stop early.
inline void for_each_labeled_graph(int n,
                                   const std::function<bool(const Graph&)>& cb) {
  if (n < 0 || n > kMaxEnumeratedOrder)
    throw SizeGuardError("labeled-graph enumeration limited to order " +
                         std::to_string(kMaxEnumeratedOrder));
  int slots = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ull << slots); ++mask)
    if (!cb(graph_from_edge_mask(n, mask))) return;
}

}  // namespace gem

#endif  // GEM_IO_HPP
