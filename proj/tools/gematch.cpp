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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gem/gem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeGuard = 3;

struct ProbabilityFlag {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

ProbabilityFlag parse_probability(const std::string& text) {
  ProbabilityFlag p;
  char slash = 0;
  std::istringstream in(text);
  if (!(in >> p.num >> slash >> p.den) || slash != '/')
    throw gem::ParseError("probability must look like \"1/10\"", 1);
  return p;
}

gem::GraphDocument load_graph(const std::string& path,
                              const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto doc = format == "dimacs" ? gem::parse_dimacs(buf.str())
                                : gem::parse_edgelist(buf.str());
  doc.name = path;
  return doc;
}

nlohmann::ordered_json report_to_json(const gem::VerificationReport& report) {
  nlohmann::ordered_json j;
  j["pass"] = report.pass();
  auto clauses = nlohmann::ordered_json::object();
  for (const auto& c : report.clauses) clauses[c.name] = c.pass;
  j["clauses"] = clauses;
  if (report.witness) j["witness"] = *report.witness;
  return j;
}

void print_report_text(const gem::VerificationReport& report,
                       std::ostream& out) {
  for (const auto& c : report.clauses)
    out << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
  if (report.witness) out << "witness: " << *report.witness << "\n";
  out << (report.pass() ? "all clauses pass" : "verification failed") << "\n";
}

int run_decompose(const std::string& input, const std::string& format,
                  const std::string& output) {
  auto doc = load_graph(input, format);
  auto dec = gem::gallai_edmonds(doc.graph);
  if (output == "dot")
    std::cout << gem::emit_dot(doc.graph, dec);
  else
    std::cout << gem::emit_decomposition_json(dec) << "\n";
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& format,
               const std::string& output, int n, const std::string& p,
               std::uint64_t seed) {
  gem::Graph g;
  if (!input.empty()) {
    g = load_graph(input, format).graph;
  } else {
    auto prob = parse_probability(p);
    g = gem::random_graph(n, prob.num, prob.den, seed);
  }
  auto report = gem::verify_structure_theorem(g);
  if (output == "json")
    std::cout << report_to_json(report).dump() << "\n";
  else
    print_report_text(report, std::cout);
  return report.pass() ? kExitOk : kExitVerificationFailure;
}

int run_oracle(int max_n, int max_edges) {
  long long total = 0;
  bool all_pass = true;
  for (int n = 0; n <= max_n && all_pass; ++n) {
    long long count = 0;
    gem::for_each_labeled_graph(n, [&](const gem::Graph& g) {
      if (g.m() > max_edges) return true;
      auto report = gem::verify_structure_theorem(g);
      ++count;
      if (!report.pass()) {
        all_pass = false;
        std::cout << "FAIL on graph " << gem::serialize_edgelist(g);
        std::cout << report_to_json(report).dump() << "\n";
        return false;
      }
      return true;
    });
    total += count;
    if (all_pass)
      std::cout << "n=" << n << ": " << count
                << " graphs, all clauses pass\n";
  }
  if (!all_pass) return kExitVerificationFailure;
  std::cout << "oracle sweep complete: " << total << " graphs verified\n";
  return kExitOk;
}

int run_random(int n, const std::string& p, std::uint64_t seed) {
  auto prob = parse_probability(p);
  std::cout << gem::serialize_edgelist(
      gem::random_graph(n, prob.num, prob.den, seed));
  return kExitOk;
}

int run_enumerate(int n) {
  std::uint64_t index = 0;
  gem::for_each_labeled_graph(n, [&](const gem::Graph& g) {
    std::cout << "# graph " << index++ << "\n" << gem::serialize_edgelist(g);
    return true;
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Maximum matchings, Gallai-Edmonds decompositions, and brute-force "
      "verification of the structure theorem"};
  app.require_subcommand(1);

  std::string input, format = "edgelist", output = "json", p = "1/2";
  int n = 0, max_n = 5, max_edges = 24;
  std::uint64_t seed = 0;

  auto* decompose = app.add_subcommand(
      "decompose", "Decompose a graph file into (D, A, C)");
  decompose->add_option("--input", input, "graph file")->required();
  decompose->add_option("--format", format, "input format: edgelist|dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  decompose->add_option("--output", output, "output format: json|dot")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* verify = app.add_subcommand(
      "verify", "Verify the structure theorem on a file or generated graph");
  verify->add_option("--input", input, "graph file (omit to generate)");
  verify->add_option("--format", format, "input format: edgelist|dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  verify->add_option("--output", output, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--n", n, "generator order");
  verify->add_option("--p", p, "generator edge probability, e.g. 1/10");
  verify->add_option("--seed", seed, "generator seed");

  auto* oracle = app.add_subcommand(
      "oracle", "Exhaustively verify all labeled graphs up to --max-n");
  oracle->add_option("--max-n", max_n, "largest order to sweep (default 5)");
  oracle->add_option("--max-edges", max_edges, "skip denser graphs");

  auto* random = app.add_subcommand("random", "Emit a generated graph");
  random->add_option("--n", n, "order")->required();
  random->add_option("--p", p, "edge probability, e.g. 1/10");
  random->add_option("--seed", seed, "seed");

  auto* enumerate =
      app.add_subcommand("enumerate", "Stream all labeled graphs of order n");
  enumerate->add_option("--n", n, "order")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (decompose->parsed()) return run_decompose(input, format, output);
    if (verify->parsed())
      return run_verify(input, format, output, n, p, seed);
    if (oracle->parsed()) return run_oracle(max_n, max_edges);
    if (random->parsed()) return run_random(n, p, seed);
    if (enumerate->parsed()) return run_enumerate(n);
  } catch (const gem::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const gem::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
