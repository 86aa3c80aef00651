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

#include <catch2/catch_amalgamated.hpp>

#include "gem/io.hpp"
#include "gem/oracle.hpp"
#include "named_graphs.hpp"

using namespace gem;
using namespace gem::testing;

TEST_CASE("matching enumeration counts and order") {
  std::vector<std::vector<Edge>> seen;
  for_each_matching(complete_graph(2), [&](const std::vector<Edge>& m) {
    seen.push_back(m);
    return true;
  });
  REQUIRE(seen.size() == 2);
  CHECK(seen[0].empty());
  CHECK(seen[1] == std::vector<Edge>{{0, 1}});

  seen.clear();
  for_each_matching(path_graph(3), [&](const std::vector<Edge>& m) {
    seen.push_back(m);
    return true;
  });
  REQUIRE(seen.size() == 3);
  CHECK(std::is_sorted(seen.begin(), seen.end()));  // lexicographic

  CHECK(all_matchings(complete_graph(3)).size() == 4);
  CHECK(all_matchings(cycle_graph(5)).size() == 11);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(for_each_matching(complete_graph(8),
                                    [](const std::vector<Edge>&) { return true; }),
                  SizeGuardError);
}

TEST_CASE("brute_nu examples") {
  CHECK(brute_nu(cycle_graph(5)) == 2);
  CHECK(brute_nu(complete_graph(4)) == 2);
  CHECK(brute_nu(Graph(5)) == 0);
}

TEST_CASE("extremal_set examples") {
  auto p3 = extremal_set(path_graph(3));
  REQUIRE(p3.unique);
  CHECK(p3.candidates[0] == VertexSet({1}));
  CHECK(p3.max_df == 1);
  CHECK(p3.min_Df == 2);

  auto k3 = extremal_set(complete_graph(3));
  REQUIRE(k3.unique);
  CHECK(k3.candidates[0].empty());
  CHECK(k3.max_df == 1);
  CHECK(k3.min_Df == 3);

  // K4 demonstrates the min-Df tiebreak: singletons also reach df = 0 but
  // carry Df = 3.
  auto k4 = extremal_set(complete_graph(4));
  REQUIRE(k4.unique);
  CHECK(k4.candidates[0].empty());
  CHECK(k4.max_df == 0);
  CHECK(k4.min_Df == 0);
}

TEST_CASE("remark3_set examples") {
  auto p3 = remark3_set(path_graph(3));
  REQUIRE(p3.unique);
  CHECK(p3.candidates[0] == VertexSet({1}));

  auto k2 = remark3_set(complete_graph(2));
  REQUIRE(k2.unique);
  CHECK(k2.candidates[0].empty());

  auto star = remark3_set(star_graph(3));
  REQUIRE(star.unique);
  CHECK(star.candidates[0] == VertexSet({0}));
  CHECK(star.max_df == 2);
}

TEST_CASE("sweep guards") {
  CHECK_THROWS_AS(extremal_set(Graph(17)), SizeGuardError);
  CHECK_THROWS_AS(remark3_set(Graph(17)), SizeGuardError);
  CHECK_THROWS_AS(tutte_check(Graph(17)), SizeGuardError);
  CHECK_THROWS_AS(verify_structure_theorem(Graph(11)), SizeGuardError);
}

TEST_CASE("tutte_check examples") {
  CHECK(tutte_check(complete_graph(2)));
  CHECK_FALSE(tutte_check(star_graph(3)));
  CHECK(tutte_check(triangle_with_pendant()));
}

TEST_CASE("tutte_check agrees with the matching engine") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(8, 1, 3, seed);
    CHECK(tutte_check(g) == has_perfect_matching(g));
  }
}

TEST_CASE("Tutte-Berge formula from the sweep") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_graph(8, 1, 3, seed);
    if (g.m() > kMaxEnumerationEdges) continue;
    CHECK(g.n() - 2 * brute_nu(g) == extremal_set(g).max_df);
  }
}

TEST_CASE("verify_structure_theorem on named graphs") {
  auto p3 = verify_structure_theorem(path_graph(3));
  CHECK(p3.pass());

  auto c5 = verify_structure_theorem(cycle_graph(5));
  CHECK(c5.pass());
  CHECK(extremal_set(cycle_graph(5)).candidates[0].empty());

  CHECK(verify_structure_theorem(Graph(0)).pass());
  CHECK(verify_structure_theorem(Graph(1)).pass());
  CHECK(verify_structure_theorem(star_graph(3)).pass());
  CHECK(verify_structure_theorem(triangle_with_pendant()).pass());
}

TEST_CASE("extremal, remark3, and engine agree on random graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = random_graph(8, 1, 4, seed);
    auto ext = extremal_set(g);
    auto r3 = remark3_set(g);
    REQUIRE(ext.unique);
    REQUIRE(r3.unique);
    auto a = gallai_edmonds(g).A;
    CHECK(ext.candidates[0] == a);
    CHECK(r3.candidates[0] == a);
  }
}
