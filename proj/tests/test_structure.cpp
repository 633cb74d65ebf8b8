// Copyright 2026 The twofactor Authors.
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

#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "twofactor/constructions.hpp"
#include "twofactor/generator.hpp"
#include "twofactor/structure.hpp"

namespace twofactor {
namespace {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

TEST_CASE("girth of named and small graphs") {
  CHECK(girth(named("K4")) == 3);
  CHECK(girth(named("K33")) == 4);
  CHECK(girth(named("Petersen")) == 5);
  CHECK(girth(named("Heawood")) == 6);
  CHECK(girth(named("Gray")) == 8);
  CHECK_FALSE(girth(path(5)).has_value());
}

TEST_CASE("girth agrees with the all-roots BFS oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_cubic(4 + 2 * (trial % 8), rng);
    CHECK(girth(g) == oracle::girth(g));
  }
}

TEST_CASE("bipartition and odd-cycle witness") {
  const Bipartition k33 = bipartition(named("K33"));
  REQUIRE(k33.bipartite());
  CHECK(k33.part(0).size() == 3);
  CHECK(k33.part(1).size() == 3);
  const Bipartition gray = bipartition(named("Gray"));
  REQUIRE(gray.bipartite());
  CHECK(gray.part(0).size() == 27);
  const Graph k4 = named("K4");
  const Bipartition odd = bipartition(k4);
  REQUIRE_FALSE(odd.bipartite());
  CHECK(odd.odd_cycle.size() == 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_cubic(10, rng);
    const Bipartition b = bipartition(g);
    if (b.bipartite()) {
      for (const Edge& e : g.edges()) CHECK(b.side[e.u] != b.side[e.v]);
      continue;
    }
    const auto& c = b.odd_cycle;
    CHECK(c.size() % 2 == 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(g.has_edge(c[i], c[(i + 1) % c.size()]));
    }
  }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(named("K33")) == 3);
  CHECK(edge_connectivity(named("G30")) == 3);
  CHECK(edge_connectivity(Graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(edge_connectivity(path(4)) == 1);
  CHECK(edge_connectivity(oracle::cubic_without_perfect_matching()) == 1);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_cubic(4 + 2 * (trial % 7), rng);
    CHECK(edge_connectivity(g) == oracle::edge_connectivity(g));
  }
}

TEST_CASE("cyclic edge connectivity of named graphs") {
  CHECK_FALSE(cyclic_edge_connectivity(named("K4")).has_value());
  CHECK_FALSE(cyclic_edge_connectivity(named("K33")).has_value());
  CHECK(cyclic_edge_connectivity(named("Petersen")) == 5);
  CHECK(cyclic_edge_connectivity(named("Heawood")) == 6);
  CHECK(cyclic_edge_connectivity(named("G30")) == 6);
  CHECK(cyclic_edge_connectivity(named("Gray")) == 8);
}

TEST_CASE("cyclic edge connectivity agrees with the vertex-subset oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 6 + 2 * (trial % 7);
    const Graph g = trial % 2 == 0 ? oracle::random_cubic(n, rng)
                                   : oracle::random_cubic_bipartite(n / 2, rng);
    CHECK(cyclic_edge_connectivity(g) == oracle::cyclic_edge_connectivity(g));
  }
  for (int n = 14; n <= 20; n += 2) {
    for (const Graph& g : generate(n)) {
      CHECK(cyclic_edge_connectivity(g) ==
            oracle::cyclic_edge_connectivity(g));
    }
  }
}

TEST_CASE("nontrivial 3-edge-cuts") {
  CHECK(nontrivial_3_edge_cuts(named("Heawood")).empty());
  CHECK(nontrivial_3_edge_cuts(named("G30")).empty());
  CHECK(is_essentially_4_edge_connected(named("Gray")));
  const Graph k33 = named("K33");
  const Graph product = star_product(k33, 0, k33, 0);
  const auto cuts = nontrivial_3_edge_cuts(product);
  REQUIRE_FALSE(cuts.empty());
  bool found = false;
  for (const EdgeCut& cut : cuts) {
    CHECK(cut.edges.size() == 3);
    CHECK(cut.kind != CutKind::kTrivial);
    // The product joins g1 - x (vertices 0..4) to g2 - y (5..9).
    bool crossing = true;
    for (const Edge& e : cut.edges) crossing = crossing && e.u < 5 && e.v >= 5;
    found = found || crossing;
  }
  CHECK(found);
  CHECK_FALSE(is_essentially_4_edge_connected(product));
}

TEST_CASE("make_edge_cut classifies and validates") {
  const Graph k33 = named("K33");
  const EdgeCut star = make_edge_cut(k33, {{0, 3}, {0, 4}, {0, 5}});
  CHECK(star.kind == CutKind::kTrivial);
  CHECK_THROWS_AS(make_edge_cut(k33, {{0, 3}, {1, 4}}), Error);
  CHECK_THROWS_AS(make_edge_cut(k33, {{0, 1}}), Error);
  const Graph heawood = named("Heawood");
  const Graph twice = star_product(heawood, 0, heawood, 0);
  const auto cuts = nontrivial_3_edge_cuts(twice);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].kind == CutKind::kCyclic);
}

TEST_CASE("essential 4-edge-connectivity matches cyclic connectivity") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + 2 * (trial % 8);
    const Graph g = oracle::random_cubic(n, rng);
    if (edge_connectivity(g) < 3) continue;
    const std::optional<int> cec = cyclic_edge_connectivity(g);
    CHECK(nontrivial_3_edge_cuts(g).empty() == (!cec || *cec >= 4));
  }
  for (int n = 14; n <= 20; n += 2) {
    for (const Graph& g : generate(n)) {
      const std::optional<int> cec = cyclic_edge_connectivity(g);
      CHECK(nontrivial_3_edge_cuts(g).empty() == (!cec || *cec >= 4));
    }
  }
}

TEST_CASE("shortest cycles through an edge") {
  const Graph heawood = named("Heawood");
  const auto cycles = shortest_cycles_through(heawood, 0, 1);
  REQUIRE_FALSE(cycles.empty());
  for (const auto& c : cycles) {
    CHECK(c.size() == 6);
    CHECK(c.front() == 0);
    CHECK(c.back() == 1);
  }
  CHECK(shortest_cycles_through(path(3), 0, 1).empty());
}

TEST_CASE("components") {
  int count = 0;
  const auto comp = components(Graph(5, {{0, 1}, {3, 4}}), &count);
  CHECK(count == 3);
  CHECK(comp == std::vector<int>{0, 0, 1, 2, 2});
  CHECK(is_connected(named("Pappus")));
}

}  // namespace
}  // namespace twofactor
