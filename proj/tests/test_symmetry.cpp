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
#include <set>

#include "support/oracles.hpp"
#include "twofactor/constructions.hpp"
#include "twofactor/generator.hpp"
#include "twofactor/symmetry.hpp"

namespace twofactor {
namespace {

TEST_CASE("automorphism group orders of named graphs") {
  CHECK(automorphisms(named("K4")).group_order == 24);
  CHECK(automorphisms(named("K33")).group_order == 72);
  CHECK(automorphisms(named("Petersen")).group_order == 120);
  CHECK(automorphisms(named("Heawood")).group_order == 336);
  CHECK(automorphisms(named("Pappus")).group_order == 216);
  CHECK(automorphisms(named("Gray")).group_order == 1296);
  CHECK(automorphisms(named("G30")).group_order == 144);
}

TEST_CASE("group order agrees with permutation backtracking") {
  CHECK(oracle::count_automorphisms(named("Heawood")) == 336);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + 2 * (trial % 5);
    const Graph g = trial % 3 == 0 ? oracle::random_cubic_bipartite(n / 2, rng)
                                   : oracle::random_cubic(n, rng);
    CHECK(automorphisms(g).group_order == oracle::count_automorphisms(g));
  }
  const Graph edgeless(5);
  CHECK(automorphisms(edgeless).group_order == 120);
}

TEST_CASE("generators are automorphisms and orbits are consistent") {
  for (const char* name : {"Petersen", "Pappus", "Gray", "G30"}) {
    const Graph g = named(name);
    const AutomorphismInfo info = automorphisms(g);
    for (const Permutation& p : info.generators) {
      CHECK(is_automorphism(g, p));
    }
    std::size_t covered = 0;
    for (const auto& orbit : info.vertex_orbits) covered += orbit.size();
    CHECK(covered == static_cast<std::size_t>(g.order()));
    std::size_t edges = 0;
    for (const auto& orbit : info.edge_orbits) edges += orbit.size();
    CHECK(edges == g.size());
  }
}

TEST_CASE("transitivity flags") {
  CHECK(transitivity(named("Gray")) == Transitivity{false, true, true});
  CHECK(transitivity(named("G30")) == Transitivity{false, false, false});
  CHECK(transitivity(named("Heawood")) == Transitivity{true, true, false});
  CHECK(transitivity(named("Pappus")) == Transitivity{true, true, false});
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(2024);
  std::vector<Graph> graphs;
  for (const std::string& name : named_graphs()) graphs.push_back(named(name));
  for (int i = 0; i < 20; ++i) graphs.push_back(oracle::random_cubic(16, rng));
  for (const Graph& g : graphs) {
    const std::string form = canonical_form(g);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph h = g.relabeled(oracle::random_permutation(g.order(), rng));
      CHECK(canonical_form(h) == form);
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  std::vector<Edge> cycle;
  for (int i = 0; i < 6; ++i) cycle.emplace_back(i, (i + 1) % 6);
  CHECK(canonical_form(named("K33")) != canonical_form(Graph(6, cycle)));
  std::set<std::string> forms;
  const std::vector<Graph> census = generate(22);
  for (const Graph& g : census) forms.insert(canonical_form(g));
  CHECK(forms.size() == census.size());
  std::mt19937_64 rng(8);
  const Graph pappus = named("Pappus");
  CHECK(is_isomorphic(pappus,
                      pappus.relabeled(oracle::random_permutation(18, rng))));
  CHECK_FALSE(is_isomorphic(named("Heawood"), pappus));
  CHECK_FALSE(is_isomorphic(named("K33"), named("K4")));
}

TEST_CASE("canonical labeling is a permutation") {
  const Graph g = named("G30");
  Permutation p = canonical_labeling(g);
  std::sort(p.begin(), p.end());
  for (int i = 0; i < g.order(); ++i) CHECK(p[i] == i);
}

}  // namespace
}  // namespace twofactor
