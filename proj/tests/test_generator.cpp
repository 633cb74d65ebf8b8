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

#include <array>
#include <functional>
#include <set>

#include "twofactor/constructions.hpp"
#include "twofactor/generator.hpp"
#include "twofactor/graph6.hpp"
#include "twofactor/structure.hpp"
#include "twofactor/symmetry.hpp"
#include "twofactor/two_factor.hpp"

namespace twofactor {
namespace {

// Every set of k distinct triples forming a C4-free 3-regular incidence
// matrix, with no symmetry breaking beyond sorting the rows.
std::set<std::string> naive_levi_graphs(int k) {
  std::set<std::string> out;
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      for (int c = b + 1; c < k; ++c) triples.push_back({a, b, c});
    }
  }
  std::vector<int> column(k, 0);
  std::vector<std::vector<char>> pair(k, std::vector<char>(k, 0));
  std::vector<int> rows;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<int>(rows.size()) == k) {
      std::vector<Edge> edges;
      for (int r = 0; r < k; ++r) {
        for (int c : triples[rows[r]]) edges.emplace_back(r, k + c);
      }
      const Graph g(2 * k, edges);
      if (is_connected(g)) out.insert(canonical_form(g));
      return;
    }
    for (std::size_t t = from; t < triples.size(); ++t) {
      const auto& [a, b, c] = triples[t];
      if (column[a] == 3 || column[b] == 3 || column[c] == 3) continue;
      if (pair[a][b] || pair[a][c] || pair[b][c]) continue;
      ++column[a], ++column[b], ++column[c];
      pair[a][b] = pair[a][c] = pair[b][c] = 1;
      rows.push_back(static_cast<int>(t));
      extend(t + 1);
      rows.pop_back();
      pair[a][b] = pair[a][c] = pair[b][c] = 0;
      --column[a], --column[b], --column[c];
    }
  };
  extend(0);
  return out;
}

TEST_CASE("census counts of cubic bipartite graphs of girth at least 6") {
  CHECK(generate(14).size() == 1);
  CHECK(generate(16).size() == 1);
  CHECK(generate(18).size() == 3);
  CHECK(generate(20).size() == 10);
  CHECK(generate(22).size() == 28);
  CHECK(generate(12).empty());
  CHECK_THROWS_AS(generate(15), Error);
}

TEST_CASE("generated graphs are valid and pairwise non-isomorphic") {
  for (int n = 14; n <= 22; n += 2) {
    std::set<std::string> forms;
    for (const Graph& g : generate(n)) {
      CHECK(g.order() == n);
      CHECK(g.is_cubic());
      CHECK(is_connected(g));
      CHECK(is_bipartite(g));
      const std::optional<int> gi = girth(g);
      REQUIRE(gi.has_value());
      CHECK(*gi >= 6);
      CHECK(*gi % 2 == 0);
      forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == generate(n).size());
  }
}

TEST_CASE("generation matches the naive incidence-matrix oracle") {
  for (int n = 14; n <= 18; n += 2) {
    std::set<std::string> forms;
    for (const Graph& g : generate(n)) forms.insert(canonical_form(g));
    CHECK(forms == naive_levi_graphs(n / 2));
  }
}

TEST_CASE("generation is deterministic") {
  const auto a = generate(20);
  const auto b = generate(20);
  CHECK(a == b);
}

TEST_CASE("known graphs appear in the census") {
  CHECK(is_isomorphic(generate(14).front(), named("Heawood")));
  bool pappus = false;
  for (const Graph& g : generate(18)) {
    pappus = pappus || is_isomorphic(g, named("Pappus"));
  }
  CHECK(pappus);
}

TEST_CASE("pipeline classification") {
  ClassifyOptions options;
  const PipelineSummary fourteen = pipeline_classify(14, options);
  CHECK(fourteen.graphs == 1);
  REQUIRE(fourteen.pseudo_2f_isomorphic.size() == 1);
  CHECK(fourteen.pseudo_2f_isomorphic[0].essentially_4_edge_connected);
  const PipelineSummary sixteen = pipeline_classify(16, options);
  for (const auto& found : sixteen.pseudo_2f_isomorphic) {
    CHECK_FALSE(found.essentially_4_edge_connected);
  }
  const PipelineSummary eighteen = pipeline_classify(18, options);
  bool seen = false;
  for (const auto& found : eighteen.pseudo_2f_isomorphic) {
    if (is_isomorphic(parse_graph6(found.graph6), named("Pappus"))) {
      seen = true;
      CHECK(found.essentially_4_edge_connected);
      CHECK(found.types.size() == 2);
    }
  }
  CHECK(seen);
}

}  // namespace
}  // namespace twofactor
