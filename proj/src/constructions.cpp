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

#include "twofactor/constructions.hpp"

#include <algorithm>
#include <random>

#include "twofactor/graph6.hpp"
#include "twofactor/symmetry.hpp"

namespace twofactor {
namespace {

// The 30-vertex pseudo 2-factor isomorphic counterexample. Its properties
// (girth 6, 312 2-factors of four types, |Aut| = 144, cyclic edge
// connectivity 6) are asserted by the test suite rather than trusted.
constexpr std::string_view kG30 =
    R"(]@GaA@?????oAOCG?a?O_CC?AG?AO?@O?????@?G?C@??GC??H???C_??@GC???c_??AQ???C_)";

Graph from_lcf(int n, std::initializer_list<int> pattern) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  const std::vector<int> shifts(pattern);
  for (int i = 0; i < n; ++i) {
    const int j = ((i + shifts[i % shifts.size()]) % n + n) % n;
    if (i < j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph k33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) edges.emplace_back(i, j);
  }
  return Graph(6, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph gray() {
  std::vector<Edge> edges;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const int e = 3 * i + j;
        const Vertex sub = 18 + 9 * c + e;
        edges.emplace_back(6 * c + i, sub);
        edges.emplace_back(sub, 6 * c + 3 + j);
        edges.emplace_back(sub, 45 + e);
      }
    }
  }
  return Graph(54, edges);
}

// Vertices of g other than `skip`, mapped to 0.. in increasing order.
std::vector<int> index_without(const Graph& g, Vertex skip, int offset) {
  std::vector<int> index(g.order(), -1);
  int next = offset;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != skip) index[v] = next++;
  }
  return index;
}

}  // namespace

std::vector<std::string> named_graphs() {
  return {"K4", "K5", "K33", "Petersen", "Heawood", "Pappus", "Gray", "G30"};
}

Graph named(std::string_view name) {
  if (name == "K4") return complete(4);
  if (name == "K5") return complete(5);
  if (name == "K33") return k33();
  if (name == "Petersen") return petersen();
  if (name == "Heawood") return from_lcf(14, {5, -5});
  if (name == "Pappus") return from_lcf(18, {5, 7, -7, 7, -7, -5});
  if (name == "Gray") return gray();
  if (name == "G30") return parse_graph6(kG30);
  throw Error("unknown graph name: " + std::string(name));
}

Graph star_product(const StarProductSpec& spec) {
  const Graph& g1 = spec.g1;
  const Graph& g2 = spec.g2;
  if (spec.x < 0 || spec.x >= g1.order() || g1.degree(spec.x) != 3) {
    throw Error("star product: x must be a degree-3 vertex of g1");
  }
  if (spec.y < 0 || spec.y >= g2.order() || g2.degree(spec.y) != 3) {
    throw Error("star product: y must be a degree-3 vertex of g2");
  }
  std::array<Vertex, 3> ys = spec.pairing;
  std::array<Vertex, 3> sorted = ys;
  std::sort(sorted.begin(), sorted.end());
  const auto ny = g2.neighbors(spec.y);
  if (!std::equal(sorted.begin(), sorted.end(), ny.begin(), ny.end())) {
    throw Error("star product: pairing is not a bijection onto N(y)");
  }
  const std::vector<int> i1 = index_without(g1, spec.x, 0);
  const std::vector<int> i2 = index_without(g2, spec.y, g1.order() - 1);
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges()) {
    if (e.u != spec.x && e.v != spec.x) edges.emplace_back(i1[e.u], i1[e.v]);
  }
  for (const Edge& e : g2.edges()) {
    if (e.u != spec.y && e.v != spec.y) edges.emplace_back(i2[e.u], i2[e.v]);
  }
  const auto nx = g1.neighbors(spec.x);
  for (int k = 0; k < 3; ++k) edges.emplace_back(i1[nx[k]], i2[ys[k]]);
  return Graph(g1.order() + g2.order() - 2, edges);
}

Graph star_product(const Graph& g1, Vertex x, const Graph& g2, Vertex y) {
  StarProductSpec spec{g1, x, g2, y, {}};
  if (y < 0 || y >= g2.order() || g2.degree(y) != 3) {
    throw Error("star product: y must be a degree-3 vertex of g2");
  }
  const auto ny = g2.neighbors(y);
  std::copy(ny.begin(), ny.end(), spec.pairing.begin());
  return star_product(spec);
}

CutReduction three_cut_reduction(const Graph& g, const EdgeCut& cut) {
  if (!g.is_cubic()) throw Error("3-cut reduction: graph is not cubic");
  if (cut.edges.size() != 3) throw Error("3-cut reduction: cut size is not 3");
  // Recompute the sides from the graph rather than trusting cut.side.
  const EdgeCut checked = make_edge_cut(g, cut.edges);
  if (checked.kind == CutKind::kTrivial) {
    throw Error("3-cut reduction: cut is trivial");
  }
  const int n = g.order();
  std::vector<char> in_first(n, 0);
  for (Vertex v : checked.side) in_first[v] = 1;

  auto build = [&](bool first, Vertex& apex,
                   std::array<Vertex, 3>& ends) -> Graph {
    std::vector<int> index(n, -1);
    int next = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (static_cast<bool>(in_first[v]) == first) index[v] = next++;
    }
    apex = next;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      if (index[e.u] >= 0 && index[e.v] >= 0) {
        edges.emplace_back(index[e.u], index[e.v]);
      }
    }
    for (int k = 0; k < 3; ++k) {
      const Edge& e = checked.edges[k];
      const Vertex end = index[e.u] >= 0 ? e.u : e.v;
      ends[k] = index[end];
      edges.emplace_back(index[end], apex);
    }
    return Graph(next + 1, edges);
  };

  CutReduction out;
  std::array<Vertex, 3> first_ends{};
  std::array<Vertex, 3> second_ends{};
  Vertex first_apex = 0;
  Vertex second_apex = 0;
  out.first = build(true, first_apex, first_ends);
  out.second = build(false, second_apex, second_ends);
  out.inverse.g1 = out.first;
  out.inverse.x = first_apex;
  out.inverse.g2 = out.second;
  out.inverse.y = second_apex;
  // Neighbors of the apex are taken in increasing order by star_product.
  for (int k = 0; k < 3; ++k) {
    const auto nx = out.first.neighbors(first_apex);
    const int slot = static_cast<int>(
        std::find(nx.begin(), nx.end(), first_ends[k]) - nx.begin());
    out.inverse.pairing[slot] = second_ends[k];
  }
  return out;
}

std::vector<Graph> constituents(const Graph& g, std::uint64_t seed) {
  if (!g.is_cubic() || !is_connected(g)) {
    throw Error("constituents: graph must be connected and cubic");
  }
  std::mt19937_64 rng(seed);
  std::vector<Graph> pending{g};
  std::vector<Graph> done;
  while (!pending.empty()) {
    Graph current = std::move(pending.back());
    pending.pop_back();
    const std::vector<EdgeCut> cuts = nontrivial_3_edge_cuts(current);
    if (cuts.empty()) {
      done.push_back(std::move(current));
      continue;
    }
    std::size_t pick = 0;
    if (seed != 0) pick = rng() % cuts.size();
    CutReduction split = three_cut_reduction(current, cuts[pick]);
    pending.push_back(std::move(split.first));
    pending.push_back(std::move(split.second));
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  for (Graph& piece : done) {
    keyed.emplace_back(canonical_form(piece), std::move(piece));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [key, piece] : keyed) out.push_back(std::move(piece));
  return out;
}

}  // namespace twofactor
