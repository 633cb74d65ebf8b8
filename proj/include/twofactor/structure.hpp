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

#ifndef TWOFACTOR_STRUCTURE_HPP_
#define TWOFACTOR_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "twofactor/graph.hpp"

namespace twofactor {

// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Bipartition {
  // side[v] is 0 or 1; empty when not bipartite.
  std::vector<int> side;
  // Vertices of an odd cycle, in cyclic order, when not bipartite.
  std::vector<Vertex> odd_cycle;

  bool bipartite() const { return odd_cycle.empty(); }
  std::vector<Vertex> part(int which) const;
};

// 2-colors every component; the lowest vertex of each component gets side 0.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// component[v] numbered from 0 in order of lowest vertex.
std::vector<int> components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// Global edge connectivity: unit-capacity max-flow from vertex 0 to every
// other vertex. Requires n >= 2.
int edge_connectivity(const Graph& g);

enum class CutKind { kTrivial, kNontrivial, kCyclic };

struct EdgeCut {
  std::vector<Edge> edges;  // sorted
  // The side containing vertex 0, sorted. The other side is its complement.
  std::vector<Vertex> side;
  CutKind kind = CutKind::kNontrivial;
};

// Tags a bond (minimal edge cut) of g. Throws Error when `edges` is not an
// edge set whose removal leaves exactly two components joined by all of it.
EdgeCut make_edge_cut(const Graph& g, std::vector<Edge> edges);

// Every 3-edge bond of a connected cubic graph that is not the star of a
// single vertex, in lexicographic order of the sorted edge triples.
std::vector<EdgeCut> nontrivial_3_edge_cuts(const Graph& g);

// Connected cubic, 3-edge-connected and without nontrivial 3-edge-cuts.
bool is_essentially_4_edge_connected(const Graph& g);

// Minimum size of an edge cut leaving two components that each contain a
// cycle; nullopt when g has no two vertex-disjoint cycles. g connected.
std::optional<int> cyclic_edge_connectivity(const Graph& g);

// All shortest cycles through edge {u,v}, each as a vertex sequence starting
// u, ..., v. Empty when the edge is a bridge.
std::vector<std::vector<Vertex>> shortest_cycles_through(const Graph& g,
                                                         Vertex u, Vertex v);

}  // namespace twofactor

#endif  // TWOFACTOR_STRUCTURE_HPP_
