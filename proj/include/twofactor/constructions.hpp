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

#ifndef TWOFACTOR_CONSTRUCTIONS_HPP_
#define TWOFACTOR_CONSTRUCTIONS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twofactor/graph.hpp"
#include "twofactor/structure.hpp"

namespace twofactor {

// Names accepted by named(): K4, K5, K33, Petersen, Heawood, Pappus, Gray,
// G30 (the 30-vertex counterexample).
std::vector<std::string> named_graphs();

// The requested graph under a fixed labeling. Throws Error for unknown names.
//
// Gray is built by the Bouwer construction: copy c in 0..2 of K3,3 has
// vertices a(c,i) = 6c+i and b(c,j) = 6c+3+j; the subdivision vertex of edge
// e = 3i+j in copy c is 18+9c+e and the apex joined to the three
// subdivision vertices of e is 45+e.
Graph named(std::string_view name);

struct StarProductSpec {
  Graph g1;
  Vertex x = 0;
  Graph g2;
  Vertex y = 0;
  // The i-th neighbor of x (increasing order) is joined to pairing[i], a
  // neighbor of y.
  std::array<Vertex, 3> pairing{};
};

// (g1 - x) + (g2 - y) plus the three pairing edges. Vertices of g1 - x come
// first in their original order, then those of g2 - y.
Graph star_product(const StarProductSpec& spec);

// Pairs the neighbors of x and y in increasing order.
Graph star_product(const Graph& g1, Vertex x, const Graph& g2, Vertex y);

struct CutReduction {
  // first holds the side of the cut containing vertex 0. Each piece keeps
  // its side's vertices in increasing order and appends one new vertex.
  Graph first;
  Graph second;
  // Star-multiplying the pieces at their new vertices with this spec
  // rebuilds the original graph up to relabeling.
  StarProductSpec inverse;
};

// Removes a nontrivial 3-edge-cut of a connected cubic graph and caps each
// side with a new vertex.
CutReduction three_cut_reduction(const Graph& g, const EdgeCut& cut);

// Essentially 4-edge-connected constituents, sorted by canonical form. With
// seed 0 the lexicographically smallest nontrivial cut is reduced at each
// step; another seed picks cuts pseudo-randomly (used for confluence tests).
std::vector<Graph> constituents(const Graph& g, std::uint64_t seed = 0);

}  // namespace twofactor

#endif  // TWOFACTOR_CONSTRUCTIONS_HPP_
