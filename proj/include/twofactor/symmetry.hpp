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

#ifndef TWOFACTOR_SYMMETRY_HPP_
#define TWOFACTOR_SYMMETRY_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "twofactor/graph.hpp"

namespace twofactor {

using BigInt = boost::multiprecision::cpp_int;

// A vertex permutation, perm[v] = image of v.
using Permutation = std::vector<Vertex>;

struct AutomorphismInfo {
  std::vector<Permutation> generators;
  BigInt group_order = 1;
  // Orbits of the generated group, each sorted, ordered by least element.
  std::vector<std::vector<Vertex>> vertex_orbits;
  std::vector<std::vector<Edge>> edge_orbits;
  // canonical_labeling[v] is the position of v in the canonical order.
  Permutation canonical_labeling;
};

struct Transitivity {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool semisymmetric = false;

  friend bool operator==(const Transitivity&, const Transitivity&) = default;
};

// Individualization-refinement search over equitable partitions. Produces
// generators, the exact group order (product of the stabilizer orbit sizes
// along the first path), orbits and a canonical labeling in one pass.
AutomorphismInfo automorphisms(const Graph& g);

Permutation canonical_labeling(const Graph& g);

// graph6 of g relabeled canonically: equal strings iff isomorphic graphs.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

bool is_automorphism(const Graph& g, const Permutation& perm);

Transitivity transitivity(const Graph& g);
Transitivity transitivity(const Graph& g, const AutomorphismInfo& info);

}  // namespace twofactor

#endif  // TWOFACTOR_SYMMETRY_HPP_
