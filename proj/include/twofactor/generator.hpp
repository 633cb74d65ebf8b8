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

#ifndef TWOFACTOR_GENERATOR_HPP_
#define TWOFACTOR_GENERATOR_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twofactor/graph.hpp"
#include "twofactor/two_factor.hpp"

namespace twofactor {

using GraphSink = std::function<void(const Graph&)>;

// One representative of every isomorphism class of connected cubic
// bipartite graphs of girth at least 6 on n vertices, as Levi graphs of
// 3-regular incidence matrices built row by row in doubly lexicographic
// order. Rows are vertices 0..n/2-1, columns n/2..n-1. Output order is
// deterministic. Throws Error for odd n or n < 2.
std::uint64_t generate(int n, const GraphSink& sink);
std::vector<Graph> generate(int n);

struct PseudoTwoFactorIsomorphicGraph {
  std::string graph6;
  bool essentially_4_edge_connected = false;
  std::vector<CycleType> types;
};

struct PipelineSummary {
  int n = 0;
  std::uint64_t graphs = 0;
  std::vector<PseudoTwoFactorIsomorphicGraph> pseudo_2f_isomorphic;
};

// Generates every graph on n vertices and classifies it.
PipelineSummary pipeline_classify(int n, const ClassifyOptions& options);

}  // namespace twofactor

#endif  // TWOFACTOR_GENERATOR_HPP_
