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

#ifndef TWOFACTOR_SRC_FLOW_HPP_
#define TWOFACTOR_SRC_FLOW_HPP_

#include <span>
#include <vector>

#include "twofactor/graph.hpp"

namespace twofactor::internal {

// Unit-capacity max-flow on an undirected graph between two disjoint vertex
// sets, each contracted to a single terminal. Shortest augmenting paths.
class UnitFlow {
 public:
  explicit UnitFlow(const Graph& g);

  // Max-flow value, stopping early once `limit` is reached.
  int run(std::span<const Vertex> sources, std::span<const Vertex> sinks,
          int limit);

  // After run(): vertices reachable from the sources in the residual graph.
  const std::vector<char>& source_side() const { return reach_; }

 private:
  struct Arc {
    int head;
    int cap;
  };
  void add_arc_pair(int a, int b, int cap_ab, int cap_ba);

  int n_;
  std::vector<std::vector<int>> out_;  // arc ids per node
  std::vector<Arc> arcs_;
  std::size_t base_arcs_ = 0;
  std::vector<char> reach_;
};

}  // namespace twofactor::internal

#endif  // TWOFACTOR_SRC_FLOW_HPP_
