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

#ifndef TWOFACTOR_GRAPH_HPP_
#define TWOFACTOR_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twofactor {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Raised for malformed input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph on vertices 0..n-1 in compressed
// adjacency form. Neighbor lists are strictly increasing.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}
  explicit Graph(int n);
  // Throws Error on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t size() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_cubic() const { return is_regular(3); }
  bool is_regular(int d) const;
  int max_degree() const;

  // All edges sorted lexicographically.
  std::vector<Edge> edges() const;
  // Index of edge {u,v} within edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  // Relabels vertex v to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph induced(std::span<const Vertex> vertices) const;
  Graph without_edges(std::span<const Edge> removed) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<int> offsets_;
  std::vector<Vertex> neighbors_;
};

// Disjoint union, second graph shifted by first.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace twofactor

#endif  // TWOFACTOR_GRAPH_HPP_
