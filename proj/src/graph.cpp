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

#include "twofactor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace twofactor {

Graph::Graph(int n) : offsets_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) throw Error("negative vertex count");
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.emplace_back(a, b);
  *this = Graph(n, list);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  std::vector<int> degree(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw Error("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                  std::to_string(e.v));
    }
    if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  neighbors_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges) {
    neighbors_[fill[e.u]++] = e.v;
    neighbors_[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + offsets_[v];
    auto last = neighbors_.begin() + offsets_[v + 1];
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw Error("parallel edge at vertex " + std::to_string(v));
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < order(); ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (int u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (!has_edge(u, v)) return -1;
  int index = 0;
  for (int w = 0; w < u; ++w) {
    for (Vertex x : neighbors(w)) index += (w < x);
  }
  for (Vertex x : neighbors(u)) {
    if (x == v) return index;
    index += (u < x);
  }
  return -1;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> out;
  out.reserve(size());
  for (const Edge& e : edges()) out.emplace_back(perm[e.u], perm[e.v]);
  return Graph(order(), out);
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> out;
  for (const Edge& e : edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      out.emplace_back(index[e.u], index[e.v]);
    }
  }
  return Graph(static_cast<int>(vertices.size()), out);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> keep = edges();
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::erase_if(keep, [&](const Edge& e) {
    return std::binary_search(drop.begin(), drop.end(), e);
  });
  return Graph(order(), keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> out = a.edges();
  for (const Edge& e : b.edges()) {
    out.emplace_back(e.u + a.order(), e.v + a.order());
  }
  return Graph(a.order() + b.order(), out);
}

}  // namespace twofactor
