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

#include "twofactor/structure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "flow.hpp"

namespace twofactor {
namespace {

// Shortest cycle length found by a BFS from `root`, capped by `best`.
int shortest_cycle_from(const Graph& g, Vertex root, int best,
                        std::vector<int>& dist, std::vector<int>& parent) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[root] = 0;
  parent[root] = -1;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (2 * dist[x] + 1 >= best) break;
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      } else if (y != parent[x]) {
        best = std::min(best, dist[x] + dist[y] + 1);
      }
    }
  }
  return best;
}

std::vector<int> component_labels(const Graph& g, std::span<const Edge> removed,
                                  int* count) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[y] >= 0) continue;
        const Edge e(x, y);
        if (std::find(removed.begin(), removed.end(), e) != removed.end()) {
          continue;
        }
        label[y] = next;
        stack.push_back(y);
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return label;
}

// Bridges of g minus the edges flagged in `dead` (indexed like g.edges()).
class BridgeFinder {
 public:
  explicit BridgeFinder(const Graph& g) : g_(g), edges_(g.edges()) {
    const int n = g.order();
    incident_.resize(n);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
    disc_.resize(n);
    low_.resize(n);
  }

  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<int> bridges(const std::vector<char>& dead) {
    std::fill(disc_.begin(), disc_.end(), -1);
    std::vector<int> out;
    int clock = 0;
    struct Frame {
      Vertex v;
      int via;
      std::size_t next;
    };
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (disc_[root] >= 0) continue;
      std::vector<Frame> stack{{root, -1, 0}};
      disc_[root] = low_[root] = clock++;
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < incident_[f.v].size()) {
          const int id = incident_[f.v][f.next++];
          if (dead[id] || id == f.via) continue;
          const Vertex w = edges_[id].u == f.v ? edges_[id].v : edges_[id].u;
          if (disc_[w] < 0) {
            disc_[w] = low_[w] = clock++;
            stack.push_back({w, id, 0});
          } else {
            low_[f.v] = std::min(low_[f.v], disc_[w]);
          }
        } else {
          const Frame done = f;
          stack.pop_back();
          if (!stack.empty()) {
            Frame& up = stack.back();
            low_[up.v] = std::min(low_[up.v], low_[done.v]);
            if (low_[done.v] > disc_[up.v]) out.push_back(done.via);
          }
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Graph& g_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> disc_;
  std::vector<int> low_;
};

bool side_has_cycle(const Graph& g, const std::vector<char>& in_side) {
  int vertices = 0;
  int edges = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!in_side[v]) continue;
    ++vertices;
    for (Vertex w : g.neighbors(v)) edges += (v < w && in_side[w]);
  }
  // Each side of a bond is connected, so it is a tree iff e = v - 1.
  return edges >= vertices;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  const int kNone = n + 1;
  int best = kNone;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (Vertex v = 0; v < n && best > 3; ++v) {
    best = shortest_cycle_from(g, v, best, dist, parent);
  }
  if (best == kNone) return std::nullopt;
  return best;
}

std::vector<Vertex> Bipartition::part(int which) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(side.size()); ++v) {
    if (side[v] == which) out.push_back(v);
  }
  return out;
}

Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  Bipartition result;
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          result.odd_cycle = left;
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(),
                                  right.rend());
          return result;
        }
      }
    }
  }
  result.side = std::move(color);
  return result;
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite(); }

std::vector<int> components(const Graph& g, int* count) {
  return component_labels(g, {}, count);
}

bool is_connected(const Graph& g) {
  int count = 0;
  components(g, &count);
  return count <= 1;
}

int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error("edge connectivity needs at least 2 vertices");
  if (!is_connected(g)) return 0;
  int best = n;
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v));
  internal::UnitFlow flow(g);
  const Vertex source[] = {0};
  for (Vertex t = 1; t < n && best > 0; ++t) {
    const Vertex sink[] = {t};
    best = std::min(best, flow.run(source, sink, best));
  }
  return best;
}

EdgeCut make_edge_cut(const Graph& g, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error("cut edge " + std::to_string(e.u) + "-" +
                  std::to_string(e.v) + " is not in the graph");
    }
  }
  int count = 0;
  const std::vector<int> label = component_labels(g, edges, &count);
  int base = 0;
  components(g, &base);
  if (count != base + 1) throw Error("edge set is not a bond");
  const int side_label = label[0];
  std::vector<char> in_side(g.order(), 0);
  EdgeCut cut;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] == side_label) {
      in_side[v] = 1;
      cut.side.push_back(v);
    }
  }
  for (const Edge& e : edges) {
    if (in_side[e.u] == in_side[e.v]) throw Error("edge set is not a bond");
  }
  const Edge& first = edges.front();
  const int far_label = in_side[first.u] ? label[first.v] : label[first.u];
  std::vector<char> other(g.order(), 0);
  int other_size = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] == far_label) {
      other[v] = 1;
      ++other_size;
    }
  }
  const bool star = cut.side.size() == 1 || other_size == 1;
  if (star) {
    cut.kind = CutKind::kTrivial;
  } else if (side_has_cycle(g, in_side) && side_has_cycle(g, other)) {
    cut.kind = CutKind::kCyclic;
  } else {
    cut.kind = CutKind::kNontrivial;
  }
  cut.edges = std::move(edges);
  return cut;
}

std::vector<EdgeCut> nontrivial_3_edge_cuts(const Graph& g) {
  if (!g.is_cubic()) throw Error("nontrivial_3_edge_cuts: graph is not cubic");
  if (!is_connected(g)) {
    throw Error("nontrivial_3_edge_cuts: graph is not connected");
  }
  BridgeFinder finder(g);
  const auto& edges = finder.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<char> dead(m, 0);
  std::vector<EdgeCut> out;
  for (int a = 0; a < m; ++a) {
    dead[a] = 1;
    for (int b = a + 1; b < m; ++b) {
      dead[b] = 1;
      for (int c : finder.bridges(dead)) {
        if (c <= b) continue;
        std::vector<Edge> triple{edges[a], edges[b], edges[c]};
        int count = 0;
        component_labels(g, triple, &count);
        if (count != 2) continue;
        EdgeCut cut = make_edge_cut(g, triple);
        if (cut.kind != CutKind::kTrivial) out.push_back(std::move(cut));
      }
      dead[b] = 0;
    }
    dead[a] = 0;
  }
  return out;
}

bool is_essentially_4_edge_connected(const Graph& g) {
  if (!g.is_cubic() || !is_connected(g) || g.order() < 2) return false;
  if (edge_connectivity(g) < 3) return false;
  return nontrivial_3_edge_cuts(g).empty();
}

std::vector<std::vector<Vertex>> shortest_cycles_through(const Graph& g,
                                                         Vertex u, Vertex v) {
  const int n = g.order();
  std::vector<int> dist(n, -1);
  dist[u] = 0;
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex y : g.neighbors(x)) {
      if (x == u && y == v) continue;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::vector<Vertex>> out;
  if (dist[v] < 0) return out;
  // Walk back from v along strictly decreasing distances.
  std::vector<Vertex> path{v};
  auto extend = [&](auto&& self) -> void {
    const Vertex x = path.back();
    if (x == u) {
      out.emplace_back(path.rbegin(), path.rend());
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (x == v && y == u) continue;
      if (dist[y] >= 0 && dist[y] == dist[x] - 1) {
        path.push_back(y);
        self(self);
        path.pop_back();
      }
    }
  };
  extend(extend);
  return out;
}

std::optional<int> cyclic_edge_connectivity(const Graph& g) {
  if (!is_connected(g)) throw Error("cyclic_edge_connectivity: disconnected");
  const int n = g.order();
  // Candidate cycles: every shortest cycle through every edge, by vertex set.
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<Vertex>> cycles;
  for (const Edge& e : g.edges()) {
    for (auto& cycle : shortest_cycles_through(g, e.u, e.v)) {
      std::vector<Vertex> key = cycle;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) cycles.push_back(std::move(key));
    }
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  const int m = static_cast<int>(cycles.size());
  std::vector<std::vector<std::uint64_t>> masks(m);
  const int words = (n + 63) / 64;
  for (int i = 0; i < m; ++i) {
    masks[i].assign(words, 0);
    for (Vertex v : cycles[i]) masks[i][v / 64] |= 1ULL << (v % 64);
  }
  auto disjoint = [&](int i, int j) {
    for (int w = 0; w < words; ++w) {
      if (masks[i][w] & masks[j][w]) return false;
    }
    return true;
  };

  internal::UnitFlow flow(g);
  int best = static_cast<int>(g.size()) + 1;
  bool found = false;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!disjoint(i, j)) continue;
      found = true;
      best = std::min(best, flow.run(cycles[i], cycles[j], best));
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace twofactor
