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

#include "twofactor/voltage.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>

#include "twofactor/structure.hpp"
#include "twofactor/symmetry.hpp"

namespace twofactor {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw Error("invalid group spec: " + std::string(spec));
  }
  return value;
}

FiniteGroup parse_factor(std::string_view token, std::string_view spec) {
  if (token == "NA27") return FiniteGroup::nonabelian27_exp9();
  if (token == "HEIS27") return FiniteGroup::heisenberg27();
  if (token.size() < 2 || token[0] != 'Z') {
    throw Error("invalid group spec: " + std::string(spec));
  }
  token.remove_prefix(1);
  const std::size_t caret = token.find('^');
  const int base = parse_positive(token.substr(0, caret), spec);
  if (caret == std::string_view::npos) return FiniteGroup::cyclic(base);
  const int power = parse_positive(token.substr(caret + 1), spec);
  if (is_prime(base)) return FiniteGroup::elementary_abelian(base, power);
  FiniteGroup out = FiniteGroup::cyclic(base);
  for (int i = 1; i < power; ++i) {
    out = FiniteGroup::direct_product(out, FiniteGroup::cyclic(base));
  }
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ < 1 || order_ > kMaxOrder) {
    throw Error("group order out of range: " + std::to_string(order_));
  }
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw Error("group table has the wrong size");
  }
  const int n = order_;
  for (int x : table_) {
    if (x < 0 || x >= n) throw Error("group table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a) {
      throw Error("element 0 is not the identity");
    }
  }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0);
    std::vector<char> column(n, 0);
    for (int b = 0; b < n; ++b) {
      row[mul(a, b)] = 1;
      column[mul(b, a)] = 1;
      if (mul(a, b) == 0) inverse_[a] = b;
    }
    if (std::count(row.begin(), row.end(), 1) != n ||
        std::count(column.begin(), column.end(), 1) != n) {
      throw Error("group table is not a Latin square");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) {
          throw Error("group table is not associative");
        }
      }
    }
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), n, std::move(table));
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int k) {
  if (!is_prime(p) || k < 1) {
    throw Error("elementary abelian group needs a prime and k >= 1");
  }
  FiniteGroup out = cyclic(p);
  for (int i = 1; i < k; ++i) out = direct_product(out, cyclic(p));
  if (k > 1) out.name_ = "Z" + std::to_string(p) + "^" + std::to_string(k);
  return out;
}

FiniteGroup FiniteGroup::nonabelian27_exp9() {
  // Element a + 9b stands for (a, b) with a in Z9 and b in Z3.
  constexpr int kPow4[3] = {1, 4, 7};
  std::vector<int> table(27 * 27);
  for (int x = 0; x < 27; ++x) {
    for (int y = 0; y < 27; ++y) {
      const int a = x % 9, b = x / 9, c = y % 9, d = y / 9;
      table[x * 27 + y] = (a + c * kPow4[b]) % 9 + 9 * ((b + d) % 3);
    }
  }
  return FiniteGroup("NA27", 27, std::move(table));
}

FiniteGroup FiniteGroup::heisenberg27() {
  // Element a + 3b + 9c stands for the matrix [[1,a,c],[0,1,b],[0,0,1]].
  std::vector<int> table(27 * 27);
  for (int x = 0; x < 27; ++x) {
    for (int y = 0; y < 27; ++y) {
      const int a = x % 3, b = (x / 3) % 3, c = x / 9;
      const int d = y % 3, e = (y / 3) % 3, f = y / 9;
      table[x * 27 + y] = (a + d) % 3 + 3 * ((b + e) % 3) +
                          9 * ((c + f + a * e) % 3);
    }
  }
  return FiniteGroup("HEIS27", 27, std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const int na = a.order();
  const int n = na * b.order();
  if (n > kMaxOrder) throw Error("group order out of range");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[x * n + y] =
          a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
    }
  }
  return FiniteGroup(a.name() + "x" + b.name(), n, std::move(table));
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

FiniteGroup make_group(std::string_view spec) {
  if (spec.empty()) throw Error("empty group spec");
  std::optional<FiniteGroup> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t end = std::min(spec.find('x', start), spec.size());
    FiniteGroup factor = parse_factor(spec.substr(start, end - start), spec);
    out = out ? FiniteGroup::direct_product(*out, factor) : factor;
    start = end + 1;
  }
  return *out;
}

BaseGraph::BaseGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), ends_(std::move(edges)), out_(n) {
  if (n < 1) throw Error("base graph needs at least one vertex");
  for (int e = 0; e < edge_count(); ++e) {
    const auto [u, v] = ends_[e];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("base edge endpoint out of range");
    }
    out_[u].push_back(2 * e);
    out_[v].push_back(2 * e + 1);
  }
}

BaseGraph BaseGraph::from_graph(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return BaseGraph(g.order(), std::move(edges));
}

BaseGraph BaseGraph::theta() { return BaseGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Arc BaseGraph::arc(int a) const {
  const auto [u, v] = ends_[edge_of(a)];
  return (a & 1) ? Arc{v, u} : Arc{u, v};
}

bool BaseGraph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (int a : out_[v]) {
      const Vertex w = arc(a).head;
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

int VoltageAssignment::arc_voltage(int a) const {
  const int x = edge_voltage.at(BaseGraph::edge_of(a));
  return (a & 1) ? group.inv(x) : x;
}

Graph lift(const VoltageAssignment& a) {
  const int k = a.group.order();
  if (static_cast<int>(a.edge_voltage.size()) != a.base.edge_count()) {
    throw Error("voltage assignment does not cover every base edge");
  }
  for (int x : a.edge_voltage) {
    if (x < 0 || x >= k) throw Error("voltage is not a group element");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(a.base.edge_count()) * k);
  for (int e = 0; e < a.base.edge_count(); ++e) {
    const Arc arc = a.base.arc(2 * e);
    const int alpha = a.edge_voltage[e];
    for (int g = 0; g < k; ++g) {
      const Vertex from = arc.tail * k + g;
      const Vertex to = arc.head * k + a.group.mul(g, alpha);
      if (from == to) throw Error("lift would contain a loop");
      edges.emplace_back(from, to);
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error("lift would contain parallel edges");
  }
  return Graph(a.base.order() * k, edges);
}

std::vector<std::vector<int>> short_closed_walks(const BaseGraph& base,
                                                 int max_length) {
  std::vector<std::vector<int>> out;
  std::vector<int> walk;
  auto rotations_not_smaller = [&](const std::vector<int>& w) {
    const std::size_t len = w.size();
    std::vector<int> reversed(len);
    for (std::size_t i = 0; i < len; ++i) {
      reversed[i] = BaseGraph::reverse(w[len - 1 - i]);
    }
    const std::array<const std::vector<int>*, 2> sequences{&w, &reversed};
    for (const std::vector<int>* seq : sequences) {
      for (std::size_t r = 0; r < len; ++r) {
        if (seq == &w && r == 0) continue;
        for (std::size_t i = 0; i < len; ++i) {
          const int x = (*seq)[(r + i) % len];
          if (x < w[i]) return false;
          if (x > w[i]) break;
        }
      }
    }
    return true;
  };
  auto extend = [&](auto&& self, Vertex start, Vertex at) -> void {
    if (!walk.empty() && at == start &&
        walk.back() != BaseGraph::reverse(walk.front()) &&
        rotations_not_smaller(walk)) {
      out.push_back(walk);
    }
    if (static_cast<int>(walk.size()) + 1 >= max_length) return;
    for (int a : base.out_arcs(at)) {
      if (!walk.empty() && a == BaseGraph::reverse(walk.back())) continue;
      walk.push_back(a);
      self(self, start, base.arc(a).head);
      walk.pop_back();
    }
  };
  for (Vertex s = 0; s < base.order(); ++s) extend(extend, s, s);
  return out;
}

std::uint64_t enumerate_lifts(const BaseGraph& base, const FiniteGroup& group,
                              const LiftOptions& options,
                              const std::function<bool(const Graph&)>& keep,
                              const LiftSink& sink) {
  if (options.min_girth < 3) throw Error("min_girth must be at least 3");
  if (!base.is_connected()) throw Error("base graph is not connected");

  // BFS spanning tree; every other edge carries a free voltage.
  const int m = base.edge_count();
  std::vector<char> in_tree(m, 0);
  std::vector<char> seen(base.order(), 0);
  std::vector<Vertex> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int a : base.out_arcs(queue[head])) {
      const Vertex w = base.arc(a).head;
      if (!seen[w]) {
        seen[w] = 1;
        in_tree[BaseGraph::edge_of(a)] = 1;
        queue.push_back(w);
      }
    }
  }

  const std::vector<std::vector<int>> walks =
      short_closed_walks(base, options.min_girth);
  std::vector<std::vector<int>> walk_edges(walks.size());
  for (std::size_t w = 0; w < walks.size(); ++w) {
    for (int a : walks[w]) {
      const int e = BaseGraph::edge_of(a);
      if (!in_tree[e]) walk_edges[w].push_back(e);
    }
  }

  // Greedy order: next take the cotree edge that completes the most walks.
  std::vector<int> order;
  std::vector<char> placed(m, 0);
  std::vector<int> depth_of(m, -1);
  int cotree_size = 0;
  for (int e = 0; e < m; ++e) cotree_size += in_tree[e] ? 0 : 1;
  while (static_cast<int>(order.size()) < cotree_size) {
    int best = -1;
    int best_score = -1;
    for (int e = 0; e < m; ++e) {
      if (in_tree[e] || placed[e]) continue;
      int score = 0;
      for (const auto& edges : walk_edges) {
        bool touches = false;
        bool complete = true;
        for (int f : edges) {
          if (f == e) {
            touches = true;
          } else if (!placed[f]) {
            complete = false;
          }
        }
        if (touches && complete) ++score;
      }
      if (score > best_score) {
        best = e;
        best_score = score;
      }
    }
    placed[best] = 1;
    depth_of[best] = static_cast<int>(order.size());
    order.push_back(best);
  }
  std::vector<std::vector<int>> checks(order.size());
  for (std::size_t w = 0; w < walks.size(); ++w) {
    int depth = -1;
    for (int e : walk_edges[w]) depth = std::max(depth, depth_of[e]);
    if (depth >= 0) checks[depth].push_back(static_cast<int>(w));
  }

  VoltageAssignment assignment{base, group, std::vector<int>(m, 0)};
  std::set<std::string> found;
  std::uint64_t classes = 0;
  auto net_voltage = [&](const std::vector<int>& walk) {
    int x = 0;
    for (int a : walk) x = group.mul(x, assignment.arc_voltage(a));
    return x;
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      const Graph g = lift(assignment);
      if (options.require_connected && !is_connected(g)) return;
      if (keep && !keep(g)) return;
      if (found.insert(canonical_form(g)).second) {
        ++classes;
        if (sink) sink(g, assignment.edge_voltage);
      }
      return;
    }
    for (int x = 0; x < group.order(); ++x) {
      assignment.edge_voltage[order[depth]] = x;
      bool ok = true;
      for (int w : checks[depth]) {
        if (net_voltage(walks[w]) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, depth + 1);
    }
    assignment.edge_voltage[order[depth]] = 0;
  };
  search(search, 0);
  return classes;
}

std::vector<Graph> enumerate_lifts(const BaseGraph& base,
                                   const FiniteGroup& group,
                                   const LiftOptions& options) {
  std::vector<Graph> out;
  enumerate_lifts(base, group, options, {},
                  [&](const Graph& g, const std::vector<int>&) {
                    out.push_back(g);
                  });
  return out;
}

}  // namespace twofactor
