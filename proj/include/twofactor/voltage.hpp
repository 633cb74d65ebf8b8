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

#ifndef TWOFACTOR_VOLTAGE_HPP_
#define TWOFACTOR_VOLTAGE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twofactor/graph.hpp"

namespace twofactor {

// Finite group on elements 0..order-1 with 0 the identity, given by its
// Cayley table. The constructor checks the group axioms exhaustively.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 512;

  FiniteGroup(std::string name, int order, std::vector<int> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup elementary_abelian(int p, int k);
  // Z9 extended by Z3 acting as multiplication by 4; exponent 9.
  static FiniteGroup nonabelian27_exp9();
  // Unitriangular 3x3 matrices over GF(3); exponent 3.
  static FiniteGroup heisenberg27();
  static FiniteGroup direct_product(const FiniteGroup& a,
                                    const FiniteGroup& b);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  bool is_abelian() const;
  int element_order(int a) const;
  int exponent() const;

 private:
  std::string name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// Parses "Z7", "Z3^2", "NA27", "HEIS27" and products joined by 'x', such
// as "Z3xZ5".
FiniteGroup make_group(std::string_view spec);

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
};

// Undirected multigraph with loops. Edge e is stored as arc 2e (its listed
// direction) and arc 2e+1 (the reverse).
class BaseGraph {
 public:
  BaseGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);
  static BaseGraph from_graph(const Graph& g);
  // Two vertices joined by three parallel edges.
  static BaseGraph theta();

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  int arc_count() const { return 2 * edge_count(); }
  Arc arc(int a) const;
  static int reverse(int a) { return a ^ 1; }
  static int edge_of(int a) { return a >> 1; }
  // Arcs leaving v, loops contributing both of their arcs.
  const std::vector<int>& out_arcs(Vertex v) const { return out_[v]; }
  int degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  bool is_connected() const;

 private:
  int n_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<std::vector<int>> out_;
};

// voltage(arc 2e) = edge_voltage[e] and voltage(arc 2e+1) is its inverse.
struct VoltageAssignment {
  BaseGraph base;
  FiniteGroup group;
  std::vector<int> edge_voltage;

  int arc_voltage(int a) const;
};

// Vertex (v, g) of the lift is numbered v * |group| + g. Throws Error when
// the lift would contain a loop or parallel edges.
Graph lift(const VoltageAssignment& a);

struct LiftOptions {
  int min_girth = 3;
  bool require_connected = true;
};

using LiftSink = std::function<void(const Graph& lift,
                                    const std::vector<int>& edge_voltage)>;

// Every simple lift of girth at least min_girth up to isomorphism, each
// passed once to `sink` in discovery order. Voltages on a BFS spanning tree
// are fixed to the identity and cotree edges are assigned depth first;
// a branch is cut as soon as a closed non-backtracking walk shorter than
// min_girth has identity net voltage. Returns the number of classes.
std::uint64_t enumerate_lifts(const BaseGraph& base, const FiniteGroup& group,
                              const LiftOptions& options,
                              const std::function<bool(const Graph&)>& keep,
                              const LiftSink& sink);

std::vector<Graph> enumerate_lifts(const BaseGraph& base,
                                   const FiniteGroup& group,
                                   const LiftOptions& options = {});

// Cyclically reduced closed walks of length below max_length, one per
// rotation and reversal class, as arc sequences.
std::vector<std::vector<int>> short_closed_walks(const BaseGraph& base,
                                                 int max_length);

}  // namespace twofactor

#endif  // TWOFACTOR_VOLTAGE_HPP_
