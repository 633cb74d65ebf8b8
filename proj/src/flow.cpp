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

#include "flow.hpp"

#include <deque>
#include <limits>

namespace twofactor::internal {

UnitFlow::UnitFlow(const Graph& g) : n_(g.order()), out_(g.order() + 2) {
  for (const Edge& e : g.edges()) add_arc_pair(e.u, e.v, 1, 1);
  base_arcs_ = arcs_.size();
}

void UnitFlow::add_arc_pair(int a, int b, int cap_ab, int cap_ba) {
  out_[a].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({b, cap_ab});
  out_[b].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({a, cap_ba});
}

int UnitFlow::run(std::span<const Vertex> sources,
                  std::span<const Vertex> sinks, int limit) {
  // Reset capacities and drop terminal arcs from a previous run.
  for (std::size_t i = 0; i < base_arcs_; ++i) arcs_[i].cap = 1;
  arcs_.resize(base_arcs_);
  for (int v = 0; v < n_ + 2; ++v) {
    auto& list = out_[v];
    while (!list.empty() && list.back() >= static_cast<int>(base_arcs_)) {
      list.pop_back();
    }
  }
  const int s = n_;
  const int t = n_ + 1;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  for (Vertex v : sources) add_arc_pair(s, v, kInf, 0);
  for (Vertex v : sinks) add_arc_pair(v, t, kInf, 0);

  int flow = 0;
  std::vector<int> via(n_ + 2);
  while (true) {
    reach_.assign(n_ + 2, 0);
    std::deque<int> queue{s};
    reach_[s] = 1;
    while (!queue.empty() && !reach_[t]) {
      const int x = queue.front();
      queue.pop_front();
      for (int id : out_[x]) {
        const Arc& arc = arcs_[id];
        if (arc.cap > 0 && !reach_[arc.head]) {
          reach_[arc.head] = 1;
          via[arc.head] = id;
          queue.push_back(arc.head);
        }
      }
    }
    if (!reach_[t] || flow >= limit) break;
    for (int x = t; x != s;) {
      const int id = via[x];
      arcs_[id].cap -= 1;
      arcs_[id ^ 1].cap += 1;
      x = arcs_[id ^ 1].head;
    }
    ++flow;
  }
  reach_.resize(n_);
  return flow;
}

}  // namespace twofactor::internal
