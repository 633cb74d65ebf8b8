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

#include "twofactor/generator.hpp"

#include <array>
#include <set>

#include "twofactor/graph6.hpp"
#include "twofactor/structure.hpp"
#include "twofactor/symmetry.hpp"

namespace twofactor {
namespace {

class IncidenceSearch {
 public:
  IncidenceSearch(int k, const GraphSink& sink)
      : k_(k),
        sink_(sink),
        rows_(k),
        column_sum_(k, 0),
        pair_used_(static_cast<std::size_t>(k) * k, 0),
        equal_(k, 1) {}

  std::uint64_t run() {
    place(0);
    return emitted_;
  }

 private:
  using Triple = std::array<int, 3>;

  bool fits(const Triple& t, int row) const {
    for (int c : t) {
      if (column_sum_[c] == 3) return false;
    }
    if (pair_used_[t[0] * k_ + t[1]] || pair_used_[t[0] * k_ + t[2]] ||
        pair_used_[t[1] * k_ + t[2]]) {
      return false;
    }
    // Column j+1 may not overtake an equal-so-far column j.
    for (int c : t) {
      if (c > 0 && equal_[c - 1] && !(c - 1 == t[0] || c - 1 == t[1])) {
        return false;
      }
    }
    // Every column still short of 3 needs enough rows left.
    const int rows_left = k_ - row - 1;
    for (int c = 0; c < k_; ++c) {
      const int after = column_sum_[c] + (c == t[0] || c == t[1] || c == t[2]);
      if (3 - after > rows_left) return false;
    }
    return true;
  }

  void apply(const Triple& t, int delta) {
    for (int c : t) column_sum_[c] += delta;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        pair_used_[t[i] * k_ + t[j]] += delta;
      }
    }
  }

  void place(int row) {
    if (row == k_) {
      emit();
      return;
    }
    Triple start{0, 1, 2};
    if (row > 0) start = rows_[row - 1];
    for (int a = start[0]; a < k_; ++a) {
      for (int b = a + 1; b < k_; ++b) {
        for (int c = b + 1; c < k_; ++c) {
          const Triple t{a, b, c};
          if (row > 0 && t <= rows_[row - 1]) continue;
          if (!fits(t, row)) continue;
          std::vector<std::pair<int, char>> saved;
          for (int j = 0; j + 1 < k_; ++j) {
            const bool in_j = j == a || j == b || j == c;
            const bool in_next = j + 1 == a || j + 1 == b || j + 1 == c;
            if (equal_[j] && in_j != in_next) {
              saved.emplace_back(j, equal_[j]);
              equal_[j] = 0;
            }
          }
          apply(t, 1);
          rows_[row] = t;
          place(row + 1);
          apply(t, -1);
          for (const auto& [j, value] : saved) equal_[j] = value;
        }
      }
      if (row == 0) break;
    }
  }

  void emit() {
    std::vector<Edge> edges;
    edges.reserve(3 * k_);
    for (int r = 0; r < k_; ++r) {
      for (int c : rows_[r]) edges.emplace_back(r, k_ + c);
    }
    const Graph g(2 * k_, edges);
    if (!is_connected(g)) return;
    if (seen_.insert(canonical_form(g)).second) {
      ++emitted_;
      if (sink_) sink_(g);
    }
  }

  int k_;
  const GraphSink& sink_;
  std::vector<Triple> rows_;
  std::vector<int> column_sum_;
  std::vector<int> pair_used_;
  std::vector<char> equal_;
  std::set<std::string> seen_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::uint64_t generate(int n, const GraphSink& sink) {
  if (n < 2 || n % 2 != 0) {
    throw Error("generate: n must be a positive even number");
  }
  if (n < 14) return 0;
  IncidenceSearch search(n / 2, sink);
  return search.run();
}

std::vector<Graph> generate(int n) {
  std::vector<Graph> out;
  generate(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

PipelineSummary pipeline_classify(int n, const ClassifyOptions& options) {
  PipelineSummary summary;
  summary.n = n;
  summary.graphs = generate(n, [&](const Graph& g) {
    const ClassificationReport report = classify(g, options);
    if (report.pseudo_2f_isomorphic != std::optional<bool>(true)) return;
    PseudoTwoFactorIsomorphicGraph found;
    found.graph6 = write_graph6(g);
    found.essentially_4_edge_connected = is_essentially_4_edge_connected(g);
    for (const auto& [type, count] : report.type_multiset) {
      found.types.push_back(type);
    }
    summary.pseudo_2f_isomorphic.push_back(std::move(found));
  });
  return summary;
}

}  // namespace twofactor
