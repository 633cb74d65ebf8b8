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

#include "twofactor/symmetry.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>

#include "twofactor/graph6.hpp"

namespace twofactor {
namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 29;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 32);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller root.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

// Ordered partition of the vertex set; cells are contiguous ranges of `lab`.
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell_of;   // vertex -> start of its cell
  std::vector<int> cell_end;  // cell start -> one past its end
  int cells = 0;

  explicit Partition(int n) : lab(n), pos(n), cell_of(n, 0), cell_end(n, 0) {
    std::iota(lab.begin(), lab.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    if (n > 0) cell_end[0] = n;
    cells = n > 0 ? 1 : 0;
  }
  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        count_(g.order(), 0),
        queued_(g.order(), 0),
        bucket_(g.max_degree() + 2) {}

  // Refines to the coarsest equitable partition finer than p, starting from
  // the given splitter cells. Returns a hash of the refinement trace.
  std::uint64_t refine(Partition& p, std::vector<int> splitters) {
    std::uint64_t trace = 0x51ed27f1a3c5b4d3ULL;
    std::vector<int> queue;
    for (int s : splitters) {
      if (!queued_[s]) {
        queued_[s] = 1;
        queue.push_back(s);
      }
    }
    std::size_t head = 0;
    const int n = g_.order();
    while (head < queue.size() && p.cells < n) {
      const int w_start = queue[head++];
      queued_[w_start] = 0;
      const int w_end = p.cell_end[w_start];
      touched_.clear();
      for (int i = w_start; i < w_end; ++i) {
        for (Vertex u : g_.neighbors(p.lab[i])) {
          if (count_[u]++ == 0) touched_.push_back(u);
        }
      }
      cells_.clear();
      for (Vertex u : touched_) cells_.push_back(p.cell_of[u]);
      std::sort(cells_.begin(), cells_.end());
      cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
      trace = mix(trace, static_cast<std::uint64_t>(w_start) << 20 |
                             touched_.size());
      for (int start : cells_) {
        const int end = p.cell_end[start];
        if (end - start == 1) continue;
        int lo = INT_MAX;
        int hi = -1;
        for (int i = start; i < end; ++i) {
          lo = std::min(lo, count_[p.lab[i]]);
          hi = std::max(hi, count_[p.lab[i]]);
        }
        if (lo == hi) continue;
        split(p, start, end, hi, trace, queue);
      }
      for (Vertex u : touched_) count_[u] = 0;
    }
    for (std::size_t i = head; i < queue.size(); ++i) queued_[queue[i]] = 0;
    return mix(trace, static_cast<std::uint64_t>(p.cells));
  }

  std::uint64_t individualize(Partition& p, Vertex v) {
    const int start = p.cell_of[v];
    const int end = p.cell_end[start];
    const int at = p.pos[v];
    const int other = p.lab[start];
    p.lab[start] = v;
    p.lab[at] = other;
    p.pos[v] = start;
    p.pos[other] = at;
    p.cell_end[start] = start + 1;
    p.cell_end[start + 1] = end;
    for (int i = start + 1; i < end; ++i) p.cell_of[p.lab[i]] = start + 1;
    ++p.cells;
    return mix(refine(p, {start}), static_cast<std::uint64_t>(start));
  }

 private:
  void split(Partition& p, int start, int end, int hi, std::uint64_t& trace,
             std::vector<int>& queue) {
    for (auto& b : bucket_) b.clear();
    for (int i = start; i < end; ++i) {
      const Vertex v = p.lab[i];
      bucket_[std::min(count_[v], static_cast<int>(bucket_.size()) - 1)]
          .push_back(v);
    }
    const bool was_queued = queued_[start];
    int at = start;
    int largest_start = -1;
    int largest_size = 0;
    std::vector<int> fresh;
    for (int c = 0; c <= hi && c < static_cast<int>(bucket_.size()); ++c) {
      if (bucket_[c].empty()) continue;
      const int frag_start = at;
      for (Vertex v : bucket_[c]) {
        p.lab[at] = v;
        p.pos[v] = at;
        p.cell_of[v] = frag_start;
        ++at;
      }
      p.cell_end[frag_start] = at;
      const int size = at - frag_start;
      trace = mix(trace, static_cast<std::uint64_t>(frag_start) << 32 |
                             static_cast<std::uint64_t>(c) << 24 | size);
      if (size > largest_size) {
        largest_size = size;
        largest_start = frag_start;
      }
      fresh.push_back(frag_start);
    }
    p.cells += static_cast<int>(fresh.size()) - 1;
    for (int s : fresh) {
      if (queued_[s]) continue;
      if (!was_queued && s == largest_start) continue;
      queued_[s] = 1;
      queue.push_back(s);
    }
  }

  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> queued_;
  std::vector<Vertex> touched_;
  std::vector<int> cells_;
  std::vector<std::vector<Vertex>> bucket_;
};

class Search {
 public:
  explicit Search(const Graph& g)
      : g_(g), n_(g.order()), refiner_(g) {}

  void run() {
    Partition root(n_);
    trace_.assign(1, 0);
    seq_.clear();
    if (n_ > 0) trace_[0] = refiner_.refine(root, {0});
    explore(root, 0, true);
  }

  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<int>& best_lab() const { return best_lab_; }
  BigInt group_order() const {
    BigInt order = 1;
    for (int f : stabilizer_factors_) order *= f;
    return order;
  }

 private:
  static constexpr int kContinue = INT_MAX;

  std::vector<int> code_of(const Partition& p) const {
    std::vector<int> code;
    code.reserve(n_ + 2 * g_.size());
    std::vector<int> row;
    for (int i = 0; i < n_; ++i) {
      const Vertex v = p.lab[i];
      code.push_back(g_.degree(v));
      row.clear();
      for (Vertex u : g_.neighbors(v)) row.push_back(p.pos[u]);
      std::sort(row.begin(), row.end());
      code.insert(code.end(), row.begin(), row.end());
    }
    return code;
  }

  int compare_with_best(int depth) const {
    const int common = std::min<int>(depth + 1, best_trace_.size());
    for (int i = 0; i < common; ++i) {
      if (trace_[i] != best_trace_[i]) return trace_[i] < best_trace_[i] ? -1 : 1;
    }
    return 0;
  }

  bool fixes_prefix(const Permutation& gen, int depth) const {
    for (int i = 0; i < depth; ++i) {
      if (gen[seq_[i]] != seq_[i]) return false;
    }
    return true;
  }

  void add_generator(Permutation gen) {
    bool identity = true;
    for (int v = 0; v < n_ && identity; ++v) identity = gen[v] == v;
    if (!identity) gens_.push_back(std::move(gen));
  }

  int target_cell(const Partition& p) const {
    int best = -1;
    int best_size = INT_MAX;
    for (int s = 0; s < n_; s = p.cell_end[s]) {
      const int size = p.cell_end[s] - s;
      if (size > 1 && size < best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  int leaf(const Partition& p, int depth, bool eq_first) {
    std::vector<int> code = code_of(p);
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = trace_;
      first_seq_ = seq_;
      first_lab_ = p.lab;
      first_code_ = code;
      best_trace_ = trace_;
      best_lab_ = p.lab;
      best_code_ = std::move(code);
      stabilizer_factors_.assign(depth, 1);
      return kContinue;
    }
    if (eq_first && code == first_code_) {
      Permutation gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[first_lab_[i]] = p.lab[i];
      int k = 0;
      while (k < depth && seq_[k] == first_seq_[k]) ++k;
      bool clean = k < depth && gamma[first_seq_[k]] == seq_[k];
      for (int i = 0; i < k && clean; ++i) {
        clean = gamma[first_seq_[i]] == first_seq_[i];
      }
      add_generator(std::move(gamma));
      return clean ? k : kContinue;
    }
    const int cmp = compare_with_best(depth);
    if (cmp > 0 || (cmp == 0 && code > best_code_)) {
      best_trace_ = trace_;
      best_lab_ = p.lab;
      best_code_ = std::move(code);
    } else if (cmp == 0 && code == best_code_) {
      Permutation gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = p.lab[i];
      add_generator(std::move(gamma));
    }
    return kContinue;
  }

  int explore(const Partition& p, int depth, bool eq_first) {
    if (have_first_) {
      eq_first = eq_first && depth < static_cast<int>(first_trace_.size()) &&
                 trace_[depth] == first_trace_[depth];
      if (!eq_first && compare_with_best(depth) < 0) return kContinue;
    }
    if (p.discrete()) return leaf(p, depth, eq_first);

    const bool on_first_path = !have_first_ || is_first_path(depth);
    const int start = target_cell(p);
    const int end = p.cell_end[start];
    const std::vector<int> children(p.lab.begin() + start,
                                    p.lab.begin() + end);
    std::vector<Vertex> explored;
    UnionFind orbits(n_);
    std::size_t gens_applied = 0;
    trace_.resize(depth + 2);
    seq_.resize(depth + 1);
    for (std::size_t c = 0; c < children.size(); ++c) {
      const Vertex w = children[c];
      if (c > 0) {
        for (; gens_applied < gens_.size(); ++gens_applied) {
          const Permutation& gen = gens_[gens_applied];
          if (!fixes_prefix(gen, depth)) continue;
          for (int v = 0; v < n_; ++v) orbits.unite(v, gen[v]);
        }
        const int root = orbits.find(w);
        bool known = false;
        for (Vertex x : explored) known = known || orbits.find(x) == root;
        if (known) continue;
      }
      Partition q = p;
      seq_[depth] = w;
      trace_[depth + 1] = refiner_.individualize(q, w);
      const int r = explore(q, depth + 1, eq_first);
      trace_.resize(depth + 2);
      seq_.resize(depth + 1);
      explored.push_back(w);
      if (r < depth) return r;
    }
    if (on_first_path && depth < static_cast<int>(first_seq_.size())) {
      for (; gens_applied < gens_.size(); ++gens_applied) {
        const Permutation& gen = gens_[gens_applied];
        if (!fixes_prefix(gen, depth)) continue;
        for (int v = 0; v < n_; ++v) orbits.unite(v, gen[v]);
      }
      const int root = orbits.find(first_seq_[depth]);
      int size = 0;
      for (Vertex v : children) size += orbits.find(v) == root;
      stabilizer_factors_[depth] = size;
    }
    return kContinue;
  }

  bool is_first_path(int depth) const {
    for (int i = 0; i < depth; ++i) {
      if (seq_[i] != first_seq_[i]) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  std::vector<std::uint64_t> trace_;
  std::vector<Vertex> seq_;

  bool have_first_ = false;
  std::vector<std::uint64_t> first_trace_;
  std::vector<Vertex> first_seq_;
  std::vector<int> first_lab_;
  std::vector<int> first_code_;

  std::vector<std::uint64_t> best_trace_;
  std::vector<int> best_lab_;
  std::vector<int> best_code_;

  std::vector<Permutation> gens_;
  std::vector<int> stabilizer_factors_;
};

std::vector<std::vector<Vertex>> orbit_lists(UnionFind& uf, int n) {
  std::vector<std::vector<Vertex>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& orbit : by_root) {
    if (!orbit.empty()) out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

AutomorphismInfo automorphisms(const Graph& g) {
  const int n = g.order();
  Search search(g);
  search.run();
  AutomorphismInfo info;
  info.generators = search.generators();
  info.group_order = search.group_order();

  UnionFind vertex_uf(n);
  for (const Permutation& gen : info.generators) {
    for (int v = 0; v < n; ++v) vertex_uf.unite(v, gen[v]);
  }
  info.vertex_orbits = orbit_lists(vertex_uf, n);

  const std::vector<Edge> edges = g.edges();
  UnionFind edge_uf(static_cast<int>(edges.size()));
  for (const Permutation& gen : info.generators) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge image(gen[edges[i].u], gen[edges[i].v]);
      const auto it = std::lower_bound(edges.begin(), edges.end(), image);
      edge_uf.unite(static_cast<int>(i), static_cast<int>(it - edges.begin()));
    }
  }
  for (auto& orbit : orbit_lists(edge_uf, static_cast<int>(edges.size()))) {
    std::vector<Edge> list;
    for (int i : orbit) list.push_back(edges[i]);
    info.edge_orbits.push_back(std::move(list));
  }

  info.canonical_labeling.assign(n, 0);
  const std::vector<int>& lab = search.best_lab();
  for (int i = 0; i < n; ++i) info.canonical_labeling[lab[i]] = i;
  return info;
}

Permutation canonical_labeling(const Graph& g) {
  return automorphisms(g).canonical_labeling;
}

std::string canonical_form(const Graph& g) {
  return write_graph6(g.relabeled(canonical_labeling(g)));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool is_automorphism(const Graph& g, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Vertex image : perm) {
    if (image < 0 || image >= g.order() || hit[image]) return false;
    hit[image] = 1;
  }
  for (const Edge& e : g.edges()) {
    if (!g.has_edge(perm[e.u], perm[e.v])) return false;
  }
  return true;
}

Transitivity transitivity(const Graph& g, const AutomorphismInfo& info) {
  Transitivity t;
  t.vertex_transitive = info.vertex_orbits.size() <= 1;
  t.edge_transitive = info.edge_orbits.size() <= 1;
  const bool regular = g.order() == 0 || g.is_regular(g.degree(0));
  t.semisymmetric = regular && t.edge_transitive && !t.vertex_transitive;
  return t;
}

Transitivity transitivity(const Graph& g) {
  return transitivity(g, automorphisms(g));
}

}  // namespace twofactor
