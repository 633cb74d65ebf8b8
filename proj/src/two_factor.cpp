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

#include "twofactor/two_factor.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "twofactor/structure.hpp"

namespace twofactor {
namespace {

class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g, const MatchingVisitor& visit)
      : g_(g),
        visit_(visit),
        mate_(g.order(), -1),
        avail_(g.order(), 0) {}

  std::uint64_t run() {
    const int n = g_.order();
    if (n % 2 != 0) return 0;
    if (n == 0) {
      ++count_;
      visit_(mate_);
      return count_;
    }
    for (Vertex v = 0; v < n; ++v) {
      avail_[v] = g_.degree(v);
      if (avail_[v] == 0) return 0;
      if (avail_[v] == 1) forced_.push_back(v);
    }
    if (propagate()) search(0);
    return count_;
  }

 private:
  // Matches u-w and updates the available degree of their unmatched
  // neighbors. Returns false if some unmatched vertex is left isolated.
  bool match(Vertex u, Vertex w) {
    mate_[u] = w;
    mate_[w] = u;
    trail_.emplace_back(u, w);
    bool ok = true;
    for (Vertex end : {u, w}) {
      for (Vertex x : g_.neighbors(end)) {
        if (mate_[x] != -1) continue;
        if (--avail_[x] == 0) {
          ok = false;
        } else if (avail_[x] == 1) {
          forced_.push_back(x);
        }
      }
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto [u, w] = trail_.back();
      trail_.pop_back();
      for (Vertex end : {u, w}) {
        for (Vertex x : g_.neighbors(end)) {
          if (mate_[x] == -1) ++avail_[x];
        }
      }
      mate_[u] = -1;
      mate_[w] = -1;
    }
  }

  bool propagate() {
    while (!forced_.empty()) {
      const Vertex x = forced_.back();
      forced_.pop_back();
      if (mate_[x] != -1) continue;
      if (avail_[x] == 0) return false;
      Vertex y = -1;
      for (Vertex z : g_.neighbors(x)) {
        if (mate_[z] == -1) {
          y = z;
          break;
        }
      }
      if (!match(x, y)) return false;
    }
    return true;
  }

  void search(Vertex low) {
    const int n = g_.order();
    while (low < n && mate_[low] != -1) ++low;
    if (low == n) {
      ++count_;
      if (!visit_(mate_)) stopped_ = true;
      return;
    }
    for (Vertex y : g_.neighbors(low)) {
      if (mate_[y] != -1) continue;
      const std::size_t mark = trail_.size();
      const bool ok = match(low, y) && propagate();
      forced_.clear();
      if (ok) search(low + 1);
      undo_to(mark);
      if (stopped_) return;
    }
  }

  const Graph& g_;
  const MatchingVisitor& visit_;
  std::vector<Vertex> mate_;
  std::vector<int> avail_;
  std::vector<std::pair<Vertex, Vertex>> trail_;
  std::vector<Vertex> forced_;
  std::uint64_t count_ = 0;
  bool stopped_ = false;
};

// Edmonds' blossom augmentation for general graphs.
class BlossomAugmenter {
 public:
  BlossomAugmenter(const Graph& g, std::vector<Vertex>& mate)
      : g_(g),
        mate_(mate),
        n_(g.order()),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_) {}

  bool augment_from(Vertex root) {
    Vertex v = find_path(root);
    if (v < 0) return false;
    while (v >= 0) {
      const Vertex pv = parent_[v];
      const Vertex ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
    return true;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          const Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::vector<Vertex>& mate_;
  int n_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

// Alternating-path depth-first search from a free vertex of a bipartite
// graph.
bool augment_bipartite(const Graph& g, std::vector<Vertex>& mate, Vertex root,
                       std::vector<int>& stamp, int round) {
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, 0}};
  stamp[root] = round;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto nb = g.neighbors(f.v);
    if (f.next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nb[f.next++];
    if (stamp[w] == round) continue;
    stamp[w] = round;
    if (mate[w] < 0) {
      // Flip the path root .. f.v, w.
      Vertex right = w;
      for (std::size_t i = stack.size(); i-- > 0;) {
        const Vertex left = stack[i].v;
        const Vertex previous = mate[left];
        mate[left] = right;
        mate[right] = left;
        right = previous;
      }
      return true;
    }
    const Vertex next = mate[w];
    if (stamp[next] == round) continue;
    stamp[next] = round;
    stack.push_back({next, 0});
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

TwoFactorEvidence evidence_of(const Graph& g, std::span<const Vertex> mate,
                              CycleType type) {
  TwoFactorEvidence out;
  for (const Edge& e : g.edges()) {
    if (mate[e.u] != e.v) out.edges.push_back(e);
  }
  out.type = std::move(type);
  return out;
}

class TypeScratch {
 public:
  explicit TypeScratch(int n) : seen_(n, 0) {}

  void compute(const Graph& g, std::span<const Vertex> mate, CycleType& out) {
    out.clear();
    ++round_;
    const int n = g.order();
    for (Vertex start = 0; start < n; ++start) {
      if (seen_[start] == round_) continue;
      int length = 0;
      Vertex prev = -1;
      Vertex cur = start;
      do {
        seen_[cur] = round_;
        ++length;
        Vertex next = -1;
        for (Vertex x : g.neighbors(cur)) {
          if (x != mate[cur] && x != prev) {
            next = x;
            break;
          }
        }
        prev = cur;
        cur = next;
      } while (cur != start);
      out.push_back(length);
    }
    std::sort(out.begin(), out.end());
  }

 private:
  std::vector<int> seen_;
  int round_ = 0;
};

using Clock = std::chrono::steady_clock;

// State shared by the workers of one classification.
struct SharedEvidence {
  std::atomic<bool> stop{false};
  std::atomic<bool> refuted{false};
  std::atomic<bool> has_parity[2] = {false, false};
  std::atomic<bool> types_differ{false};
  std::atomic<bool> non_hamiltonian{false};
  std::atomic<bool> has_first_type{false};
  std::atomic<bool> no_matching{false};
  std::mutex mu;
  std::optional<TwoFactorEvidence> slot[2];
  CycleType first_type;

  // Records one 2-factor; returns true once both parities are known.
  bool offer(const Graph& g, std::span<const Vertex> mate,
             const CycleType& type) {
    if (type.size() > 1) non_hamiltonian.store(true, std::memory_order_relaxed);
    const int parity = static_cast<int>(type.size() % 2);
    if (!has_first_type.load(std::memory_order_acquire) ||
        !has_parity[parity].load(std::memory_order_acquire)) {
      std::lock_guard<std::mutex> lock(mu);
      if (!has_first_type.load()) {
        first_type = type;
        has_first_type.store(true, std::memory_order_release);
      }
      if (!slot[parity]) {
        slot[parity] = evidence_of(g, mate, type);
        has_parity[parity].store(true, std::memory_order_release);
      }
      if (slot[0] && slot[1]) refuted.store(true, std::memory_order_release);
    }
    if (!types_differ.load(std::memory_order_relaxed)) {
      std::lock_guard<std::mutex> lock(mu);
      if (type != first_type) types_differ.store(true);
    }
    return refuted.load(std::memory_order_acquire);
  }
};

struct ExhaustiveOutcome {
  std::map<CycleType, std::uint64_t> types;
  std::uint64_t count = 0;
  bool complete = false;
};

ExhaustiveOutcome run_exhaustive(const Graph& g, const ClassifyOptions& opt,
                                 SharedEvidence& shared,
                                 std::optional<Clock::time_point> deadline) {
  ExhaustiveOutcome out;
  TypeScratch scratch(g.order());
  CycleType type;
  bool interrupted = false;
  const MatchingVisitor visit = [&](std::span<const Vertex> mate) {
    if (shared.stop.load(std::memory_order_relaxed)) {
      interrupted = true;
      return false;
    }
    scratch.compute(g, mate, type);
    ++out.types[type];
    ++out.count;
    const bool refuted = shared.offer(g, mate, type);
    if (opt.prune && refuted) {
      interrupted = true;
      shared.stop.store(true);
      return false;
    }
    if (deadline && (out.count & 1023) == 0 && Clock::now() > *deadline) {
      interrupted = true;
      return false;
    }
    return true;
  };
  enumerate_perfect_matchings(g, visit);
  out.complete = !interrupted;
  return out;
}

std::uint64_t run_heuristic(const Graph& g, const ClassifyOptions& opt,
                            SharedEvidence& shared, int worker,
                            std::uint64_t attempts,
                            std::optional<Clock::time_point> deadline) {
  TypeScratch scratch(g.order());
  CycleType type;
  std::uint64_t done = 0;
  for (std::uint64_t i = 0; attempts == 0 || i < attempts; ++i) {
    if (shared.stop.load(std::memory_order_relaxed)) break;
    if (deadline && (i & 63) == 0 && Clock::now() > *deadline) break;
    const std::uint64_t seed =
        splitmix64(opt.seed ^ splitmix64(static_cast<std::uint64_t>(worker)) ^
                   splitmix64(i + 0x1234567ULL));
    const std::optional<PerfectMatching> m = heuristic_matching(g, seed);
    ++done;
    if (!m) {
      shared.no_matching.store(true);
      break;
    }
    const std::vector<Vertex> mate = m->mates(g);
    scratch.compute(g, mate, type);
    if (shared.offer(g, mate, type) && opt.prune) {
      shared.stop.store(true);
      break;
    }
  }
  return done;
}

}  // namespace

PerfectMatching PerfectMatching::from_mates(std::span<const Vertex> mate) {
  PerfectMatching m;
  for (Vertex v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (v < mate[v]) m.edges.emplace_back(v, mate[v]);
  }
  return m;
}

std::vector<Vertex> PerfectMatching::mates(const Graph& g) const {
  std::vector<Vertex> mate(g.order(), -1);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) {
      throw Error("matching edge " + std::to_string(e.u) + "-" +
                  std::to_string(e.v) + " is not in the graph");
    }
    if (mate[e.u] != -1 || mate[e.v] != -1) {
      throw Error("matching edges share a vertex");
    }
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] == -1) {
      throw Error("matching is not perfect: vertex " + std::to_string(v) +
                  " is uncovered");
    }
  }
  return mate;
}

std::uint64_t enumerate_perfect_matchings(const Graph& g,
                                          const MatchingVisitor& visit) {
  MatchingEnumerator enumerator(g, visit);
  return enumerator.run();
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  return enumerate_perfect_matchings(
      g, [](std::span<const Vertex>) { return true; });
}

CycleType two_factor_type(const Graph& g, std::span<const Vertex> mate) {
  if (!g.is_cubic()) throw Error("two_factor_of: graph is not cubic");
  CycleType out;
  TypeScratch scratch(g.order());
  scratch.compute(g, mate, out);
  return out;
}

CycleType two_factor_of(const Graph& g, const PerfectMatching& m) {
  if (!g.is_cubic()) throw Error("two_factor_of: graph is not cubic");
  const std::vector<Vertex> mate = m.mates(g);
  return two_factor_type(g, mate);
}

std::vector<std::vector<Vertex>> two_factor_cycles(
    const Graph& g, std::span<const Vertex> mate) {
  if (!g.is_cubic()) throw Error("two_factor_cycles: graph is not cubic");
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    Vertex prev = -1;
    Vertex cur = start;
    do {
      seen[cur] = 1;
      cycle.push_back(cur);
      Vertex next = -1;
      for (Vertex x : g.neighbors(cur)) {
        if (x != mate[cur] && x != prev) {
          next = x;
          break;
        }
      }
      prev = cur;
      cur = next;
    } while (cur != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::optional<PerfectMatching> heuristic_matching(const Graph& g,
                                                  std::uint64_t seed) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<Edge> order = g.edges();
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Vertex> mate(n, -1);
  std::vector<int> degree(n);
  std::vector<Vertex> ones;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) ones.push_back(v);
  }
  auto take = [&](Vertex u, Vertex w) {
    mate[u] = w;
    mate[w] = u;
    for (Vertex end : {u, w}) {
      for (Vertex x : g.neighbors(end)) {
        if (mate[x] == -1 && --degree[x] == 1) ones.push_back(x);
      }
    }
  };
  std::size_t cursor = 0;
  while (true) {
    while (!ones.empty()) {
      const Vertex v = ones.back();
      ones.pop_back();
      if (mate[v] != -1 || degree[v] != 1) continue;
      for (Vertex x : g.neighbors(v)) {
        if (mate[x] == -1) {
          take(v, x);
          break;
        }
      }
    }
    while (cursor < order.size() &&
           (mate[order[cursor].u] != -1 || mate[order[cursor].v] != -1)) {
      ++cursor;
    }
    if (cursor == order.size()) break;
    take(order[cursor].u, order[cursor].v);
  }

  const Bipartition parts = bipartition(g);
  if (parts.bipartite()) {
    std::vector<int> stamp(n, 0);
    int round = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (mate[v] != -1 || parts.side[v] != 0) continue;
      if (!augment_bipartite(g, mate, v, stamp, ++round)) return std::nullopt;
    }
  } else {
    BlossomAugmenter augmenter(g, mate);
    for (Vertex v = 0; v < n; ++v) {
      if (mate[v] == -1 && !augmenter.augment_from(v)) return std::nullopt;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] == -1) return std::nullopt;
  }
  return PerfectMatching::from_mates(mate);
}

std::string to_string(ClassifyMode mode) {
  switch (mode) {
    case ClassifyMode::kExhaustive:
      return "exhaustive";
    case ClassifyMode::kHeuristic:
      return "heuristic";
    case ClassifyMode::kHybrid:
      return "hybrid";
  }
  return "exhaustive";
}

ClassifyMode parse_classify_mode(std::string_view text) {
  if (text == "exhaustive") return ClassifyMode::kExhaustive;
  if (text == "heuristic") return ClassifyMode::kHeuristic;
  if (text == "hybrid") return ClassifyMode::kHybrid;
  throw Error("unknown classify mode: " + std::string(text));
}

ClassificationReport classify(const Graph& g, const ClassifyOptions& options) {
  if (!g.is_cubic()) throw Error("classify: graph is not cubic");
  if (g.order() % 2 != 0) throw Error("classify: odd number of vertices");
  if (!is_connected(g)) throw Error("classify: graph is not connected");
  if (options.workers < 1) throw Error("classify: workers must be >= 1");

  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (options.max_seconds > 0) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.max_seconds));
  }
  SharedEvidence shared;
  ExhaustiveOutcome exhaustive;
  bool ran_exhaustive = false;
  std::atomic<std::uint64_t> attempts{0};

  auto heuristic_worker = [&](int worker, std::uint64_t budget) {
    attempts += run_heuristic(g, options, shared, worker, budget, deadline);
  };

  switch (options.mode) {
    case ClassifyMode::kExhaustive:
      exhaustive = run_exhaustive(g, options, shared, deadline);
      ran_exhaustive = true;
      break;
    case ClassifyMode::kHeuristic: {
      const std::uint64_t budget =
          options.max_attempts > 0 ? options.max_attempts : 100000;
      if (options.workers == 1) {
        heuristic_worker(0, budget);
      } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < options.workers; ++w) {
          pool.emplace_back(heuristic_worker, w, budget);
        }
      }
      break;
    }
    case ClassifyMode::kHybrid: {
      std::vector<std::jthread> pool;
      for (int w = 1; w < options.workers; ++w) {
        pool.emplace_back(heuristic_worker, w, options.max_attempts);
      }
      exhaustive = run_exhaustive(g, options, shared, deadline);
      ran_exhaustive = true;
      shared.stop.store(true);
      break;
    }
  }

  ClassificationReport report;
  report.mode = options.mode;
  report.seed = options.seed;
  report.workers = options.mode == ClassifyMode::kExhaustive ? 1
                                                             : options.workers;
  report.heuristic_attempts = attempts.load();
  report.complete = ran_exhaustive && exhaustive.complete;
  report.type_multiset = exhaustive.types;
  if (report.complete) report.two_factor_count = exhaustive.count;

  const bool refuted = shared.refuted.load();
  const int n = g.order();
  if (refuted) {
    report.pseudo_2f_isomorphic = false;
    report.two_factor_isomorphic = false;
    report.two_factor_hamiltonian = false;
  } else if (report.complete) {
    report.pseudo_2f_isomorphic = true;
    report.two_factor_isomorphic = exhaustive.types.size() <= 1;
    bool hamiltonian = true;
    for (const auto& [type, count] : exhaustive.types) {
      hamiltonian = hamiltonian && type == CycleType{n};
    }
    report.two_factor_hamiltonian = hamiltonian;
  } else {
    if (shared.types_differ.load()) report.two_factor_isomorphic = false;
    if (shared.non_hamiltonian.load()) report.two_factor_hamiltonian = false;
  }
  if (shared.slot[0] && shared.slot[1]) {
    report.witness.emplace(*shared.slot[0], *shared.slot[1]);
  }
  if (refuted) {
    report.status = "refuted";
  } else if (report.complete) {
    report.status = exhaustive.count == 0 ? "no 2-factors" : "decided";
  } else if (shared.no_matching.load()) {
    report.status = "no perfect matching";
    report.pseudo_2f_isomorphic = true;
    report.two_factor_isomorphic = true;
    report.two_factor_hamiltonian = true;
    report.two_factor_count = 0;
  } else if (options.mode == ClassifyMode::kHeuristic) {
    report.status = "not refuted within budget";
  } else {
    report.status = "budget exhausted";
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace twofactor
