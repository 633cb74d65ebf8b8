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

#ifndef TWOFACTOR_TWO_FACTOR_HPP_
#define TWOFACTOR_TWO_FACTOR_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twofactor/graph.hpp"

namespace twofactor {

struct PerfectMatching {
  std::vector<Edge> edges;  // sorted

  static PerfectMatching from_mates(std::span<const Vertex> mate);
  // mate[v] for every vertex; throws Error unless the edges cover every
  // vertex of g exactly once using edges of g.
  std::vector<Vertex> mates(const Graph& g) const;
};

// Cycle lengths of one 2-factor, non-decreasing.
using CycleType = std::vector<int>;

// Called with mate[v] for each perfect matching. Return false to stop.
using MatchingVisitor = std::function<bool(std::span<const Vertex> mate)>;

// Visits every perfect matching once. Branches on the lowest unmatched vertex
// over its available edges in neighbor order, with forced-edge propagation.
// Returns the number of matchings visited (including the one that stopped
// the enumeration). Graphs with an odd number of vertices give 0.
std::uint64_t enumerate_perfect_matchings(const Graph& g,
                                          const MatchingVisitor& visit);

std::uint64_t count_perfect_matchings(const Graph& g);

// Type of the 2-factor E(g) minus m. g must be cubic.
CycleType two_factor_of(const Graph& g, const PerfectMatching& m);
CycleType two_factor_type(const Graph& g, std::span<const Vertex> mate);

// Cycles of the 2-factor complementary to `mate`, each in traversal order.
std::vector<std::vector<Vertex>> two_factor_cycles(
    const Graph& g, std::span<const Vertex> mate);

// Randomized Karp-Sipser matching (degree-1 rule, otherwise a uniformly
// random remaining edge) completed by augmenting paths. Deterministic for a
// fixed seed; nullopt when g has no perfect matching.
std::optional<PerfectMatching> heuristic_matching(const Graph& g,
                                                  std::uint64_t seed);

enum class ClassifyMode { kExhaustive, kHeuristic, kHybrid };

std::string to_string(ClassifyMode mode);
ClassifyMode parse_classify_mode(std::string_view text);

struct ClassifyOptions {
  ClassifyMode mode = ClassifyMode::kExhaustive;
  // Stop at the first 2-factor whose cycle-count parity differs from an
  // earlier one. When false the exhaustive worker always runs to the end.
  bool prune = true;
  int workers = 1;
  std::uint64_t seed = 1;
  // Wall-clock limit in seconds; 0 means none.
  double max_seconds = 0;
  // Matchings tried per heuristic worker; 0 means until stopped (hybrid) or
  // 100000 (heuristic mode).
  std::uint64_t max_attempts = 0;
};

struct TwoFactorEvidence {
  std::vector<Edge> edges;  // sorted edges of the 2-factor
  CycleType type;
};

struct ClassificationReport {
  // nullopt means undecided (heuristic runs never claim true).
  std::optional<bool> pseudo_2f_isomorphic;
  std::optional<bool> two_factor_isomorphic;
  std::optional<bool> two_factor_hamiltonian;
  // Exact count when the exhaustive enumeration completed.
  std::optional<std::uint64_t> two_factor_count;
  // Types seen by the exhaustive worker; partial unless complete.
  std::map<CycleType, std::uint64_t> type_multiset;
  // First 2-factors found with an even and with an odd number of cycles.
  std::optional<std::pair<TwoFactorEvidence, TwoFactorEvidence>> witness;
  ClassifyMode mode = ClassifyMode::kExhaustive;
  bool complete = false;
  std::string status;
  double elapsed_seconds = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  std::uint64_t heuristic_attempts = 0;
};

// Requires a connected cubic graph (hence even order); throws Error
// otherwise.
ClassificationReport classify(const Graph& g, const ClassifyOptions& options);

}  // namespace twofactor

#endif  // TWOFACTOR_TWO_FACTOR_HPP_
