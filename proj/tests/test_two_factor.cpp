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

#include <doctest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "twofactor/constructions.hpp"
#include "twofactor/generator.hpp"
#include "twofactor/structure.hpp"
#include "twofactor/two_factor.hpp"

namespace twofactor {
namespace {

using TypeSet = std::set<CycleType>;

TypeSet keys(const ClassificationReport& r) {
  TypeSet out;
  for (const auto& [type, count] : r.type_multiset) out.insert(type);
  return out;
}

ClassifyOptions exhaustive(bool prune = true) {
  ClassifyOptions o;
  o.mode = ClassifyMode::kExhaustive;
  o.prune = prune;
  return o;
}

int cycles_in(const Graph& g, const TwoFactorEvidence& evidence) {
  // Rebuild the 2-factor from its edge list and count components.
  Graph factor(g.order(), evidence.edges);
  int count = 0;
  components(factor, &count);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (factor.degree(v) != 2) return -1;
  }
  for (const Edge& e : evidence.edges) {
    if (!g.has_edge(e.u, e.v)) return -1;
  }
  return count;
}

TEST_CASE("perfect matching counts") {
  CHECK(count_perfect_matchings(named("K33")) == 6);
  CHECK(count_perfect_matchings(named("Heawood")) == 24);
  CHECK(count_perfect_matchings(named("Pappus")) == 42);
  CHECK(count_perfect_matchings(named("K5")) == 0);
  CHECK(count_perfect_matchings(named("G30")) == 312);
  CHECK(count_perfect_matchings(named("Gray")) == 10752);
  CHECK(count_perfect_matchings(oracle::cubic_without_perfect_matching()) ==
        0);
  CHECK(oracle::count_perfect_matchings_subsets(named("K33")) == 6);
  CHECK(oracle::count_perfect_matchings_subsets(named("Heawood")) == 24);
  CHECK(oracle::bipartite_permanent(named("Pappus")) == 42);
}

TEST_CASE("every visited matching is distinct and perfect") {
  const Graph g = named("Pappus");
  std::set<std::vector<Vertex>> seen;
  enumerate_perfect_matchings(g, [&](std::span<const Vertex> mate) {
    std::vector<Vertex> copy(mate.begin(), mate.end());
    for (Vertex v = 0; v < g.order(); ++v) {
      CHECK(g.has_edge(v, copy[v]));
      CHECK(copy[copy[v]] == v);
    }
    CHECK(seen.insert(copy).second);
    return true;
  });
  CHECK(seen.size() == 42);
}

TEST_CASE("enumeration order is deterministic and can stop early") {
  const Graph g = named("Heawood");
  std::vector<std::vector<Vertex>> first, second;
  auto record = [](std::vector<std::vector<Vertex>>& out) {
    return [&out](std::span<const Vertex> mate) {
      out.emplace_back(mate.begin(), mate.end());
      return true;
    };
  };
  enumerate_perfect_matchings(g, record(first));
  enumerate_perfect_matchings(g, record(second));
  CHECK(first == second);
  int visits = 0;
  const std::uint64_t count =
      enumerate_perfect_matchings(g, [&](std::span<const Vertex>) {
        return ++visits < 5;
      });
  CHECK(count == 5);
  CHECK(visits == 5);
}

TEST_CASE("matching counts agree with the 2-factor oracle on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + 2 * (trial % 8);
    const Graph g = trial % 2 == 0 ? oracle::random_cubic(n, rng)
                                   : oracle::random_cubic_bipartite(n / 2, rng);
    CHECK(count_perfect_matchings(g) == oracle::count_two_factors(g));
    if (n <= 14) {
      CHECK(count_perfect_matchings(g) ==
            oracle::count_perfect_matchings_subsets(g));
    }
  }
}

TEST_CASE("two_factor_of returns the complement's cycle type") {
  const Graph k33 = named("K33");
  enumerate_perfect_matchings(k33, [&](std::span<const Vertex> mate) {
    CHECK(two_factor_of(k33, PerfectMatching::from_mates(mate)) ==
          CycleType{6});
    return true;
  });
  const Graph heawood = named("Heawood");
  enumerate_perfect_matchings(heawood, [&](std::span<const Vertex> mate) {
    CHECK(two_factor_type(heawood, mate) == CycleType{14});
    const auto cycles = two_factor_cycles(heawood, mate);
    CHECK(cycles.size() == 1);
    return true;
  });
  CHECK_THROWS_AS(two_factor_of(named("K5"), PerfectMatching{}), Error);
  PerfectMatching bad;
  bad.edges = {{0, 3}, {1, 4}};
  CHECK_THROWS_AS(two_factor_of(k33, bad), Error);
  bad.edges = {{0, 3}, {1, 4}, {2, 1}};
  CHECK_THROWS_AS(two_factor_of(k33, bad), Error);
}

TEST_CASE("exhaustive classification of named graphs") {
  const auto k33 = classify(named("K33"), exhaustive(false));
  CHECK(k33.two_factor_hamiltonian == true);
  CHECK(keys(k33) == TypeSet{{6}});

  const auto heawood = classify(named("Heawood"), exhaustive(false));
  CHECK(heawood.two_factor_hamiltonian == true);
  CHECK(heawood.two_factor_count == 24);
  CHECK(keys(heawood) == TypeSet{{14}});

  const auto pappus = classify(named("Pappus"), exhaustive(false));
  CHECK(pappus.pseudo_2f_isomorphic == true);
  CHECK(pappus.two_factor_hamiltonian == false);
  CHECK(keys(pappus) == TypeSet{{18}, {6, 6, 6}});

  const auto g30 = classify(named("G30"), exhaustive(false));
  CHECK(g30.pseudo_2f_isomorphic == true);
  CHECK(g30.two_factor_isomorphic == false);
  CHECK(g30.two_factor_hamiltonian == false);
  CHECK(g30.two_factor_count == 312);
  CHECK(keys(g30) ==
        TypeSet{{6, 6, 18}, {6, 10, 14}, {10, 10, 10}, {30}});

  const auto gray = classify(named("Gray"), exhaustive(false));
  CHECK(gray.pseudo_2f_isomorphic == true);
  CHECK(gray.two_factor_hamiltonian == false);
  CHECK(gray.two_factor_count == 10752);
  CHECK(keys(gray) == TypeSet{{54}, {18, 18, 18}, {14, 14, 26}});

  const auto petersen = classify(named("Petersen"), exhaustive(false));
  CHECK(petersen.two_factor_isomorphic == true);
  CHECK(petersen.two_factor_hamiltonian == false);
}

TEST_CASE("type multisets match the 2-factor oracle") {
  for (const char* name : {"K33", "Heawood", "Pappus", "G30"}) {
    const Graph g = named(name);
    CHECK(classify(g, exhaustive(false)).type_multiset ==
          oracle::two_factor_types(g));
  }
}

TEST_CASE("classification rejects invalid hosts") {
  CHECK_THROWS_AS(classify(named("K5"), exhaustive()), Error);
  CHECK_THROWS_AS(classify(disjoint_union(named("K4"), named("K4")),
                           exhaustive()),
                  Error);
  ClassifyOptions o;
  o.workers = 0;
  CHECK_THROWS_AS(classify(named("K4"), o), Error);
  CHECK_THROWS_AS(parse_classify_mode("fast"), Error);
  CHECK(parse_classify_mode("hybrid") == ClassifyMode::kHybrid);
  CHECK(to_string(ClassifyMode::kHeuristic) == "heuristic");
}

TEST_CASE("graph without a perfect matching") {
  const Graph g = oracle::cubic_without_perfect_matching();
  CHECK(g.is_cubic());
  CHECK_FALSE(heuristic_matching(g, 1).has_value());
  const auto r = classify(g, exhaustive());
  CHECK(r.two_factor_count == 0);
  CHECK_FALSE(r.witness.has_value());
  ClassifyOptions h;
  h.mode = ClassifyMode::kHeuristic;
  CHECK(classify(g, h).heuristic_attempts == 1);
}

TEST_CASE("heuristic matching is perfect and deterministic") {
  const Graph gray = named("Gray");
  const auto a = heuristic_matching(gray, 1);
  const auto b = heuristic_matching(gray, 1);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->edges == b->edges);
  CHECK(two_factor_of(gray, *a).size() >= 1);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 6 + 2 * (trial % 14);
    const Graph g = trial % 2 == 0 ? oracle::random_cubic(n, rng)
                                   : oracle::random_cubic_bipartite(n / 2, rng);
    const bool exists = count_perfect_matchings(g) > 0;
    const auto m = heuristic_matching(g, trial);
    CHECK(m.has_value() == exists);
    if (m) CHECK_NOTHROW(m->mates(g));
  }
}

TEST_CASE("parity witnesses are genuine") {
  std::mt19937_64 rng(31);
  int refuted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_cubic_bipartite_girth6(15, rng);
    ClassifyOptions o;
    o.mode = ClassifyMode::kHybrid;
    o.workers = 3;
    o.seed = trial;
    const auto r = classify(g, o);
    REQUIRE(r.pseudo_2f_isomorphic.has_value());
    CHECK(r.witness.has_value() == (r.pseudo_2f_isomorphic == false));
    if (!r.witness) continue;
    ++refuted;
    const int even = cycles_in(g, r.witness->first);
    const int odd = cycles_in(g, r.witness->second);
    CHECK(even % 2 == 0);
    CHECK(odd % 2 == 1);
    CHECK(even == static_cast<int>(r.witness->first.type.size()));
    CHECK(odd == static_cast<int>(r.witness->second.type.size()));
  }
  CHECK(refuted > 0);
}

TEST_CASE("heuristic mode never claims a positive verdict") {
  ClassifyOptions o;
  o.mode = ClassifyMode::kHeuristic;
  o.max_attempts = 200;
  const auto r = classify(named("Heawood"), o);
  CHECK_FALSE(r.pseudo_2f_isomorphic.has_value());
  CHECK(r.status == "not refuted within budget");
  CHECK_FALSE(r.two_factor_count.has_value());
  CHECK(r.heuristic_attempts == 200);

  const auto pappus = classify(named("Pappus"), o);
  CHECK_FALSE(pappus.pseudo_2f_isomorphic.has_value());
  CHECK(pappus.two_factor_isomorphic == false);
  CHECK(pappus.two_factor_hamiltonian == false);
}

TEST_CASE("pruning does not change verdicts") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_cubic_bipartite(k, rng);
    const auto pruned = classify(g, exhaustive(true));
    const auto full = classify(g, exhaustive(false));
    CHECK(pruned.pseudo_2f_isomorphic == full.pseudo_2f_isomorphic);
    CHECK(pruned.two_factor_isomorphic == full.two_factor_isomorphic);
    CHECK(pruned.two_factor_hamiltonian == full.two_factor_hamiltonian);
    REQUIRE(full.two_factor_count.has_value());
    std::uint64_t total = 0;
    for (const auto& [type, count] : full.type_multiset) total += count;
    CHECK(total == *full.two_factor_count);
  }
}

TEST_CASE("report invariants hold on generated graphs") {
  for (int n = 14; n <= 22; n += 2) {
    for (const Graph& g : generate(n)) {
      const auto exact = classify(g, exhaustive(false));
      ClassifyOptions hybrid;
      hybrid.mode = ClassifyMode::kHybrid;
      hybrid.workers = 2;
      const auto mixed = classify(g, hybrid);
      CHECK(mixed.pseudo_2f_isomorphic == exact.pseudo_2f_isomorphic);
      if (exact.two_factor_hamiltonian == true) {
        CHECK(exact.two_factor_isomorphic == true);
        CHECK(g.order() % 4 == 2);
      }
      if (exact.two_factor_isomorphic == true) {
        CHECK(exact.pseudo_2f_isomorphic == true);
      }
      for (const auto& [type, count] : exact.type_multiset) {
        int sum = 0;
        for (int length : type) {
          CHECK(length % 2 == 0);
          sum += length;
        }
        CHECK(sum == g.order());
      }
    }
  }
}

TEST_CASE("time budget leaves verdicts undecided") {
  ClassifyOptions o;
  o.mode = ClassifyMode::kExhaustive;
  o.max_seconds = 1e-9;
  const auto r = classify(named("Gray"), o);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.two_factor_count.has_value());
  CHECK(r.status == "budget exhausted");
}

}  // namespace
}  // namespace twofactor
