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

#include <json.hpp>

#include "twofactor/constructions.hpp"
#include "twofactor/graph6.hpp"
#include "twofactor/report.hpp"
#include "twofactor/two_factor.hpp"

namespace twofactor {
namespace {

TEST_CASE("formatting helpers") {
  CHECK(format_cycle_type({6, 6, 18}) == "(6,6,18)");
  CHECK(format_cycle_type({}) == "()");
  CHECK(format_verdict(true) == "true");
  CHECK(format_verdict(false) == "false");
  CHECK(format_verdict(std::nullopt) == "unknown");
  const std::vector<Vertex> mate{3, 4, 5, 0, 1, 2};
  CHECK(format_matching(mate) == "0-3 1-4 2-5");
}

TEST_CASE("JSON report mirrors the classification") {
  const Graph pappus = named("Pappus");
  ClassifyOptions o;
  o.prune = false;
  const auto report = classify(pappus, o);
  const auto j = nlohmann::json::parse(report_json(pappus, report));
  CHECK(j["graph6"] == write_graph6(pappus));
  CHECK(j["n"] == 18);
  CHECK(j["girth"] == 6);
  CHECK(j["pseudo_2f_isomorphic"] == true);
  CHECK(j["two_factor_hamiltonian"] == false);
  CHECK(j["two_factor_count"] == 42);
  CHECK(j["types"].size() == 2);
  CHECK(j["witness"].is_null());
  CHECK_FALSE(j.contains("elapsed_seconds"));
  ReportFormat timed;
  timed.include_timing = true;
  CHECK(nlohmann::json::parse(report_json(pappus, report, timed))
            .contains("elapsed_seconds"));
}

TEST_CASE("JSON report of a refuted graph carries a witness") {
  // Petersen's 2-factors are all (5,5), so use a star product with mixed
  // parities instead.
  const Graph g = star_product(named("Pappus"), 0, named("Heawood"), 0);
  const auto report = classify(g, {});
  if (report.pseudo_2f_isomorphic == false) {
    const auto j = nlohmann::json::parse(report_json(g, report));
    CHECK(j["witness"]["even"]["type"].size() % 2 == 0);
    CHECK(j["witness"]["odd"]["type"].size() % 2 == 1);
    CHECK(j["two_factor_count"].is_null());
  } else {
    CHECK(report.witness == std::nullopt);
  }
}

TEST_CASE("TSV report") {
  const Graph heawood = named("Heawood");
  const auto report = classify(heawood, {});
  CHECK(report_tsv_header() == "graph6\tn\tgirth\tcount\tp2fi\t2fi\t2fh\ttypes");
  CHECK(report_tsv(heawood, report) ==
        write_graph6(heawood) + "\t14\t6\t24\ttrue\ttrue\ttrue\t(14)");
}

}  // namespace
}  // namespace twofactor
