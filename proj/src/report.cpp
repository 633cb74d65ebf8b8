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

#include "twofactor/report.hpp"

#include <json.hpp>

#include "twofactor/graph6.hpp"
#include "twofactor/structure.hpp"

namespace twofactor {
namespace {

nlohmann::json verdict_json(std::optional<bool> verdict) {
  if (!verdict) return nullptr;
  return *verdict;
}

nlohmann::json evidence_json(const TwoFactorEvidence& evidence) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : evidence.edges) edges.push_back({e.u, e.v});
  return {{"type", evidence.type}, {"edges", edges}};
}

}  // namespace

std::string format_cycle_type(const CycleType& type) {
  std::string out = "(";
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(type[i]);
  }
  return out + ")";
}

std::string format_verdict(std::optional<bool> verdict) {
  if (!verdict) return "unknown";
  return *verdict ? "true" : "false";
}

std::string format_matching(std::span<const Vertex> mate) {
  std::string out;
  for (Vertex v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] <= v) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "-" + std::to_string(mate[v]);
  }
  return out;
}

std::string report_json(const Graph& g, const ClassificationReport& report,
                        const ReportFormat& format) {
  nlohmann::ordered_json j;
  j["graph6"] = write_graph6(g);
  j["n"] = g.order();
  const std::optional<int> gi = girth(g);
  j["girth"] = gi ? nlohmann::ordered_json(*gi) : nullptr;
  j["mode"] = to_string(report.mode);
  j["complete"] = report.complete;
  j["status"] = report.status;
  j["pseudo_2f_isomorphic"] = verdict_json(report.pseudo_2f_isomorphic);
  j["two_factor_isomorphic"] = verdict_json(report.two_factor_isomorphic);
  j["two_factor_hamiltonian"] = verdict_json(report.two_factor_hamiltonian);
  j["two_factor_count"] =
      report.two_factor_count
          ? nlohmann::ordered_json(*report.two_factor_count)
          : nullptr;
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (const auto& [type, count] : report.type_multiset) {
    types.push_back({{"type", type}, {"count", count}});
  }
  j["types"] = types;
  if (report.witness) {
    j["witness"] = {{"even", evidence_json(report.witness->first)},
                    {"odd", evidence_json(report.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  j["seed"] = report.seed;
  j["workers"] = report.workers;
  j["heuristic_attempts"] = report.heuristic_attempts;
  if (format.include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump();
}

std::string report_tsv_header() {
  return "graph6\tn\tgirth\tcount\tp2fi\t2fi\t2fh\ttypes";
}

std::string report_tsv(const Graph& g, const ClassificationReport& report) {
  const std::optional<int> gi = girth(g);
  std::string types;
  for (const auto& [type, count] : report.type_multiset) {
    if (!types.empty()) types += ' ';
    types += format_cycle_type(type);
  }
  return write_graph6(g) + "\t" + std::to_string(g.order()) + "\t" +
         (gi ? std::to_string(*gi) : "-") + "\t" +
         (report.two_factor_count ? std::to_string(*report.two_factor_count)
                                  : "unknown") +
         "\t" + format_verdict(report.pseudo_2f_isomorphic) + "\t" +
         format_verdict(report.two_factor_isomorphic) + "\t" +
         format_verdict(report.two_factor_hamiltonian) + "\t" +
         (types.empty() ? "-" : types);
}

}  // namespace twofactor
