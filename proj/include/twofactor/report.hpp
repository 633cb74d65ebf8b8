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

#ifndef TWOFACTOR_REPORT_HPP_
#define TWOFACTOR_REPORT_HPP_

#include <optional>
#include <span>
#include <string>

#include "twofactor/graph.hpp"
#include "twofactor/two_factor.hpp"

namespace twofactor {

struct ReportFormat {
  // Elapsed time varies between runs; leave it out for reproducible output.
  bool include_timing = false;
};

// "(6,6,18)".
std::string format_cycle_type(const CycleType& type);
// "true", "false" or "unknown".
std::string format_verdict(std::optional<bool> verdict);
// Space-separated "u-v" pairs with u < v, sorted.
std::string format_matching(std::span<const Vertex> mate);

// One JSON object on a single line, without a trailing newline.
std::string report_json(const Graph& g, const ClassificationReport& report,
                        const ReportFormat& format = {});

std::string report_tsv_header();
std::string report_tsv(const Graph& g, const ClassificationReport& report);

}  // namespace twofactor

#endif  // TWOFACTOR_REPORT_HPP_
