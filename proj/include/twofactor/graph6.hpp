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

#ifndef TWOFACTOR_GRAPH6_HPP_
#define TWOFACTOR_GRAPH6_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "twofactor/graph.hpp"

namespace twofactor {

// Malformed graph6 input. offset() is the 0-based byte position of the
// first offending byte.
class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Decodes one graph6 line. An optional ">>graph6<<" prefix and a trailing
// newline / carriage return are accepted.
Graph parse_graph6(std::string_view text);

// Encodes g under its current labeling (no trailing newline).
std::string write_graph6(const Graph& g);

}  // namespace twofactor

#endif  // TWOFACTOR_GRAPH6_HPP_
