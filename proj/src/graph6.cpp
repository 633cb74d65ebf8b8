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

#include "twofactor/graph6.hpp"

#include <cstdint>
#include <vector>

namespace twofactor {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(std::string_view text, std::size_t at, std::size_t base) {
  const auto c = static_cast<unsigned char>(text[at]);
  if (c < kBias || c > kBias + 63) {
    throw Graph6Error("byte outside the graph6 range [63,126]", base + at);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("empty graph6 string", base);

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = decode_byte(text, 0, base);
    pos = 1;
  } else {
    std::size_t width = 3;
    pos = 1;
    if (text.size() > 1 && text[1] == '~') {
      width = 6;
      pos = 2;
    }
    if (text.size() < pos + width) {
      throw Graph6Error("truncated length header", base + text.size());
    }
    for (std::size_t i = 0; i < width; ++i) {
      n = (n << 6) | decode_byte(text, pos + i, base);
    }
    pos += width;
    if ((width == 3 && n < 63) || (width == 6 && n < 258048)) {
      throw Graph6Error("non-minimal length header", base);
    }
    if (n > (1 << 24)) throw Graph6Error("graph too large", base);
  }

  const std::int64_t bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + body) {
    throw Graph6Error("truncated adjacency data", base + text.size());
  }
  if (text.size() > pos + body) {
    throw Graph6Error("trailing bytes after adjacency data",
                      base + pos + body);
  }

  std::vector<Edge> edges;
  std::int64_t k = 0;
  int i = 0;
  int j = 1;
  for (std::size_t b = 0; b < body; ++b) {
    const int x = decode_byte(text, pos + b, base);
    for (int shift = 5; shift >= 0; --shift, ++k) {
      const bool bit = (x >> shift) & 1;
      if (k >= bits) {
        if (bit) throw Graph6Error("nonzero padding bit", base + pos + b);
        continue;
      }
      if (bit) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  std::vector<char> column(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) {
    for (Vertex i : g.neighbors(j)) column[i] = 1;
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | column[i];
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
    for (Vertex i : g.neighbors(j)) column[i] = 0;
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

}  // namespace twofactor
