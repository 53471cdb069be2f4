// Copyright 2026 The hamverify Authors
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

#include "hamverify/graph_io.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::uint64_t kSmallOrderLimit = 62;
constexpr std::uint64_t kMediumOrderLimit = 258047;

std::uint64_t PayloadBytes(std::uint64_t n) {
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

void AppendBigEndianSextets(std::string& out, std::uint64_t value, int sextets) {
  for (int i = sextets - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kBias));
  }
}

int SextetAt(std::string_view text, std::size_t pos) {
  const auto byte = static_cast<unsigned char>(text[pos]);
  if (byte < 63 || byte > 126) {
    throw FormatError("graph6: byte " + std::to_string(byte) + " at offset " + std::to_string(pos) +
                          " outside [63,126]",
                      pos);
  }
  return byte - kBias;
}

std::string_view StripLineEnd(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  text = StripLineEnd(text);
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos >= text.size()) throw FormatError("graph6: empty record", pos);
  for (std::size_t i = pos; i < text.size(); ++i) SextetAt(text, i);

  std::uint64_t n = 0;
  int first = SextetAt(text, pos);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos += 1;
  } else {
    const bool wide = pos + 1 < text.size() && SextetAt(text, pos + 1) == 63;
    const std::size_t start = pos + (wide ? 2 : 1);
    const int sextets = wide ? 6 : 3;
    if (start + sextets > text.size()) throw FormatError("graph6: truncated order field", text.size());
    for (int i = 0; i < sextets; ++i) n = (n << 6) | static_cast<std::uint64_t>(SextetAt(text, start + i));
    pos = start + sextets;
  }

  const std::uint64_t expected = PayloadBytes(n);
  const std::uint64_t actual = text.size() - pos;
  if (actual != expected) {
    throw FormatError("graph6: payload has " + std::to_string(actual) + " bytes, expected " +
                          std::to_string(expected) + " for n = " + std::to_string(n),
                      pos + std::min(actual, expected));
  }
  if (n > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw FormatError("graph6: order too large", pos);
  }

  const int order = static_cast<int>(n);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  int sextet = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) sextet = SextetAt(text, pos + bit / 6);
      if ((sextet >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int pad_mask = (1 << (6 - bit % 6)) - 1;
    if (sextet & pad_mask) throw FormatError("graph6: non-zero padding bits", text.size() - 1);
  }
  return Graph::FromEdges(order, edges);
}

std::string EncodeGraph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.num_vertices());
  std::string out;
  if (n <= kSmallOrderLimit) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kMediumOrderLimit) {
    out.push_back(126);
    AppendBigEndianSextets(out, n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    AppendBigEndianSextets(out, n, 6);
  }
  out.reserve(out.size() + PayloadBytes(n));
  int sextet = 0;
  int filled = 0;
  const int order = g.num_vertices();
  for (Vertex j = 1; j < order; ++j) {
    const VertexSet& nbrs = g.Neighbors(j);
    for (Vertex i = 0; i < j; ++i) {
      sextet = (sextet << 1) | (nbrs.Contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(sextet + kBias));
        sextet = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((sextet << (6 - filled)) + kBias));
  return out;
}

std::string FormatEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.Edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph6Reader::Graph6Reader(std::istream& in, std::string description)
    : in_(in), description_(std::move(description)) {}

std::optional<Graph> Graph6Reader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    std::string_view record = StripLineEnd(line);
    if (IsBlank(record) || record == kGraph6Header) continue;
    try {
      return ParseGraph6(record);
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(line_) + ": " + e.what(), e.offset(), line_);
    }
  }
  return std::nullopt;
}

EdgeListReader::EdgeListReader(std::istream& in, std::string description)
    : in_(in), description_(std::move(description)) {}

std::optional<std::string> EdgeListReader::NextLine() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!IsBlank(line)) return line;
  }
  return std::nullopt;
}

std::optional<Graph> EdgeListReader::Next() {
  auto fail = [this](const std::string& why) -> FormatError {
    return FormatError("line " + std::to_string(line_) + ": " + why, 0, line_);
  };
  auto read_pair = [&](const std::string& line, long long& a, long long& b) {
    std::istringstream fields(line);
    std::string extra;
    if (!(fields >> a >> b)) throw fail("expected two integers");
    if (fields >> extra) throw fail("unexpected trailing token '" + extra + "'");
  };

  std::optional<std::string> header = NextLine();
  if (!header) return std::nullopt;
  long long n = 0;
  long long m = 0;
  read_pair(*header, n, m);
  if (n < 0 || m < 0 || n > std::numeric_limits<int>::max()) throw fail("invalid header \"n m\"");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1 << 20)));
  for (long long i = 0; i < m; ++i) {
    std::optional<std::string> line = NextLine();
    if (!line) throw fail("expected " + std::to_string(m) + " edges, input ended after " + std::to_string(i));
    long long u = 0;
    long long v = 0;
    read_pair(*line, u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("endpoint out of range");
    if (u == v) throw fail("loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::FromEdges(static_cast<int>(n), edges);
}

}  // namespace hamverify
