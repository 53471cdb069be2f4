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

#ifndef HAMVERIFY_GRAPH_IO_H_
#define HAMVERIFY_GRAPH_IO_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "hamverify/graph.h"
#include "hamverify/graph_source.h"

namespace hamverify {

// graph6: N(n) followed by the upper adjacency triangle in column-major order
// x(0,1), x(0,2), x(1,2), x(0,3), ..., packed six bits per byte (value + 63),
// zero padded. An optional ">>graph6<<" header is accepted on input and a
// trailing CR/LF is ignored. Throws FormatError.
Graph ParseGraph6(std::string_view text);

// Never emits the header.
std::string EncodeGraph6(const Graph& g);

// Edge-list text: a line "n m" followed by m lines "u v", 0-indexed.
std::string FormatEdgeList(const Graph& g);

// One graph6 record per line. Blank lines and ">>graph6<<" lines are
// skipped. Format errors are rethrown with the 1-based line number attached.
class Graph6Reader : public GraphSource {
 public:
  Graph6Reader(std::istream& in, std::string description);

  std::optional<Graph> Next() override;
  std::string Describe() const override { return description_; }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string description_;
  std::size_t line_ = 0;
};

// Consecutive edge-list records until end of input. Errors carry the line.
class EdgeListReader : public GraphSource {
 public:
  EdgeListReader(std::istream& in, std::string description);

  std::optional<Graph> Next() override;
  std::string Describe() const override { return description_; }

 private:
  // Next non-blank line, or nullopt at EOF.
  std::optional<std::string> NextLine();

  std::istream& in_;
  std::string description_;
  std::size_t line_ = 0;
};

}  // namespace hamverify

#endif  // HAMVERIFY_GRAPH_IO_H_
