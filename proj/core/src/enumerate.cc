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

#include "hamverify/enumerate.h"

#include <algorithm>
#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {

Graph GraphFromEdgeMask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

std::uint64_t EdgeMaskOf(const Graph& g) {
  const int n = g.num_vertices();
  if (PairCount(n) > 64) throw CapacityError("edge mask needs more than 64 bits");
  std::uint64_t mask = 0;
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.HasEdge(i, j)) mask |= std::uint64_t{1} << bit;
    }
  }
  return mask;
}

LabeledGraphs::LabeledGraphs(int n) : LabeledGraphs(n, 0, ~std::uint64_t{0}) {}

LabeledGraphs::LabeledGraphs(int n, std::uint64_t first, std::uint64_t last) : n_(n) {
  if (n < 1) throw InputError("labeled enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw CapacityError("labeled enumeration is capped at n = " + std::to_string(kMaxEnumerationOrder) +
                        " (2^21 graphs); feed larger orders as a graph6 stream, e.g. from nauty geng");
  }
  const std::uint64_t total = std::uint64_t{1} << PairCount(n);
  last_ = std::min(last, total);
  first_ = std::min(first, last_);
  next_ = first_;
}

std::optional<Graph> LabeledGraphs::Next() {
  if (next_ >= last_) return std::nullopt;
  return GraphFromEdgeMask(n_, next_++);
}

std::string LabeledGraphs::Describe() const { return "labeled:n=" + std::to_string(n_); }

}  // namespace hamverify
