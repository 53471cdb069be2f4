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

#ifndef HAMVERIFY_ENUMERATE_H_
#define HAMVERIFY_ENUMERATE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "hamverify/graph.h"
#include "hamverify/graph_source.h"

namespace hamverify {

inline constexpr int kMaxEnumerationOrder = 7;

// Number of vertex pairs, i.e. bits in an edge mask.
constexpr int PairCount(int n) { return n * (n - 1) / 2; }

// Edge-mask bit k is the k-th pair in column-major upper-triangle order
// (0,1), (0,2), (1,2), (0,3), ... -- the same order graph6 uses.
Graph GraphFromEdgeMask(int n, std::uint64_t mask);
std::uint64_t EdgeMaskOf(const Graph& g);

// All 2^(n(n-1)/2) labeled graphs on n vertices, in increasing edge-mask
// order. The mask range may be restricted to [first, last) to partition work.
class LabeledGraphs : public GraphSource {
 public:
  // Throws InputError for n < 1 and CapacityError for n > 7.
  explicit LabeledGraphs(int n);
  LabeledGraphs(int n, std::uint64_t first, std::uint64_t last);

  std::uint64_t count() const { return last_ - first_; }

  std::optional<Graph> Next() override;
  std::string Describe() const override;

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
  std::uint64_t next_;
};

}  // namespace hamverify

#endif  // HAMVERIFY_ENUMERATE_H_
