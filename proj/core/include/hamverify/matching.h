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

#ifndef HAMVERIFY_MATCHING_H_
#define HAMVERIFY_MATCHING_H_

#include <optional>
#include <string>
#include <vector>

#include "hamverify/graph.h"

namespace hamverify {

// A set of pairwise vertex-disjoint edges, each stored with u < v and kept
// sorted.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

// Maximum cardinality matching by Edmonds' blossom algorithm, O(V^3).
// Roots and neighbors are scanned in increasing index order, so the result
// is a deterministic function of the graph.
Matching MaximumMatching(const Graph& g);

// m(G).
inline int MatchingNumber(const Graph& g) { return MaximumMatching(g).size(); }

// Empty when `m` is a matching of `g`; otherwise the first violation.
std::string CheckMatching(const Graph& g, const Matching& m);

// Berge check: depth-first search over simple alternating
// paths between exposed vertices. Exponential in the worst case and shares
// no code with the blossom search; meant for verification at small n.
// Returns the vertex sequence of an augmenting path if one exists.
std::optional<std::vector<Vertex>> FindAugmentingPath(const Graph& g, const Matching& m);

inline constexpr int kBruteMatchingMaxOrder = 12;

// Exact m(G) by recursive branching on the lowest unmatched vertex: either
// it stays exposed or it is matched to one of its free neighbors. Throws
// CapacityError for n > 12.
int BruteMatchingNumber(const Graph& g);

}  // namespace hamverify

#endif  // HAMVERIFY_MATCHING_H_
