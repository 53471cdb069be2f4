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

#ifndef HAMVERIFY_CONNECTIVITY_H_
#define HAMVERIFY_CONNECTIVITY_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamverify/graph.h"

namespace hamverify {

// A vertex set whose deletion separates the non-adjacent pair (s, t).
struct VertexCut {
  VertexSet vertices;
  std::pair<Vertex, Vertex> separated_pair;
};

// Paths from `source` to distinct members of `targets`, pairwise disjoint
// except at `source`.
struct PathFan {
  Vertex source = 0;
  VertexSet targets;
  std::vector<std::vector<Vertex>> paths;
};

// κ(G). Complete graphs give n-1, disconnected graphs and n <= 1 give 0.
// Otherwise the minimum over non-adjacent pairs of the s-t max-flow on the
// vertex-split unit-capacity network.
int VertexConnectivity(const Graph& g);

// A cut of size VertexConnectivity(g); nullopt for complete graphs (and for
// n < 2, where no pair exists).
std::optional<VertexCut> MinVertexCut(const Graph& g);

// Maximum number of internally vertex-disjoint s-t paths for non-adjacent
// s != t. Throws InputError otherwise.
int LocalVertexConnectivity(const Graph& g, Vertex s, Vertex t);

// k paths from x into `targets`, disjoint except at x, or nullopt if fewer
// than k exist. Paths never pass through a target before their endpoint.
// Throws InputError if x is out of range, x ∈ targets, targets is empty or
// k < 0.
std::optional<PathFan> DisjointPaths(const Graph& g, Vertex x, const VertexSet& targets, int k);

// Empty when the cut satisfies its invariants against g.
std::string CheckVertexCut(const Graph& g, const VertexCut& cut);
// Empty when the fan satisfies its invariants against g.
std::string CheckPathFan(const Graph& g, const PathFan& fan);

inline constexpr int kBruteConnectivityMaxOrder = 9;

// Minimum |S| such that g - S is disconnected (n-1 if no such S), by
// enumerating subsets in order of size. Throws CapacityError for n > 9.
int BruteVertexConnectivity(const Graph& g);

}  // namespace hamverify

#endif  // HAMVERIFY_CONNECTIVITY_H_
