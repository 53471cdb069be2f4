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

#ifndef HAMVERIFY_FAMILY_F_H_
#define HAMVERIFY_FAMILY_F_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamverify/graph.h"

namespace hamverify {

// Witness for K_{p,q} ⊆ G ⊆ K_p ∨ qK_1 with q >= p + 1 >= 3: A is the
// p-side, B the independent q-side, every A-B pair adjacent, A-A edges free.
struct FamilyFWitness {
  VertexSet a;
  VertexSet b;

  int p() const { return a.size(); }
  int q() const { return b.size(); }
};

// For a member, each b ∈ B has N(b) = V \ B exactly, so every vertex v
// proposes B_v = V \ N(v) and the first candidate (by v) that is
// independent, has uniform neighborhoods and satisfies the size bounds wins.
std::optional<FamilyFWitness> RecognizeFamilyF(const Graph& g);

// Empty when the witness satisfies its invariants against g.
std::string CheckFamilyFWitness(const Graph& g, const FamilyFWitness& w);

// A = {0..p-1}, B = {p..p+q-1}, all A-B edges, A-A edges exactly `a_edges`.
// Throws InputError unless q >= p + 1 >= 3 and every a-edge has
// 0 <= i < j < p.
Graph GenerateFamilyF(int p, int q, const std::vector<Edge>& a_edges);

// All pairs (i, j) with i < j < p.
std::vector<Edge> AllPairs(int p);

}  // namespace hamverify

#endif  // HAMVERIFY_FAMILY_F_H_
