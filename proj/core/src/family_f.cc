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

#include "hamverify/family_f.h"

#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {

std::optional<FamilyFWitness> RecognizeFamilyF(const Graph& g) {
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    const VertexSet& neighborhood = g.Neighbors(v);
    const int q = n - neighborhood.size();
    const int p = n - q;
    if (p < 2 || q < p + 1) continue;
    // B_v = V \ N(v) contains v. Uniform neighborhoods N(u) = N(v) for all
    // u ∈ B_v already make B_v independent, because N(v) ∩ B_v = ∅.
    VertexSet b = ~neighborhood;
    bool uniform = true;
    for (Vertex u : b) {
      if (g.Neighbors(u) != neighborhood) {
        uniform = false;
        break;
      }
    }
    if (uniform) return FamilyFWitness{neighborhood, std::move(b)};
  }
  return std::nullopt;
}

std::string CheckFamilyFWitness(const Graph& g, const FamilyFWitness& w) {
  const int n = g.num_vertices();
  if (w.a.universe() != n || w.b.universe() != n) return "witness universe does not match graph order";
  if (w.a.Intersects(w.b) || (w.a | w.b) != VertexSet::Full(n)) return "A and B do not partition V";
  if (w.p() < 2) return "p = " + std::to_string(w.p()) + " < 2";
  if (w.q() < w.p() + 1) return "q = " + std::to_string(w.q()) + " < p + 1";
  for (Vertex u : w.b) {
    if (g.Neighbors(u).Intersects(w.b)) return "B is not independent at " + std::to_string(u);
    if (!w.a.IsSubsetOf(g.Neighbors(u))) return "vertex " + std::to_string(u) + " misses part of A";
  }
  return {};
}

std::vector<Edge> AllPairs(int p) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < p; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

Graph GenerateFamilyF(int p, int q, const std::vector<Edge>& a_edges) {
  if (p < 2 || q < p + 1) {
    throw InputError("family F requires q >= p + 1 >= 3, got p = " + std::to_string(p) + ", q = " +
                     std::to_string(q));
  }
  std::vector<Edge> edges;
  edges.reserve(a_edges.size() + static_cast<std::size_t>(p) * q);
  for (const auto& [i, j] : a_edges) {
    if (i < 0 || j >= p || i >= j) {
      throw InputError("A-edge (" + std::to_string(i) + "," + std::to_string(j) + ") needs 0 <= i < j < p");
    }
    edges.emplace_back(i, j);
  }
  for (Vertex a = 0; a < p; ++a) {
    for (Vertex b = p; b < p + q; ++b) edges.emplace_back(a, b);
  }
  return Graph::FromEdges(p + q, edges);
}

}  // namespace hamverify
