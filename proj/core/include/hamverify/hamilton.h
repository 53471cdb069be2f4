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

#ifndef HAMVERIFY_HAMILTON_H_
#define HAMVERIFY_HAMILTON_H_

#include <string>
#include <variant>
#include <vector>

#include "hamverify/graph.h"

namespace hamverify {

inline constexpr int kHeldKarpMaxOrder = 20;
inline constexpr int kHamiltonMaxOrder = 32;

// How a NonHamiltonian answer was established.
enum class NonHamiltonianMethod {
  kDynamicProgramming,
  kExhaustiveBacktrack,
  // Disconnected, a vertex of degree <= 1, or deleting one or two vertices
  // leaves more components than vertices deleted.
  kStructuralObstruction,
};

const char* ToString(NonHamiltonianMethod method);

struct HamiltonCycle {
  // Permutation of 0..n-1, starting at 0.
  std::vector<Vertex> order;
};

struct NonHamiltonian {
  NonHamiltonianMethod method;
};

using HamiltonCertificate = std::variant<HamiltonCycle, NonHamiltonian>;

inline bool IsCycle(const HamiltonCertificate& cert) {
  return std::holds_alternative<HamiltonCycle>(cert);
}

// Held-Karp reachability DP for n <= 20, pruned backtracking for
// 20 < n <= 32, both preceded by exact structural pre-checks.
// Throws InputError for n < 3 and CapacityError for n > 32.
HamiltonCertificate HamiltonianCycle(const Graph& g);
bool IsHamiltonian(const Graph& g);

// The engines on their own, without pre-checks.
//
// Subset x last-vertex table with start vertex 0; the cycle is recovered by
// walking predecessors from the full subset. 3 <= n <= 20.
HamiltonCertificate HeldKarpHamiltonianCycle(const Graph& g);
// Iterative depth-first extension from vertex 0, candidates tried by
// increasing remaining degree (ties by index), pruned on stranded vertices
// and on disconnection of the unvisited part. 3 <= n <= 32.
HamiltonCertificate BacktrackHamiltonianCycle(const Graph& g);

// Empty when `order` is a Hamiltonian cycle of g.
std::string CheckHamiltonCycle(const Graph& g, const std::vector<Vertex>& order);

}  // namespace hamverify

#endif  // HAMVERIFY_HAMILTON_H_
