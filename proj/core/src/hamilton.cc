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

#include "hamverify/hamilton.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {
namespace {

using Mask = std::uint32_t;

constexpr Mask Bit(Vertex v) { return Mask{1} << v; }

std::vector<Mask> AdjacencyMasks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) adj[v] = static_cast<Mask>(g.Neighbors(v).LowWord());
  return adj;
}

Mask AllOf(int n) { return n >= 32 ? ~Mask{0} : Bit(n) - 1; }

Mask ReachWithin(const std::vector<Mask>& adj, Mask alive, Vertex start) {
  Mask seen = Bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int Components(const std::vector<Mask>& adj, Mask alive) {
  int count = 0;
  while (alive != 0) {
    alive &= ~ReachWithin(adj, alive, std::countr_zero(alive));
    ++count;
  }
  return count;
}

// Exact obstructions: a Hamiltonian graph is connected, has minimum degree
// >= 2, and loses at most |S| components when S is deleted (checked for
// |S| = 1, 2).
bool HasStructuralObstruction(const std::vector<Mask>& adj, int n) {
  const Mask all = AllOf(n);
  if (Components(adj, all) != 1) return true;
  for (Vertex v = 0; v < n; ++v) {
    if (std::popcount(adj[v]) <= 1) return true;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (Components(adj, all & ~Bit(u)) > 1) return true;
    for (Vertex v = u + 1; v < n; ++v) {
      if (Components(adj, all & ~Bit(u) & ~Bit(v)) > 2) return true;
    }
  }
  return false;
}

void CheckEngineOrder(const Graph& g, int max_order, const char* engine) {
  const int n = g.num_vertices();
  if (n < 3) throw InputError("Hamiltonicity is defined here for n >= 3");
  if (n > max_order) {
    throw CapacityError(std::string(engine) + " handles n <= " + std::to_string(max_order) + ", got n = " +
                        std::to_string(n));
  }
}

}  // namespace

const char* ToString(NonHamiltonianMethod method) {
  switch (method) {
    case NonHamiltonianMethod::kDynamicProgramming:
      return "dp";
    case NonHamiltonianMethod::kExhaustiveBacktrack:
      return "exhaustive_backtrack";
    case NonHamiltonianMethod::kStructuralObstruction:
      return "structural_obstruction";
  }
  return "unknown";
}

HamiltonCertificate HeldKarpHamiltonianCycle(const Graph& g) {
  CheckEngineOrder(g, kHeldKarpMaxOrder, "Held-Karp engine");
  const int n = g.num_vertices();
  const std::vector<Mask> adj = AdjacencyMasks(g);

  // Subsets range over vertices 1..n-1 (bit v-1); ends[subset] holds, as
  // vertex bits, every v for which some path from 0 visits exactly `subset`
  // and stops at v.
  const int free_vertices = n - 1;
  const Mask full = Bit(free_vertices) - 1;
  std::vector<Mask> ends(std::size_t{1} << free_vertices, 0);
  for (Mask m = adj[0] & ~Bit(0); m != 0; m &= m - 1) {
    const Vertex v = std::countr_zero(m);
    ends[Bit(v - 1)] |= Bit(v);
  }
  for (Mask subset = 1; subset < full; ++subset) {
    const Mask here = ends[subset];
    if (here == 0) continue;
    Mask reach = 0;
    for (Mask e = here; e != 0; e &= e - 1) reach |= adj[std::countr_zero(e)];
    // Vertex bits of the subset are the subset shifted up by one.
    reach &= ~(subset << 1) & ~Bit(0);
    for (; reach != 0; reach &= reach - 1) {
      const Vertex w = std::countr_zero(reach);
      ends[subset | Bit(w - 1)] |= Bit(w);
    }
  }

  Mask closing = ends[full] & adj[0];
  if (closing == 0) return NonHamiltonian{NonHamiltonianMethod::kDynamicProgramming};

  // Walk predecessors back from the full subset; listing them after 0
  // traverses the cycle in the reverse direction.
  Vertex v = std::countr_zero(closing);
  std::vector<Vertex> order{0, v};
  Mask subset = full;
  while (std::popcount(subset) > 1) {
    subset &= ~Bit(v - 1);
    const Vertex prev = std::countr_zero(ends[subset] & adj[v]);
    order.push_back(prev);
    v = prev;
  }
  return HamiltonCycle{std::move(order)};
}

HamiltonCertificate BacktrackHamiltonianCycle(const Graph& g) {
  CheckEngineOrder(g, kHamiltonMaxOrder, "backtracking engine");
  const int n = g.num_vertices();
  const std::vector<Mask> adj = AdjacencyMasks(g);
  const Mask all = AllOf(n);

  // Necessary conditions for extending a path 0 ... last covering `visited`
  // into a Hamiltonian cycle.
  auto feasible = [&](Mask visited, Vertex last) {
    const Mask unvisited = all & ~visited;
    if ((adj[0] & unvisited) == 0) return false;
    const Mask endpoints = Bit(0) | Bit(last);
    for (Mask m = unvisited; m != 0; m &= m - 1) {
      if (std::popcount(adj[std::countr_zero(m)] & (unvisited | endpoints)) < 2) return false;
    }
    const Mask region = unvisited | Bit(last);
    return ReachWithin(adj, region, last) == region;
  };

  struct Frame {
    std::array<Vertex, kHamiltonMaxOrder> candidates;
    int count = 0;
    int next = 0;
  };
  std::vector<Frame> frames(n);
  std::vector<Vertex> path(n, 0);

  auto fill_frame = [&](Frame& frame, Vertex last, Mask visited) {
    const Mask unvisited = all & ~visited;
    frame.count = 0;
    frame.next = 0;
    for (Mask m = adj[last] & unvisited; m != 0; m &= m - 1) frame.candidates[frame.count++] = std::countr_zero(m);
    std::stable_sort(frame.candidates.begin(), frame.candidates.begin() + frame.count, [&](Vertex a, Vertex b) {
      return std::popcount(adj[a] & unvisited) < std::popcount(adj[b] & unvisited);
    });
  };

  Mask visited = Bit(0);
  int depth = 0;
  fill_frame(frames[0], 0, visited);
  while (true) {
    Frame& frame = frames[depth];
    if (frame.next == frame.count) {
      if (depth == 0) return NonHamiltonian{NonHamiltonianMethod::kExhaustiveBacktrack};
      visited &= ~Bit(path[depth]);
      --depth;
      continue;
    }
    const Vertex w = frame.candidates[frame.next++];
    const Mask extended = visited | Bit(w);
    if (depth + 1 == n - 1) {
      if (adj[w] & Bit(0)) {
        path[depth + 1] = w;
        return HamiltonCycle{std::move(path)};
      }
      continue;
    }
    if (!feasible(extended, w)) continue;
    visited = extended;
    path[++depth] = w;
    fill_frame(frames[depth], w, visited);
  }
}

HamiltonCertificate HamiltonianCycle(const Graph& g) {
  CheckEngineOrder(g, kHamiltonMaxOrder, "Hamiltonicity solver");
  const int n = g.num_vertices();
  if (HasStructuralObstruction(AdjacencyMasks(g), n)) {
    return NonHamiltonian{NonHamiltonianMethod::kStructuralObstruction};
  }
  return n <= kHeldKarpMaxOrder ? HeldKarpHamiltonianCycle(g) : BacktrackHamiltonianCycle(g);
}

bool IsHamiltonian(const Graph& g) { return IsCycle(HamiltonianCycle(g)); }

std::string CheckHamiltonCycle(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    return "cycle has " + std::to_string(order.size()) + " vertices, graph has " + std::to_string(n);
  }
  if (n < 3) return "a cycle needs at least 3 vertices";
  std::vector<bool> seen(n, false);
  for (Vertex v : order) {
    if (v < 0 || v >= n) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = true;
  }
  for (int i = 0; i < n; ++i) {
    const Vertex a = order[i];
    const Vertex b = order[(i + 1) % n];
    if (!g.HasEdge(a, b)) return std::to_string(a) + "-" + std::to_string(b) + " is not an edge";
  }
  return {};
}

}  // namespace hamverify
