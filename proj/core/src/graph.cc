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

#include "hamverify/graph.h"

#include <algorithm>
#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InputError("graph order must be non-negative");
  adj_.assign(n, VertexSet(n));
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    g.CheckVertex(u);
    g.CheckVertex(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    g.Connect(u, v);
  }
  return g;
}

void Graph::CheckVertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n_));
  }
}

void Graph::Connect(Vertex u, Vertex v) {
  if (adj_[u].Contains(v)) return;
  adj_[u].Insert(v);
  adj_[v].Insert(u);
  ++num_edges_;
}

void Graph::Disconnect(Vertex u, Vertex v) {
  if (!adj_[u].Contains(v)) return;
  adj_[u].Erase(v);
  adj_[v].Erase(u);
  --num_edges_;
}

const VertexSet& Graph::Neighbors(Vertex v) const {
  CheckVertex(v);
  return adj_[v];
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  CheckVertex(u);
  return adj_[u].Contains(v);
}

int Graph::MinDegree() const {
  int best = n_ == 0 ? 0 : n_;
  for (const VertexSet& nbrs : adj_) best = std::min(best, nbrs.size());
  return best;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::WithEdge(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.Connect(u, v);
  return g;
}

Graph Graph::WithoutEdge(Vertex u, Vertex v) const {
  CheckVertex(u);
  CheckVertex(v);
  Graph g = *this;
  if (u != v) g.Disconnect(u, v);
  return g;
}

VertexSet NeighborsIn(const Graph& g, Vertex u, const VertexSet& subset) {
  return g.Neighbors(u) & subset;
}

std::string CheckWellFormed(const Graph& g) {
  const int n = g.num_vertices();
  int degree_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    const VertexSet& nbrs = g.Neighbors(u);
    if (nbrs.universe() != n) return "neighbor set of " + std::to_string(u) + " has wrong universe";
    if (nbrs.Contains(u)) return "self-loop at " + std::to_string(u);
    for (Vertex v : nbrs) {
      if (v < 0 || v >= n) return "neighbor out of range at " + std::to_string(u);
      if (!g.Neighbors(v).Contains(u)) {
        return "asymmetric adjacency " + std::to_string(u) + "->" + std::to_string(v);
      }
    }
    degree_sum += nbrs.size();
  }
  if (degree_sum != 2 * g.num_edges()) return "edge count disagrees with adjacency";
  return {};
}

namespace {

// Marks everything reachable from `start` inside `alive`.
VertexSet Reach(const Graph& g, const VertexSet& alive, Vertex start) {
  VertexSet seen(g.num_vertices());
  seen.Insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(g.num_vertices());
    for (Vertex v : frontier) next |= g.Neighbors(v);
    next &= alive;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

int CountComponents(const Graph& g, const VertexSet& removed) {
  VertexSet alive = ~removed;
  int components = 0;
  while (!alive.empty()) {
    alive -= Reach(g, alive, alive.First());
    ++components;
  }
  return components;
}

bool Separates(const Graph& g, const VertexSet& removed, Vertex s, Vertex t) {
  if (removed.Contains(s) || removed.Contains(t)) return false;
  return !Reach(g, ~removed, s).Contains(t);
}

}  // namespace hamverify
