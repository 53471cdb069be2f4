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

#ifndef HAMVERIFY_GRAPH_H_
#define HAMVERIFY_GRAPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamverify/vertex_set.h"

namespace hamverify {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Each vertex keeps its
// neighborhood as a VertexSet. Values are immutable once built, so they can
// be shared freely between scan workers.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on `n` vertices.
  explicit Graph(int n);

  // Duplicates collapse. Throws InputError on out-of-range endpoints or loops.
  static Graph FromEdges(int n, std::span<const Edge> edges);
  static Graph FromEdges(int n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return num_edges_; }

  const VertexSet& Neighbors(Vertex v) const;
  bool HasEdge(Vertex u, Vertex v) const;
  int Degree(Vertex v) const { return Neighbors(v).size(); }
  int MinDegree() const;
  bool IsComplete() const { return 2 * static_cast<std::int64_t>(num_edges_) == static_cast<std::int64_t>(n_) * (n_ - 1); }

  // Edges with u < v, sorted lexicographically.
  std::vector<Edge> Edges() const;

  Graph WithEdge(Vertex u, Vertex v) const;
  Graph WithoutEdge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  void CheckVertex(Vertex v) const;
  void Connect(Vertex u, Vertex v);
  void Disconnect(Vertex u, Vertex v);

  int n_ = 0;
  int num_edges_ = 0;
  std::vector<VertexSet> adj_;
};

// adj[u] ∩ U.
VertexSet NeighborsIn(const Graph& g, Vertex u, const VertexSet& subset);

// Empty string when the adjacency structure is loop-free, symmetric and in
// range; otherwise a description of the first violation.
std::string CheckWellFormed(const Graph& g);

// Number of connected components of g - removed. Removed vertices are not
// counted.
int CountComponents(const Graph& g, const VertexSet& removed);
inline bool IsConnected(const Graph& g) {
  return CountComponents(g, VertexSet(g.num_vertices())) <= 1;
}

// True when s and t lie in different components of g - removed.
bool Separates(const Graph& g, const VertexSet& removed, Vertex s, Vertex t);

}  // namespace hamverify

#endif  // HAMVERIFY_GRAPH_H_
