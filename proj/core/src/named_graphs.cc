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

#include "hamverify/named_graphs.h"

#include <vector>

#include "hamverify/errors.h"

namespace hamverify {

Graph CompleteGraph(int n) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(n, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::FromEdges(n, edges);
}

Graph PathGraph(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::FromEdges(n, edges);
}

Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::FromEdges(leaves + 1, edges);
}

Graph CompleteBipartiteGraph(int p, int q) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < p; ++i) {
    for (Vertex j = p; j < p + q; ++j) edges.emplace_back(i, j);
  }
  return Graph::FromEdges(p + q, edges);
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::FromEdges(10, edges);
}

Graph Join(const Graph& a, const Graph& b) {
  const int na = a.num_vertices();
  const int nb = b.num_vertices();
  std::vector<Edge> edges = a.Edges();
  for (const auto& [u, v] : b.Edges()) edges.emplace_back(na + u, na + v);
  for (Vertex u = 0; u < na; ++u) {
    for (Vertex v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
  }
  return Graph::FromEdges(na + nb, edges);
}

}  // namespace hamverify
