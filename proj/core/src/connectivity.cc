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

#include "hamverify/connectivity.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {
namespace {

// Residual network with paired arcs (arc ^ 1 is the reverse). Augments by
// breadth-first search one path at a time; every s-t path in the split
// network has bottleneck 1, so each round adds exactly one unit.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(nodes) {}

  int AddArc(int from, int to, int capacity) {
    const int id = static_cast<int>(head_.size());
    head_.push_back(to);
    capacity_.push_back(capacity);
    head_.push_back(from);
    capacity_.push_back(0);
    out_[from].push_back(id);
    out_[to].push_back(id + 1);
    return id;
  }

  int nodes() const { return static_cast<int>(out_.size()); }

  // Restores original capacities.
  void Reset() { residual_ = capacity_; }

  // Augments until no path remains or the flow reaches `limit`.
  int MaxFlow(int source, int sink, int limit) {
    Reset();
    int flow = 0;
    std::vector<int> via(nodes());
    std::vector<int> queue;
    queue.reserve(nodes());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[source] = std::numeric_limits<int>::max();
      queue.assign(1, source);
      for (std::size_t head = 0; head < queue.size() && via[sink] == -1; ++head) {
        const int u = queue[head];
        for (int arc : out_[u]) {
          const int w = head_[arc];
          if (residual_[arc] > 0 && via[w] == -1) {
            via[w] = arc;
            queue.push_back(w);
          }
        }
      }
      if (via[sink] == -1) break;
      for (int v = sink; v != source; v = head_[via[v] ^ 1]) {
        residual_[via[v]] -= 1;
        residual_[via[v] ^ 1] += 1;
      }
      ++flow;
    }
    return flow;
  }

  // Nodes reachable from `source` in the current residual network.
  std::vector<bool> ResidualReach(int source) const {
    std::vector<bool> seen(nodes(), false);
    std::vector<int> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int arc : out_[u]) {
        if (residual_[arc] > 0 && !seen[head_[arc]]) {
          seen[head_[arc]] = true;
          stack.push_back(head_[arc]);
        }
      }
    }
    return seen;
  }

  const std::vector<int>& ArcsOut(int node) const { return out_[node]; }
  int Head(int arc) const { return head_[arc]; }
  // Flow on a forward arc.
  int Flow(int arc) const { return capacity_[arc] - residual_[arc]; }
  void ConsumeFlow(int arc) { residual_[arc] += 1; }

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> head_;
  std::vector<int> capacity_;
  std::vector<int> residual_;
};

int In(Vertex v) { return 2 * v; }
int Out(Vertex v) { return 2 * v + 1; }

// Vertex v becomes In(v) -> Out(v) with capacity 1; edge {u, v} becomes
// Out(u) -> In(v) and Out(v) -> In(u). Edge arcs get capacity n so that
// minimum cuts consist of vertex arcs only; the max-flow value is the same
// as with unit edge arcs because every vertex arc already carries at most 1.
FlowNetwork SplitNetwork(const Graph& g, int extra_nodes = 0) {
  const int n = g.num_vertices();
  FlowNetwork net(2 * n + extra_nodes);
  for (Vertex v = 0; v < n; ++v) net.AddArc(In(v), Out(v), 1);
  for (const auto& [u, v] : g.Edges()) {
    net.AddArc(Out(u), In(v), n);
    net.AddArc(Out(v), In(u), n);
  }
  return net;
}

struct PairMinimum {
  int value;
  Vertex s = -1;
  Vertex t = -1;
};

// Minimum local connectivity over non-adjacent pairs; `cap` bounds every
// flow computation. Requires a non-complete graph.
PairMinimum MinimumOverPairs(const Graph& g, FlowNetwork& net, int cap) {
  const int n = g.num_vertices();
  PairMinimum best{cap};
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.HasEdge(s, t)) continue;
      const int flow = net.MaxFlow(Out(s), In(t), best.value);
      if (best.s == -1 || flow < best.value) best = {flow, s, t};
      if (best.value == 0) return best;
    }
  }
  return best;
}

}  // namespace

int VertexConnectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return 0;
  if (g.IsComplete()) return n - 1;
  if (!IsConnected(g)) return 0;
  FlowNetwork net = SplitNetwork(g);
  // κ <= δ for non-complete graphs: a minimum-degree vertex has a
  // non-neighbor, and its neighborhood separates the two.
  return MinimumOverPairs(g, net, g.MinDegree()).value;
}

int LocalVertexConnectivity(const Graph& g, Vertex s, Vertex t) {
  const int n = g.num_vertices();
  if (s < 0 || t < 0 || s >= n || t >= n || s == t || g.HasEdge(s, t)) {
    throw InputError("local connectivity needs distinct non-adjacent vertices");
  }
  FlowNetwork net = SplitNetwork(g);
  return net.MaxFlow(Out(s), In(t), n);
}

std::optional<VertexCut> MinVertexCut(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 2 || g.IsComplete()) return std::nullopt;
  FlowNetwork net = SplitNetwork(g);
  const PairMinimum best = MinimumOverPairs(g, net, n);
  net.MaxFlow(Out(best.s), In(best.t), n);
  const std::vector<bool> reach = net.ResidualReach(Out(best.s));
  VertexCut cut{VertexSet(n), {best.s, best.t}};
  for (Vertex v = 0; v < n; ++v) {
    if (reach[In(v)] && !reach[Out(v)]) cut.vertices.Insert(v);
  }
  return cut;
}

std::optional<PathFan> DisjointPaths(const Graph& g, Vertex x, const VertexSet& targets, int k) {
  const int n = g.num_vertices();
  if (x < 0 || x >= n) throw InputError("source vertex out of range");
  if (targets.universe() != n) throw InputError("target set universe does not match graph order");
  if (targets.empty()) throw InputError("target set is empty");
  if (targets.Contains(x)) throw InputError("source vertex belongs to the target set");
  if (k < 0) throw InputError("path count must be non-negative");

  // Targets terminate paths: their In node feeds the sink directly and has
  // no route onward, so no path runs through a target.
  const int sink = 2 * n;
  FlowNetwork net(2 * n + 1);
  for (Vertex v = 0; v < n; ++v) {
    if (targets.Contains(v)) {
      net.AddArc(In(v), sink, 1);
    } else {
      net.AddArc(In(v), Out(v), 1);
    }
  }
  for (const auto& [u, v] : g.Edges()) {
    net.AddArc(Out(u), In(v), n);
    net.AddArc(Out(v), In(u), n);
  }
  if (net.MaxFlow(Out(x), sink, k) < k) return std::nullopt;

  PathFan fan{x, targets, {}};
  for (int i = 0; i < k; ++i) {
    std::vector<Vertex> path{x};
    int node = Out(x);
    while (node != sink) {
      for (int arc : net.ArcsOut(node)) {
        if ((arc & 1) == 0 && net.Flow(arc) > 0) {
          net.ConsumeFlow(arc);
          node = net.Head(arc);
          break;
        }
      }
      // Entering an In node: record the vertex, then cross to its Out side
      // (or to the sink for targets) on the next step.
      if (node != sink && node % 2 == 0) path.push_back(node / 2);
    }
    fan.paths.push_back(std::move(path));
  }
  return fan;
}

std::string CheckVertexCut(const Graph& g, const VertexCut& cut) {
  const int n = g.num_vertices();
  const auto [s, t] = cut.separated_pair;
  if (s < 0 || t < 0 || s >= n || t >= n || s == t) return "separated pair out of range";
  if (g.HasEdge(s, t)) return "separated pair is adjacent";
  if (cut.vertices.universe() != n) return "cut universe does not match graph order";
  if (cut.vertices.Contains(s) || cut.vertices.Contains(t)) return "cut contains an endpoint";
  if (!Separates(g, cut.vertices, s, t)) return "deleting the cut leaves the pair connected";
  return {};
}

std::string CheckPathFan(const Graph& g, const PathFan& fan) {
  const int n = g.num_vertices();
  VertexSet used(n);
  VertexSet ends(n);
  for (const auto& path : fan.paths) {
    if (path.size() < 2) return "path too short";
    if (path.front() != fan.source) return "path does not start at the source";
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path[i];
      if (v < 0 || v >= n) return "vertex out of range";
      if (i > 0) {
        if (v == fan.source || used.Contains(v)) return "paths intersect at " + std::to_string(v);
        used.Insert(v);
        if (!g.HasEdge(path[i - 1], v)) return "non-adjacent consecutive vertices";
      }
    }
    const Vertex end = path.back();
    if (!fan.targets.Contains(end)) return "path ends outside the target set";
    if (ends.Contains(end)) return "two paths share an endpoint";
    ends.Insert(end);
  }
  return {};
}

int BruteVertexConnectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kBruteConnectivityMaxOrder) {
    throw CapacityError("brute-force connectivity is limited to n <= " +
                        std::to_string(kBruteConnectivityMaxOrder));
  }
  if (n <= 1) return 0;
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.Neighbors(v).LowWord());
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;

  auto connected = [&](std::uint32_t alive) {
    std::uint32_t seen = alive & (~alive + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= alive & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == alive;
  };

  for (int size = 0; size <= n - 2; ++size) {
    for (std::uint32_t removed = 0; removed <= all; ++removed) {
      if (std::popcount(removed) != size) continue;
      if (!connected(all & ~removed)) return size;
    }
  }
  return n - 1;
}

}  // namespace hamverify
