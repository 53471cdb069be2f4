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

#include "hamverify/matching.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "hamverify/errors.h"

namespace hamverify {

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

namespace {

// Edmonds' algorithm with blossoms contracted onto their base: base[v] names
// the outermost blossom containing v, and every vertex of a freshly found
// blossom is relabeled to its base and becomes an outer vertex.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : n_(g.num_vertices()),
        adj_(n_),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        outer_(n_),
        in_blossom_(n_),
        on_path_(n_) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.Neighbors(v).ToVector();
  }

  Matching Run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex end = FindAugmentingPath(root);
      while (end != -1) {
        const Vertex prev = parent_[end];
        const Vertex next = mate_[prev];
        mate_[end] = prev;
        mate_[prev] = end;
        end = next;
      }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] > v) edges.emplace_back(v, mate_[v]);
    }
    return Matching(std::move(edges));
  }

 private:
  Vertex LowestCommonAncestor(Vertex a, Vertex b) {
    std::fill(on_path_.begin(), on_path_.end(), false);
    for (;;) {
      a = base_[a];
      on_path_[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkBlossomPath(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  void ContractBlossom(Vertex v, Vertex w, std::deque<Vertex>& queue) {
    const Vertex blossom_base = LowestCommonAncestor(v, w);
    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
    MarkBlossomPath(v, blossom_base, w);
    MarkBlossomPath(w, blossom_base, v);
    for (Vertex i = 0; i < n_; ++i) {
      if (!in_blossom_[base_[i]]) continue;
      base_[i] = blossom_base;
      if (!outer_[i]) {
        outer_[i] = true;
        queue.push_back(i);
      }
    }
  }

  // Grows an alternating tree from `root`; returns the exposed endpoint of
  // an augmenting path (recoverable through parent_/mate_) or -1.
  Vertex FindAugmentingPath(Vertex root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(outer_.begin(), outer_.end(), false);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;

    std::deque<Vertex> queue{root};
    outer_[root] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : adj_[v]) {
        if (base_[v] == base_[w] || mate_[v] == w) continue;
        if (w == root || (mate_[w] != -1 && parent_[mate_[w]] != -1)) {
          ContractBlossom(v, w, queue);
        } else if (parent_[w] == -1) {
          parent_[w] = v;
          if (mate_[w] == -1) return w;
          outer_[mate_[w]] = true;
          queue.push_back(mate_[w]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> outer_;
  std::vector<bool> in_blossom_;
  std::vector<bool> on_path_;
};

}  // namespace

Matching MaximumMatching(const Graph& g) { return BlossomMatcher(g).Run(); }

std::string CheckMatching(const Graph& g, const Matching& m) {
  std::vector<bool> covered(g.num_vertices(), false);
  for (const auto& [u, v] : m.edges()) {
    if (u < 0 || v >= g.num_vertices() || u >= v) return "malformed pair";
    if (!g.HasEdge(u, v)) return "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge";
    if (covered[u] || covered[v]) return "vertex covered twice near (" + std::to_string(u) + "," + std::to_string(v) + ")";
    covered[u] = covered[v] = true;
  }
  return {};
}

namespace {

struct AlternatingSearch {
  const Graph& g;
  const std::vector<Vertex>& mate;
  std::vector<bool> visited;
  std::vector<Vertex> path;

  // `v` is the last path vertex, reached by a matching edge (or the start);
  // leave it by a non-matching edge.
  bool Extend(Vertex v) {
    for (Vertex w : g.Neighbors(v)) {
      if (visited[w] || mate[v] == w) continue;
      if (mate[w] == -1) {
        path.push_back(w);
        return true;
      }
      const Vertex x = mate[w];
      if (visited[x]) continue;
      visited[w] = visited[x] = true;
      path.push_back(w);
      path.push_back(x);
      if (Extend(x)) return true;
      path.pop_back();
      path.pop_back();
      visited[w] = visited[x] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> FindAugmentingPath(const Graph& g, const Matching& m) {
  const int n = g.num_vertices();
  std::vector<Vertex> mate(n, -1);
  for (const auto& [u, v] : m.edges()) {
    mate[u] = v;
    mate[v] = u;
  }
  for (Vertex s = 0; s < n; ++s) {
    if (mate[s] != -1) continue;
    AlternatingSearch search{g, mate, std::vector<bool>(n, false), {s}};
    search.visited[s] = true;
    if (search.Extend(s)) return search.path;
  }
  return std::nullopt;
}

namespace {

int BruteMatch(const std::vector<std::uint32_t>& adj, std::uint32_t available) {
  if (std::popcount(available) < 2) return 0;
  const int v = std::countr_zero(available);
  const std::uint32_t rest = available & ~(std::uint32_t{1} << v);
  int best = BruteMatch(adj, rest);
  const int ceiling = std::popcount(available) / 2;
  for (std::uint32_t candidates = adj[v] & rest; candidates != 0 && best < ceiling; candidates &= candidates - 1) {
    const int u = std::countr_zero(candidates);
    best = std::max(best, 1 + BruteMatch(adj, rest & ~(std::uint32_t{1} << u)));
  }
  return best;
}

}  // namespace

int BruteMatchingNumber(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kBruteMatchingMaxOrder) {
    throw CapacityError("brute-force matching is limited to n <= " + std::to_string(kBruteMatchingMaxOrder));
  }
  std::vector<std::uint32_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.Neighbors(v).LowWord());
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  return BruteMatch(adj, all);
}

}  // namespace hamverify
