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

#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hamverify/connectivity.h"
#include "hamverify/enumerate.h"
#include "hamverify/family_f.h"
#include "hamverify/graph_io.h"
#include "hamverify/hamilton.h"
#include "hamverify/matching.h"
#include "hamverify/named_graphs.h"
#include "hamverify/scan.h"
#include "hamverify/theorem.h"

namespace hamverify {
namespace {

Graph RandomGraph(int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) edges.emplace_back(i, j);
    }
  }
  return Graph::FromEdges(n, edges);
}

void BM_MaximumMatching(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(MaximumMatching(g));
}
BENCHMARK(BM_MaximumMatching)->Arg(16)->Arg(64)->Arg(256);

void BM_VertexConnectivity(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(VertexConnectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(8)->Arg(16)->Arg(32);

void BM_HeldKarp(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(HeldKarpHamiltonianCycle(g));
}
BENCHMARK(BM_HeldKarp)->Arg(10)->Arg(16)->Arg(20);

void BM_BacktrackPetersen(benchmark::State& state) {
  const Graph g = PetersenGraph();
  for (auto _ : state) benchmark::DoNotOptimize(BacktrackHamiltonianCycle(g));
}
BENCHMARK(BM_BacktrackPetersen);

void BM_BacktrackDense(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.4, 4);
  for (auto _ : state) benchmark::DoNotOptimize(BacktrackHamiltonianCycle(g));
}
BENCHMARK(BM_BacktrackDense)->Arg(24)->Arg(32);

void BM_RecognizeFamilyF(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const Graph g = GenerateFamilyF(p, 2 * p, AllPairs(p));
  for (auto _ : state) benchmark::DoNotOptimize(RecognizeFamilyF(g));
}
BENCHMARK(BM_RecognizeFamilyF)->Arg(4)->Arg(16)->Arg(64);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(ParseGraph6(EncodeGraph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(30)->Arg(200);

void BM_ScanLabeled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    LabeledGraphs graphs(n);
    benchmark::DoNotOptimize(Scan(graphs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(LabeledGraphs(n).count()));
}
BENCHMARK(BM_ScanLabeled)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hamverify

BENCHMARK_MAIN();
