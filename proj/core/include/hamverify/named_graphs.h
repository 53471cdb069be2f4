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

#ifndef HAMVERIFY_NAMED_GRAPHS_H_
#define HAMVERIFY_NAMED_GRAPHS_H_

#include "hamverify/graph.h"

namespace hamverify {

Graph CompleteGraph(int n);
// Cycle 0-1-...-(n-1)-0. Requires n >= 3.
Graph CycleGraph(int n);
// Path 0-1-...-(n-1).
Graph PathGraph(int n);
// Center 0, leaves 1..leaves.
Graph StarGraph(int leaves);
// Sides {0..p-1} and {p..p+q-1}.
Graph CompleteBipartiteGraph(int p, int q);
// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph PetersenGraph();
// Disjoint union of a and b (b relabeled after a) plus every a-b edge.
Graph Join(const Graph& a, const Graph& b);

}  // namespace hamverify

#endif  // HAMVERIFY_NAMED_GRAPHS_H_
