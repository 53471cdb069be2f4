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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "hamverify/errors.h"
#include "hamverify/named_graphs.h"
#include "test_support.h"

namespace hamverify {
namespace {

TEST(VertexSetTest, BasicMembership) {
  VertexSet s(130, {0, 64, 129});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.Contains(64));
  EXPECT_FALSE(s.Contains(65));
  EXPECT_EQ(s.First(), 0);
  EXPECT_EQ(s.ToVector(), (std::vector<Vertex>{0, 64, 129}));
  s.Erase(0);
  EXPECT_EQ(s.First(), 64);
  EXPECT_THROW(s.Insert(130), InputError);
  EXPECT_THROW(s.Contains(-1), InputError);
}

TEST(VertexSetTest, AlgebraAndComplement) {
  const VertexSet a(70, {1, 2, 69});
  const VertexSet b(70, {2, 3});
  EXPECT_EQ((a & b), VertexSet(70, {2}));
  EXPECT_EQ((a | b), VertexSet(70, {1, 2, 3, 69}));
  EXPECT_EQ((a - b), VertexSet(70, {1, 69}));
  EXPECT_EQ((~a).size(), 67);
  EXPECT_FALSE((~a).Contains(69));
  EXPECT_EQ(VertexSet::Full(70).size(), 70);
  EXPECT_TRUE(VertexSet(70, {2}).IsSubsetOf(a));
  EXPECT_THROW(a & VertexSet(71), InputError);
}

TEST(VertexSetTest, EmptyUniverse) {
  VertexSet s(0);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.First(), -1);
  EXPECT_EQ(s.begin(), s.end());
}

TEST(GraphTest, FromEdgesTriangle) {
  const Graph g = Graph::FromEdges(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3);
  EXPECT_TRUE(g.IsComplete());
  EXPECT_EQ(g.Edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(GraphTest, SingleVertex) {
  const Graph g = Graph::FromEdges(1, {});
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.num_edges(), 0);
}

TEST(GraphTest, DuplicatesCollapse) {
  const Graph g = Graph::FromEdges(4, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.Degree(2), 0);
  EXPECT_EQ(g.Degree(3), 0);
}

TEST(GraphTest, RejectsBadEdges) {
  EXPECT_THROW(Graph::FromEdges(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph::FromEdges(3, {{-1, 0}}), InputError);
  EXPECT_THROW(Graph::FromEdges(3, {{1, 1}}), InputError);
  EXPECT_THROW(Graph(3).WithEdge(2, 2), InputError);
}

TEST(GraphTest, NeighborsIn) {
  EXPECT_EQ(NeighborsIn(CompleteGraph(3), 0, VertexSet(3, {1})), VertexSet(3, {1}));
  EXPECT_TRUE(NeighborsIn(PetersenGraph(), 4, VertexSet(10)).empty());
  EXPECT_EQ(NeighborsIn(CycleGraph(5), 0, VertexSet(5, {1, 2, 3, 4})), VertexSet(5, {1, 4}));
}

TEST(GraphTest, ComponentsAndSeparation) {
  // Two triangles sharing vertex 2.
  const Graph bowtie = Graph::FromEdges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  EXPECT_TRUE(IsConnected(bowtie));
  EXPECT_EQ(CountComponents(bowtie, VertexSet(5, {2})), 2);
  EXPECT_TRUE(Separates(bowtie, VertexSet(5, {2}), 0, 4));
  EXPECT_FALSE(Separates(bowtie, VertexSet(5, {1}), 0, 4));
  EXPECT_FALSE(IsConnected(Graph(2)));
  EXPECT_TRUE(IsConnected(Graph(0)));
}

TEST(GraphTest, EveryConstructionPathIsWellFormed) {
  std::mt19937_64 rng(11);
  std::vector<Graph> graphs = {CompleteGraph(6), CycleGraph(7), PathGraph(4), StarGraph(4),
                               CompleteBipartiteGraph(3, 4), PetersenGraph(),
                               Join(CompleteGraph(3), Graph(4))};
  for (int i = 0; i < 200; ++i) {
    Graph g = testing::RandomGraphUpTo(1, 80, rng);
    graphs.push_back(g);
    if (g.num_vertices() >= 2) {
      graphs.push_back(g.WithEdge(0, g.num_vertices() - 1));
      graphs.push_back(g.WithoutEdge(0, 1));
    }
  }
  for (const Graph& g : graphs) EXPECT_EQ(CheckWellFormed(g), "");
}

TEST(NamedGraphsTest, Sizes) {
  EXPECT_EQ(PetersenGraph().num_edges(), 15);
  EXPECT_EQ(PetersenGraph().MinDegree(), 3);
  EXPECT_EQ(CompleteBipartiteGraph(3, 4).num_edges(), 12);
  EXPECT_EQ(Join(CompleteGraph(3), Graph(4)).num_edges(), 3 + 12);
}

}  // namespace
}  // namespace hamverify
