// Copyright 2026 The alphaline Authors
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

#include "alphaline/graph.hpp"

#include <random>

#include "alphaline/families.hpp"
#include "alphaline/harness.hpp"
#include "gtest/gtest.h"

namespace alphaline {
namespace {

TEST(BuildGraph, PathOnThreeVertices) {
  const Graph g = Graph::build(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, CollapsesReversedDuplicate) {
  const Graph g = Graph::build(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_EQ(g.edges().front(), (Edge{0, 1}));
}

TEST(BuildGraph, RejectsSelfLoop) {
  EXPECT_THROW(Graph::build(4, {{0, 0}}), SelfLoopError);
  try {
    Graph::build(4, {{1, 2}, {3, 3}});
    FAIL();
  } catch (const SelfLoopError& e) {
    EXPECT_NE(std::string(e.what()).find("(3,3)"), std::string::npos);
  }
}

TEST(BuildGraph, RejectsOutOfRange) {
  EXPECT_THROW(Graph::build(3, {{0, 3}}), VertexRangeError);
  EXPECT_THROW(Graph::build(3, {{-1, 2}}), VertexRangeError);
  EXPECT_THROW(Graph::build(0, {}), GraphError);
}

TEST(BuildGraph, EdgesSortedAndIndexed) {
  const Graph g = Graph::build(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_EQ(g.edge_index(3, 2), 2);
  EXPECT_EQ(g.edge_index(1, 3), -1);
}

TEST(BuildGraph, IsolatedVerticesAllowed) {
  const Graph g = Graph::build(4, {{0, 1}});
  EXPECT_TRUE(g.has_isolated_vertices());
  EXPECT_FALSE(Graph::build(2, {{0, 1}}).has_isolated_vertices());
}

TEST(LineGraph, PathThreeIsSingleEdge) {
  const LineGraph lg = line_graph(Graph::build(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(lg.graph.vertex_count(), 2);
  EXPECT_EQ(lg.graph.edge_count(), 1);
}

TEST(LineGraph, TriangleIsSelfLineGraph) {
  const Graph k3 = generate({Family::Complete, 3});
  EXPECT_EQ(line_graph(k3).graph, k3);
}

TEST(LineGraph, K4HasTwelveEdges) {
  // Shared-endpoint pairs: each of the 4 vertices has degree 3, C(3,2) = 3 pairs each.
  const LineGraph lg = line_graph(generate({Family::Complete, 4}));
  EXPECT_EQ(lg.graph.vertex_count(), 6);
  EXPECT_EQ(lg.graph.edge_count(), 12);
}

TEST(LineGraph, LabelsFollowEdgeOrder) {
  const Graph g = generate({Family::Wheel, 4});
  const LineGraph lg = line_graph(g);
  ASSERT_EQ(lg.labels.size(), g.edges().size());
  for (std::size_t i = 0; i < lg.labels.size(); ++i) {
    EXPECT_EQ(lg.labels[i].index, static_cast<int>(i));
    EXPECT_EQ(lg.labels[i].endpoints, g.edges()[i]);
  }
}

TEST(LineGraph, EdgelessGraphGivesEmptyLineGraph) {
  const LineGraph lg = line_graph(Graph::build(3, {}));
  EXPECT_EQ(lg.graph.vertex_count(), 0);
  EXPECT_TRUE(lg.labels.empty());
}

TEST(DegreeSequence, Examples) {
  EXPECT_EQ(degree_sequence(generate({Family::Complete, 3})), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(degree_sequence(Graph::build(4, {{0, 1}, {0, 2}, {0, 3}})), (std::vector<int>{3, 1, 1, 1}));
  // W_6: rim 0..4 of degree 3, hub 5 of degree 5; 6 vertices, 2*5 edges.
  const Graph w6 = generate({Family::Wheel, 5});
  EXPECT_EQ(degree_sequence(w6), (std::vector<int>{3, 3, 3, 3, 3, 5}));
  EXPECT_EQ(w6.edge_count(), 10);
}

// Properties over random graphs.
class RandomGraphs : public ::testing::Test {
 protected:
  std::vector<Graph> sample(int count, int max_vertices, int max_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, max_vertices, max_edges));
    return out;
  }
};

TEST_F(RandomGraphs, LineGraphCountIdentities) {
  for (const Graph& g : sample(300, 14, 40, 11)) {
    const LineGraph lg = line_graph(g);
    long long expected_edges = 0;
    for (int d : degree_sequence(g)) expected_edges += static_cast<long long>(d) * (d - 1) / 2;
    EXPECT_EQ(lg.graph.vertex_count(), g.edge_count());
    EXPECT_EQ(lg.graph.edge_count(), expected_edges);
  }
}

TEST_F(RandomGraphs, LineGraphAdjacencyIsSharedEndpoint) {
  for (const Graph& g : sample(100, 9, 20, 12)) {
    const LineGraph lg = line_graph(g);
    for (int a = 0; a < g.edge_count(); ++a) {
      for (int b = a + 1; b < g.edge_count(); ++b) {
        const Edge& x = g.edges()[static_cast<std::size_t>(a)];
        const Edge& y = g.edges()[static_cast<std::size_t>(b)];
        const bool share = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
        EXPECT_EQ(lg.graph.adjacent(a, b), share);
      }
    }
  }
}

TEST_F(RandomGraphs, AdjacencyConsistentWithEdges) {
  for (const Graph& g : sample(100, 12, 30, 13)) {
    int degree_total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      degree_total += g.degree(v);
      for (int w : g.neighbors(v)) EXPECT_GE(g.edge_index(v, w), 0);
    }
    EXPECT_EQ(degree_total, 2 * g.edge_count());
  }
}

TEST_F(RandomGraphs, RoundTripAndDeterminism) {
  for (const Graph& g : sample(100, 12, 30, 14)) {
    EXPECT_EQ(Graph::build(g.vertex_count(), g.edge_pairs()), g);
    const LineGraph a = line_graph(g);
    const LineGraph b = line_graph(g);
    EXPECT_EQ(a.graph, b.graph);
  }
}

}  // namespace
}  // namespace alphaline
