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

#ifndef ALPHALINE_GRAPH_HPP
#define ALPHALINE_GRAPH_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alphaline {

using Vertex = int;

// Unordered vertex pair, always stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SelfLoopError : public GraphError {
 public:
  using GraphError::GraphError;
};

class VertexRangeError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Immutable undirected simple graph on vertices 0..n-1.
//
// Edges are kept in sorted (min,max) order; the position of an edge in
// edges() is its dense edge index, which is also the vertex index it gets
// in the line graph.
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs (in either orientation) are collapsed. Throws
  // SelfLoopError / VertexRangeError naming the offending pair.
  static Graph build(int n, std::span<const std::pair<int, int>> edge_list);
  static Graph build(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return build(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Index of edge {u,v} in edges(), or -1 when absent.
  int edge_index(Vertex u, Vertex v) const;

  // Edge list as plain pairs, suitable for feeding back into build().
  std::vector<std::pair<int, int>> edge_pairs() const;

  bool has_isolated_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Vertex i of the line graph corresponds to the edge with index i.
struct EdgeLabel {
  int index = 0;
  Edge endpoints;
};

struct LineGraph {
  Graph graph;
  std::vector<EdgeLabel> labels;
};

// L(G): one vertex per edge of g, adjacent iff the edges share an endpoint.
LineGraph line_graph(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

std::string to_string(const Edge& e);

}  // namespace alphaline

#endif  // ALPHALINE_GRAPH_HPP
