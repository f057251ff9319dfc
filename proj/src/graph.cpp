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

#include <algorithm>

namespace alphaline {

Graph Graph::build(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 1) {
    throw GraphError("graph must have at least one vertex, got n=" + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw VertexRangeError("edge " + pair + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (a == b) {
      throw SelfLoopError("edge " + pair + " is a self-loop");
    }
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

bool Graph::has_isolated_vertices() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](const auto& nbrs) { return nbrs.empty(); });
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  const auto& edges = g.edges();
  out.labels.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.labels.push_back(EdgeLabel{static_cast<int>(i), edges[i]});
  }

  // Edges incident to each vertex, in index order.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
    incident[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<int, int>> line_edges;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        line_edges.emplace_back(star[a], star[b]);
      }
    }
  }
  // L of an edgeless graph is the empty graph; build() requires n >= 1.
  if (edges.empty()) {
    out.graph = Graph();
    return out;
  }
  out.graph = Graph::build(static_cast<int>(edges.size()), line_edges);
  return out;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
  return out;
}

std::string to_string(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace alphaline
