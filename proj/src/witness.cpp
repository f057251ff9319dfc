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

#include <algorithm>
#include <chrono>
#include <set>

#include "alphaline/solvers.hpp"

namespace alphaline {

bool is_independent_set(const Graph& g, std::span<const int> vertices) {
  std::set<int> seen;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count() || !seen.insert(v).second) return false;
  }
  for (const Edge& e : g.edges()) {
    if (seen.contains(e.u) && seen.contains(e.v)) return false;
  }
  return true;
}

bool is_matching(const Graph& g, std::span<const int> edge_indices) {
  std::set<int> indices;
  std::set<int> endpoints;
  for (int i : edge_indices) {
    if (i < 0 || i >= g.edge_count() || !indices.insert(i).second) return false;
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if (!endpoints.insert(e.u).second || !endpoints.insert(e.v).second) return false;
  }
  return true;
}

SolveResult alpha_line(const Graph& g, const MisOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const LineGraph lg = line_graph(g);
  SolveResult result = mis_exact(lg.graph, options);
  for (int& vertex : result.witness) {
    vertex = lg.labels[static_cast<std::size_t>(vertex)].index;
  }
  std::sort(result.witness.begin(), result.witness.end());
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace alphaline
