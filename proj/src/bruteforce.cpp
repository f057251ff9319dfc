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

#include <bit>
#include <chrono>
#include <cstdint>
#include <string>

#include "alphaline/solvers.hpp"

namespace alphaline {
namespace {

using Clock = std::chrono::steady_clock;

struct MatchingEnumerator {
  const std::vector<Edge>& edges;
  std::uint64_t covered = 0;
  std::vector<int> chosen;
  std::vector<int> best;
  std::uint64_t visited = 0;

  // Each call is one edge subset that is a matching; subsets with a
  // conflicting prefix are skipped since no extension can be a matching.
  void run(std::size_t next) {
    ++visited;
    if (chosen.size() > best.size()) best = chosen;
    for (std::size_t i = next; i < edges.size(); ++i) {
      const std::uint64_t ends = (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
      if (covered & ends) continue;
      covered |= ends;
      chosen.push_back(static_cast<int>(i));
      run(i + 1);
      chosen.pop_back();
      covered &= ~ends;
    }
  }
};

}  // namespace

SolveResult mis_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kBruteForceLimit) {
    throw SizeLimitError("mis_bruteforce supports at most " + std::to_string(kBruteForceLimit) +
                         " vertices, got " + std::to_string(n));
  }
  const auto start = Clock::now();
  std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adjacency[static_cast<std::size_t>(e.u)] |= std::uint32_t{1} << e.v;
    adjacency[static_cast<std::size_t>(e.v)] |= std::uint32_t{1} << e.u;
  }

  // independent[mask] from independent[mask minus its lowest vertex].
  const std::uint32_t subsets = std::uint32_t{1} << n;
  std::vector<std::uint8_t> independent(subsets, 0);
  independent[0] = 1;
  std::uint32_t best_mask = 0;
  int best_size = 0;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    independent[mask] = independent[rest] && (adjacency[static_cast<std::size_t>(low)] & rest) == 0;
    if (independent[mask] && std::popcount(mask) > best_size) {
      best_size = std::popcount(mask);
      best_mask = mask;
    }
  }

  SolveResult result;
  for (int v = 0; v < n; ++v) {
    if (best_mask & (std::uint32_t{1} << v)) result.witness.push_back(v);
  }
  result.value = best_size;
  result.steps = subsets;
  result.elapsed = Clock::now() - start;
  return result;
}

SolveResult matching_bruteforce(const Graph& g) {
  if (g.edge_count() > kBruteForceLimit) {
    throw SizeLimitError("matching_bruteforce supports at most " + std::to_string(kBruteForceLimit) +
                         " edges, got " + std::to_string(g.edge_count()));
  }
  if (g.vertex_count() > 64) {
    // Only reachable with isolated vertices beyond index 63.
    throw SizeLimitError("matching_bruteforce supports at most 64 vertices");
  }
  const auto start = Clock::now();
  MatchingEnumerator search{g.edges(), 0, {}, {}, 0};
  search.run(0);
  SolveResult result;
  result.witness = search.best;
  result.value = static_cast<int>(search.best.size());
  result.steps = search.visited;
  result.elapsed = Clock::now() - start;
  return result;
}

}  // namespace alphaline
