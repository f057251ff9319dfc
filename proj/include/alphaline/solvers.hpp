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

#ifndef ALPHALINE_SOLVERS_HPP
#define ALPHALINE_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "alphaline/graph.hpp"

namespace alphaline {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr int kBruteForceLimit = 25;

enum class SolveStatus {
  Optimal,
  // Node budget ran out; value is the best found so far, not a certified optimum.
  BudgetExhausted,
};

struct SolveResult {
  SolveStatus status = SolveStatus::Optimal;
  int value = 0;
  // Vertex indices for independent-set solvers, edge indices (into
  // Graph::edges()) for matching solvers and alpha_line.
  std::vector<int> witness;
  // Search nodes for branch-and-bound and brute force, augmentations for blossom.
  std::uint64_t steps = 0;
  std::chrono::duration<double, std::milli> elapsed{};

  bool optimal() const { return status == SolveStatus::Optimal; }
};

class SizeLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MisOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

// Exact alpha(g) by include/exclude branching on a maximum-degree vertex.
SolveResult mis_exact(const Graph& g, const MisOptions& options = {});

// alpha(g) by enumerating all 2^n vertex subsets. Requires n <= 25.
SolveResult mis_bruteforce(const Graph& g);

// nu(g) by Edmonds' augmenting paths with blossom contraction.
SolveResult max_matching(const Graph& g);

// nu(g) by enumerating edge subsets. Requires |E| <= 25.
SolveResult matching_bruteforce(const Graph& g);

// alpha(L(g)) via mis_exact on the line graph; the witness is mapped back to
// edge indices of g.
SolveResult alpha_line(const Graph& g, const MisOptions& options = {});

// Independent checks, not sharing code with the solvers.
bool is_independent_set(const Graph& g, std::span<const int> vertices);
bool is_matching(const Graph& g, std::span<const int> edge_indices);

// A matching of size nu is perfect iff it covers every vertex.
inline bool is_perfect_matching_size(const Graph& g, int nu) { return g.vertex_count() == 2 * nu; }

}  // namespace alphaline

#endif  // ALPHALINE_SOLVERS_HPP
