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

#ifndef ALPHALINE_HARNESS_HPP
#define ALPHALINE_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaline/families.hpp"
#include "alphaline/formulas.hpp"
#include "alphaline/graph.hpp"
#include "alphaline/solvers.hpp"

namespace alphaline {

// Inclusive parameter ranges for one family; m bounds are ignored for
// single-parameter families.
struct FamilyRange {
  Family family = Family::Complete;
  int n_min = 0;
  int n_max = 0;
  int m_min = 0;
  int m_max = 0;

  // Parameter tuples ordered by (m, n).
  std::vector<FamilySpec> specs() const;
};

// "wheel:n=3..10", "armed_crown:m=2..5,n=3..6", "helm:n=4" (single value).
FamilyRange parse_family_range(std::string_view text);

// The default sweep used by `verify --all`.
std::vector<FamilyRange> default_grids();

enum class ReportFormat { Table, Csv, Json };

struct RunConfig {
  std::vector<FamilyRange> ranges;
  std::uint64_t budget = kDefaultNodeBudget;
  // Brute-force cross-checks; each one still only runs within its size limit.
  bool oracle = true;
  ReportFormat format = ReportFormat::Table;
  std::uint64_t seed = 0;
  // 0 = hardware concurrency.
  unsigned threads = 0;
};

enum class Outcome { Pass, Fail, Skipped };
std::string_view to_string(Outcome o);

struct VerificationRecord {
  FamilySpec spec;
  Prediction predicted;

  // Absent when the solver ran out of budget (or, for oracles, was not run).
  std::optional<int> alpha;       // mis_exact
  std::optional<int> nu;          // blossom
  std::optional<int> alpha_line;  // mis_exact on L(G)
  std::optional<int> oracle_alpha;
  std::optional<int> oracle_nu;

  bool witnesses_valid = true;

  std::uint64_t mis_nodes = 0;
  std::uint64_t augmentations = 0;
  std::uint64_t line_nodes = 0;
  double elapsed_ms = 0.0;  // not serialized to CSV/JSON

  bool alpha_matches() const { return alpha && *alpha == predicted.alpha; }
  bool nu_matches() const { return nu && *nu == predicted.alpha_line; }
  // alpha(L(G)) = nu(G) at the harness level, when both were produced.
  std::optional<bool> line_matches() const;
  std::optional<bool> oracle_alpha_matches() const;
  std::optional<bool> oracle_nu_matches() const;

  // False if any produced comparison disagrees or a witness failed to verify.
  bool match() const;
  Outcome outcome() const;

  // Field-wise equality, ignoring elapsed_ms.
  bool same_values(const VerificationRecord& other) const;
};

struct RunSummary {
  int pass = 0;
  int fail = 0;
  int skipped = 0;

  bool ok() const { return fail == 0; }
};

RunSummary summarize(const std::vector<VerificationRecord>& records);

VerificationRecord verify_spec(const FamilySpec& spec, const RunConfig& config);

// Records ordered by range, then by parameter tuple, independent of worker scheduling.
std::vector<VerificationRecord> verify_family(const FamilyRange& range, const RunConfig& config);
std::vector<VerificationRecord> verify_all(const RunConfig& config);

struct Theorem1Config {
  int count = 100;
  int max_vertices = 10;
  int max_edges = 20;
  std::uint64_t seed = 7;
  bool oracle = true;
  std::uint64_t budget = kDefaultNodeBudget;
};

struct Theorem1Counterexample {
  Graph graph;
  int alpha_line = 0;
  int nu = 0;
  std::optional<int> nu_bruteforce;
  std::string serialized;  // DIMACS text
};

struct Theorem1Summary {
  int pass = 0;
  int fail = 0;
  std::vector<Theorem1Counterexample> counterexamples;
};

// Checks alpha(L(G)) = nu(G) for one graph, with the oracle when |E| <= 25.
bool check_line_identity(const Graph& g, bool oracle, std::uint64_t budget, Theorem1Counterexample* failure = nullptr);

Theorem1Summary verify_theorem1(const Theorem1Config& config);

// Uniform vertex count in [1, max_vertices], then uniform edge count in
// [0, min(max_edges, n(n-1)/2)] drawn without replacement.
template <typename Rng>
Graph random_graph(Rng& rng, int max_vertices, int max_edges);

}  // namespace alphaline

#include "alphaline/random_graph.ipp"

#endif  // ALPHALINE_HARNESS_HPP
