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

#include "alphaline/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <random>
#include <thread>

#include "alphaline/graph_io.hpp"

namespace alphaline {
namespace {

int parse_bound(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("invalid integer '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

// "3..10" or "5".
std::pair<int, int> parse_interval(std::string_view text, std::string_view context) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_bound(text, context);
    return {v, v};
  }
  const int lo = parse_bound(text.substr(0, dots), context);
  const int hi = parse_bound(text.substr(dots + 2), context);
  if (lo > hi) throw ParameterError("empty range '" + std::string(text) + "' in '" + std::string(context) + "'");
  return {lo, hi};
}

}  // namespace

std::vector<FamilySpec> FamilyRange::specs() const {
  std::vector<FamilySpec> out;
  const bool two = has_m_parameter(family);
  const int lo = two ? m_min : 0;
  const int hi = two ? m_max : 0;
  for (int m = lo; m <= hi; ++m) {
    for (int n = n_min; n <= n_max; ++n) {
      FamilySpec spec{family, n, m};
      spec.validate();
      out.push_back(spec);
    }
  }
  return out;
}

FamilyRange parse_family_range(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto family = family_from_name(name);
  if (!family) throw ParameterError("unknown family '" + std::string(name) + "'");
  FamilyRange range{*family};
  bool seen_n = false;
  bool seen_m = false;
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParameterError("expected key=range, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const auto [lo, hi] = parse_interval(item.substr(eq + 1), text);
    if (key == "n") {
      range.n_min = lo;
      range.n_max = hi;
      seen_n = true;
    } else if (key == "m" && has_m_parameter(range.family)) {
      range.m_min = lo;
      range.m_max = hi;
      seen_m = true;
    } else {
      throw ParameterError("unknown parameter '" + std::string(key) + "' for " + std::string(name));
    }
  }
  if (!seen_n || (has_m_parameter(range.family) && !seen_m)) {
    throw ParameterError("missing parameter range in '" + std::string(text) + "'");
  }
  // Validates both ends of every range.
  (void)range.specs();
  return range;
}

std::vector<FamilyRange> default_grids() {
  return {
      {Family::Complete, 3, 12},
      {Family::CompleteBipartite, 1, 8, 1, 8},
      {Family::Path, 2, 12},
      {Family::Cycle, 3, 12},
      {Family::Wheel, 3, 12},
      {Family::Helm, 3, 12},
      {Family::Fan, 3, 12},
      {Family::Sun, 3, 12},
      {Family::Sunlet, 3, 12},
      {Family::ArmedCrown, 3, 6, 2, 5},
  };
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass:
      return "pass";
    case Outcome::Fail:
      return "fail";
    case Outcome::Skipped:
      return "skipped";
  }
  return "?";
}

std::optional<bool> VerificationRecord::line_matches() const {
  if (!alpha_line || !nu) return std::nullopt;
  return *alpha_line == *nu;
}

std::optional<bool> VerificationRecord::oracle_alpha_matches() const {
  if (!oracle_alpha || !alpha) return std::nullopt;
  return *oracle_alpha == *alpha;
}

std::optional<bool> VerificationRecord::oracle_nu_matches() const {
  if (!oracle_nu || !nu) return std::nullopt;
  return *oracle_nu == *nu;
}

bool VerificationRecord::match() const {
  if (!witnesses_valid) return false;
  if (alpha && !alpha_matches()) return false;
  if (nu && !nu_matches()) return false;
  for (const auto& flag : {line_matches(), oracle_alpha_matches(), oracle_nu_matches()}) {
    if (flag && !*flag) return false;
  }
  return alpha.has_value() && nu.has_value();
}

Outcome VerificationRecord::outcome() const {
  if (match()) return Outcome::Pass;
  // Missing alpha with nothing contradicted: the budget ran out.
  if (!alpha && witnesses_valid && (!nu || nu_matches()) && line_matches().value_or(true) &&
      oracle_nu_matches().value_or(true)) {
    return Outcome::Skipped;
  }
  return Outcome::Fail;
}

bool VerificationRecord::same_values(const VerificationRecord& o) const {
  return spec == o.spec && predicted.alpha == o.predicted.alpha && predicted.alpha_line == o.predicted.alpha_line &&
         predicted.provenance == o.predicted.provenance && alpha == o.alpha && nu == o.nu &&
         alpha_line == o.alpha_line && oracle_alpha == o.oracle_alpha && oracle_nu == o.oracle_nu &&
         witnesses_valid == o.witnesses_valid && mis_nodes == o.mis_nodes && augmentations == o.augmentations &&
         line_nodes == o.line_nodes;
}

RunSummary summarize(const std::vector<VerificationRecord>& records) {
  RunSummary s;
  for (const auto& r : records) {
    switch (r.outcome()) {
      case Outcome::Pass:
        ++s.pass;
        break;
      case Outcome::Fail:
        ++s.fail;
        break;
      case Outcome::Skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

VerificationRecord verify_spec(const FamilySpec& spec, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord rec;
  rec.spec = spec;
  rec.predicted = predict(spec);
  const Graph g = generate(spec);
  const MisOptions options{config.budget};

  const SolveResult mis = mis_exact(g, options);
  rec.mis_nodes = mis.steps;
  if (mis.optimal()) rec.alpha = mis.value;
  rec.witnesses_valid &= is_independent_set(g, mis.witness);

  const SolveResult matching = max_matching(g);
  rec.augmentations = matching.steps;
  rec.nu = matching.value;
  rec.witnesses_valid &= is_matching(g, matching.witness);

  const SolveResult line = alpha_line(g, options);
  rec.line_nodes = line.steps;
  if (line.optimal()) rec.alpha_line = line.value;
  rec.witnesses_valid &= is_matching(g, line.witness);

  if (config.oracle) {
    if (g.vertex_count() <= kBruteForceLimit) {
      const SolveResult bf = mis_bruteforce(g);
      rec.oracle_alpha = bf.value;
      rec.witnesses_valid &= is_independent_set(g, bf.witness);
    }
    if (g.edge_count() <= kBruteForceLimit) {
      const SolveResult bf = matching_bruteforce(g);
      rec.oracle_nu = bf.value;
      rec.witnesses_valid &= is_matching(g, bf.witness);
    }
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

std::vector<VerificationRecord> run_specs(const std::vector<FamilySpec>& specs, const RunConfig& config) {
  std::vector<VerificationRecord> records(specs.size());
  std::atomic<std::size_t> next{0};
  unsigned workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, specs.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
          records[i] = verify_spec(specs[i], config);
        }
      });
    }
  }
  return records;
}

}  // namespace

std::vector<VerificationRecord> verify_family(const FamilyRange& range, const RunConfig& config) {
  return run_specs(range.specs(), config);
}

std::vector<VerificationRecord> verify_all(const RunConfig& config) {
  std::vector<FamilySpec> specs;
  for (const auto& range : config.ranges) {
    auto more = range.specs();
    specs.insert(specs.end(), more.begin(), more.end());
  }
  return run_specs(specs, config);
}

bool check_line_identity(const Graph& g, bool oracle, std::uint64_t budget, Theorem1Counterexample* failure) {
  const SolveResult line = alpha_line(g, MisOptions{budget});
  const SolveResult matching = max_matching(g);
  std::optional<int> brute;
  if (oracle && g.edge_count() <= kBruteForceLimit) brute = matching_bruteforce(g).value;

  const bool ok = line.optimal() && line.value == matching.value && (!brute || *brute == matching.value) &&
                  is_matching(g, line.witness) && is_matching(g, matching.witness);
  if (!ok && failure) {
    *failure = Theorem1Counterexample{g, line.value, matching.value, brute, write_dimacs(g)};
  }
  return ok;
}

Theorem1Summary verify_theorem1(const Theorem1Config& config) {
  Theorem1Summary summary;
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.count; ++i) {
    const Graph g = random_graph(rng, config.max_vertices, config.max_edges);
    Theorem1Counterexample failure;
    if (check_line_identity(g, config.oracle, config.budget, &failure)) {
      ++summary.pass;
    } else {
      ++summary.fail;
      summary.counterexamples.push_back(std::move(failure));
    }
  }
  return summary;
}

}  // namespace alphaline
