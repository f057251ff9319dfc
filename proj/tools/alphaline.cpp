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

// alphaline: generate family graphs, solve alpha / nu / alpha(L(G)), and
// verify the closed-form family identities against exact solvers.
//
// Exit codes: 0 success (every record matches), 1 mismatch or budget
// exhaustion, 2 configuration or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alphaline/families.hpp"
#include "alphaline/graph_io.hpp"
#include "alphaline/harness.hpp"
#include "alphaline/report.hpp"
#include "alphaline/solvers.hpp"

namespace {

using namespace alphaline;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitConfig = 2;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("ALPHALINE_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0) return value;
    } catch (const std::exception&) {
    }
    throw ParameterError(std::string("ALPHALINE_BUDGET must be a positive integer, got '") + env + "'");
  }
  return kDefaultNodeBudget;
}

GraphFormat infer_format(const std::string& path, const std::string& explicit_format) {
  if (!explicit_format.empty()) return parse_graph_format(explicit_format);
  return path.ends_with(".json") ? GraphFormat::Json : GraphFormat::Dimacs;
}

void print_witness(const SolveResult& r, const Graph& g, bool edges) {
  std::cout << (edges ? "edges:" : "vertices:");
  for (int x : r.witness) {
    if (edges) {
      const Edge& e = g.edges()[static_cast<std::size_t>(x)];
      std::cout << ' ' << e.u << '-' << e.v;
    } else {
      std::cout << ' ' << x;
    }
  }
  std::cout << '\n';
}

struct GenerateArgs {
  std::string spec;
  std::string out;
  std::string format = "dimacs";
};

int run_generate(const GenerateArgs& args) {
  const Graph g = generate(parse_family_spec(args.spec));
  const std::string text = parse_graph_format(args.format) == GraphFormat::Json ? write_json_graph(g) : write_dimacs(g);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file(args.out, text);
  }
  return kExitOk;
}

struct SolveArgs {
  std::string path;
  std::string what = "alpha";
  std::string format;
  std::optional<std::uint64_t> budget;
};

int run_solve(const SolveArgs& args) {
  const LoadedGraph loaded = load_graph(args.path, infer_format(args.path, args.format));
  for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << '\n';
  const Graph& g = loaded.graph;
  const MisOptions options{args.budget.value_or(default_budget())};

  SolveResult r;
  bool edges = true;
  if (args.what == "alpha") {
    r = mis_exact(g, options);
    edges = false;
  } else if (args.what == "nu") {
    r = max_matching(g);
  } else if (args.what == "alpha-line") {
    r = alpha_line(g, options);
  } else {
    std::cerr << "error: --what must be alpha, nu or alpha-line\n";
    return kExitConfig;
  }
  const bool valid = edges ? is_matching(g, r.witness) : is_independent_set(g, r.witness);
  std::cout << args.what << ": " << r.value << (r.optimal() ? "" : " (budget exhausted; lower bound only)") << '\n';
  print_witness(r, g, edges);
  if (args.what == "nu") {
    std::cout << "perfect matching: " << (is_perfect_matching_size(g, r.value) ? "yes" : "no") << '\n';
  }
  std::cout << "steps: " << r.steps << "\nelapsed_ms: " << r.elapsed.count() << '\n';
  if (!valid) {
    std::cerr << "error: witness failed verification\n";
    return kExitMismatch;
  }
  return r.optimal() ? kExitOk : kExitMismatch;
}

struct VerifyArgs {
  std::vector<std::string> families;
  bool all = false;
  std::string oracle = "on";
  std::string format = "table";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 0;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  RunConfig config;
  if (args.all) config.ranges = default_grids();
  for (const auto& f : args.families) config.ranges.push_back(parse_family_range(f));
  if (config.ranges.empty()) {
    std::cerr << "error: pass --all or at least one --family\n";
    return kExitConfig;
  }
  if (args.oracle != "on" && args.oracle != "off") {
    std::cerr << "error: --oracle must be on or off\n";
    return kExitConfig;
  }
  config.oracle = args.oracle == "on";
  config.format = parse_report_format(args.format);
  config.seed = args.seed;
  config.budget = args.budget.value_or(default_budget());
  config.threads = args.threads;

  const auto records = verify_all(config);
  const std::string report = emit_report(records, config.format, config);
  if (args.out.empty()) {
    std::cout << report;
  } else {
    write_file(args.out, report);
  }
  const RunSummary summary = summarize(records);
  if (!args.out.empty() || config.format != ReportFormat::Table) {
    std::cerr << summary.pass << " pass, " << summary.fail << " fail, " << summary.skipped << " skipped\n";
  }
  return summary.ok() && summary.skipped == 0 ? kExitOk : kExitMismatch;
}

struct Theorem1Args {
  Theorem1Config config;
  std::string oracle = "on";
};

int run_theorem1(Theorem1Args args) {
  if (args.oracle != "on" && args.oracle != "off") {
    std::cerr << "error: --oracle must be on or off\n";
    return kExitConfig;
  }
  args.config.oracle = args.oracle == "on";
  if (args.config.oracle && args.config.max_edges > kBruteForceLimit) {
    std::cerr << "error: --max-edges above " << kBruteForceLimit << " requires --oracle off\n";
    return kExitConfig;
  }
  if (args.config.count < 0 || args.config.max_vertices < 1 || args.config.max_edges < 0) {
    std::cerr << "error: count, max-vertices and max-edges must be non-negative (max-vertices >= 1)\n";
    return kExitConfig;
  }
  const Theorem1Summary s = verify_theorem1(args.config);
  for (const auto& c : s.counterexamples) {
    std::cout << "counterexample: alpha(L)=" << c.alpha_line << " nu=" << c.nu;
    if (c.nu_bruteforce) std::cout << " nu(brute force)=" << *c.nu_bruteforce;
    std::cout << '\n' << c.serialized;
  }
  std::cout << s.pass << "/" << (s.pass + s.fail) << " pass\n";
  return s.fail == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence numbers, matching numbers and line-graph identities"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a family graph as DIMACS or JSON");
  generate_cmd->add_option("spec", gen.spec, "Family spec, e.g. wheel:n=5 or armed_crown:m=3,n=5")->required();
  generate_cmd->add_option("--out", gen.out, "Output file (default: stdout)");
  generate_cmd->add_option("--format", gen.format, "dimacs | json")->check(CLI::IsMember({"dimacs", "json"}));

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one graph file");
  solve_cmd->add_option("file", solve.path, "Graph file")->required();
  solve_cmd->add_option("--what", solve.what, "alpha | nu | alpha-line")
      ->check(CLI::IsMember({"alpha", "nu", "alpha-line"}));
  solve_cmd->add_option("--format", solve.format, "dimacs | json (default: by extension)")
      ->check(CLI::IsMember({"dimacs", "json"}));
  solve_cmd->add_option("--budget", solve.budget, "Node budget for the independent-set search");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the family formulas against the solvers");
  auto* family_opt = verify_cmd->add_option("--family", verify.families, "Family range, e.g. wheel:n=3..10");
  verify_cmd->add_flag("--all", verify.all, "Sweep every family over its default grid")->excludes(family_opt);
  verify_cmd->add_option("--oracle", verify.oracle, "on | off");
  verify_cmd->add_option("--format", verify.format, "table | csv | json");
  verify_cmd->add_option("--seed", verify.seed, "Recorded in the run config");
  verify_cmd->add_option("--budget", verify.budget, "Node budget for the independent-set search");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_option("--out", verify.out, "Report file (default: stdout)");

  Theorem1Args t1;
  auto* t1_cmd = app.add_subcommand("theorem1", "Check alpha(L(G)) = nu(G) on random graphs");
  t1_cmd->add_option("--count", t1.config.count, "Number of random graphs");
  t1_cmd->add_option("--max-vertices", t1.config.max_vertices, "Vertex bound");
  t1_cmd->add_option("--max-edges", t1.config.max_edges, "Edge bound");
  t1_cmd->add_option("--seed", t1.config.seed, "RNG seed");
  t1_cmd->add_option("--oracle", t1.oracle, "on | off");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*generate_cmd) return run_generate(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*verify_cmd) return run_verify(verify);
    if (*t1_cmd) {
      t1.config.budget = default_budget();
      return run_theorem1(t1);
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ReportError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
