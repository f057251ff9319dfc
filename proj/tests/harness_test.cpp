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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "alphaline/report.hpp"
#include "gtest/gtest.h"

namespace alphaline {
namespace {

RunConfig config_for(std::vector<FamilyRange> ranges) {
  RunConfig c;
  c.ranges = std::move(ranges);
  return c;
}

TEST(FamilyRangeText, Parse) {
  const FamilyRange w = parse_family_range("wheel:n=3..10");
  EXPECT_EQ(w.family, Family::Wheel);
  EXPECT_EQ(w.specs().size(), 8u);
  const FamilyRange ac = parse_family_range("armed_crown:m=2..5,n=3..6");
  EXPECT_EQ(ac.specs().size(), 16u);
  EXPECT_EQ(ac.specs().front(), (FamilySpec{Family::ArmedCrown, 3, 2}));
  EXPECT_EQ(parse_family_range("helm:n=4").specs().size(), 1u);
  EXPECT_THROW(parse_family_range("wheel:n=2..5"), ParameterError);
  EXPECT_THROW(parse_family_range("wheel:n=5..3"), ParameterError);
  EXPECT_THROW(parse_family_range("armed_crown:n=3..6"), ParameterError);
  EXPECT_THROW(parse_family_range("blob:n=3"), ParameterError);
}

TEST(VerifyFamily, WheelRecords) {
  const auto records = verify_family(parse_family_range("wheel:n=3..10"), config_for({}));
  ASSERT_EQ(records.size(), 8u);
  for (const auto& r : records) {
    ASSERT_TRUE(r.alpha && r.nu && r.alpha_line);
    EXPECT_TRUE(r.alpha_matches());
    EXPECT_EQ(*r.line_matches(), true);
    EXPECT_TRUE(r.witnesses_valid);
    // Only even rims satisfy the published matching-number formula.
    EXPECT_EQ(r.match(), r.spec.n % 2 == 0) << to_string(r.spec);
  }
}

TEST(VerifyFamily, SunletSumsAndProducts) {
  const auto records = verify_family(parse_family_range("sunlet:n=3..8"), config_for({}));
  ASSERT_EQ(records.size(), 6u);
  for (const auto& r : records) {
    const int n = r.spec.n;
    EXPECT_TRUE(r.match());
    EXPECT_EQ(*r.alpha + *r.nu, 2 * n);
    EXPECT_EQ(*r.alpha * *r.nu, n * n);
  }
}

TEST(VerifyFamily, ArmedCrownGrid) {
  const auto records = verify_family(parse_family_range("armed_crown:m=2..5,n=3..6"), config_for({}));
  ASSERT_EQ(records.size(), 16u);
  for (const auto& r : records) {
    EXPECT_TRUE(r.match()) << to_string(r.spec);
    const int vertices = r.spec.n * r.spec.m;
    EXPECT_EQ(r.oracle_alpha.has_value(), vertices <= 25);
    EXPECT_EQ(r.oracle_nu.has_value(), vertices <= 25);
  }
}

TEST(VerifyFamily, OracleOffSkipsBruteForce) {
  RunConfig c;
  c.oracle = false;
  const auto records = verify_family(parse_family_range("helm:n=3..5"), c);
  for (const auto& r : records) {
    EXPECT_FALSE(r.oracle_alpha);
    EXPECT_FALSE(r.oracle_nu);
    EXPECT_TRUE(r.match());
  }
}

TEST(VerifyFamily, BudgetExhaustionIsRecordedNotFatal) {
  RunConfig c;
  c.budget = 1;
  c.oracle = false;
  const auto records = verify_family(parse_family_range("complete:n=9..10"), c);
  ASSERT_EQ(records.size(), 2u);
  for (const auto& r : records) {
    EXPECT_TRUE(r.nu.has_value());
    EXPECT_FALSE(r.alpha_line.has_value());
  }
}

TEST(VerifyFamily, DeterministicAcrossThreadCounts) {
  RunConfig one = config_for({parse_family_range("helm:n=3..8"), parse_family_range("fan:n=3..8")});
  one.threads = 1;
  RunConfig many = one;
  many.threads = 8;
  const auto a = verify_all(one);
  const auto b = verify_all(many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_values(b[i]));
  EXPECT_EQ(emit_report(a, ReportFormat::Csv), emit_report(b, ReportFormat::Csv));
}

TEST(Outcomes, MismatchMarksRunFailed) {
  VerificationRecord r;
  r.spec = {Family::Wheel, 5};
  r.predicted = predict(r.spec);
  r.alpha = 2;
  r.nu = 3;
  r.alpha_line = 3;
  EXPECT_FALSE(r.match());
  EXPECT_EQ(r.outcome(), Outcome::Fail);
  const RunSummary s = summarize({r});
  EXPECT_EQ(s.fail, 1);
  EXPECT_FALSE(s.ok());

  r.nu = 2;
  EXPECT_FALSE(r.match());  // alpha(L) = 3 contradicts nu = 2
  r.alpha_line = 2;
  EXPECT_TRUE(r.match());
  r.witnesses_valid = false;
  EXPECT_FALSE(r.match());
}

TEST(Theorem1, SeededRandomRun) {
  const Theorem1Summary s = verify_theorem1({100, 10, 20, 7});
  EXPECT_EQ(s.pass, 100);
  EXPECT_EQ(s.fail, 0);
}

TEST(Theorem1, SmallCases) {
  EXPECT_TRUE(check_line_identity(Graph::build(2, {{0, 1}}), true, kDefaultNodeBudget));
  EXPECT_TRUE(check_line_identity(generate({Family::Cycle, 5}), true, kDefaultNodeBudget));
  EXPECT_EQ(alpha_line(generate({Family::Cycle, 5})).value, 2);
}

TEST(Theorem1, CounterexampleIsSerialized) {
  // Budget of one node cannot certify alpha(L) for this graph, so it is reported.
  Theorem1Counterexample failure;
  EXPECT_FALSE(check_line_identity(generate({Family::Complete, 7}), false, 1, &failure));
  EXPECT_EQ(failure.serialized.rfind("p edge 7 21\n", 0), 0u);
  EXPECT_EQ(failure.nu, 3);
}

VerificationRecord passing_wheel() {
  VerificationRecord r;
  r.spec = {Family::Wheel, 5};
  r.predicted = predict(r.spec);
  r.alpha = 2;
  r.nu = 2;
  r.alpha_line = 2;
  return r;
}

TEST(Report, CsvRow) {
  const std::string csv = emit_report({passing_wheel()}, ReportFormat::Csv);
  EXPECT_EQ(csv.rfind(std::string(kCsvHeader) + "\n", 0), 0u);
  EXPECT_NE(csv.find("\nwheel,5,2,2,4,4,true,"), std::string::npos) << csv;
}

TEST(Report, EmptyIsError) {
  EXPECT_THROW(emit_report({}, ReportFormat::Csv), ReportError);
  EXPECT_THROW(emit_report({}, ReportFormat::Json), ReportError);
  EXPECT_THROW(emit_report({}, ReportFormat::Table), ReportError);
}

TEST(Report, JsonRoundTrip) {
  RunConfig c = config_for({parse_family_range("armed_crown:m=2..3,n=3..4"), parse_family_range("wheel:n=3..4")});
  const auto records = verify_all(c);
  const std::string json = emit_report(records, ReportFormat::Json, c);
  const auto parsed = parse_json_report(json);
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_TRUE(parsed[i].same_values(records[i]));
  EXPECT_EQ(emit_report(parsed, ReportFormat::Json, c), json);
  EXPECT_NE(json.find("\"summary\""), std::string::npos);
  EXPECT_NE(json.find("\"run_config\""), std::string::npos);
}

TEST(Report, TableMentionsOutcome) {
  const std::string table = emit_report({passing_wheel()}, ReportFormat::Table);
  EXPECT_NE(table.find("wheel:n=5"), std::string::npos);
  EXPECT_NE(table.find("1 pass, 0 fail"), std::string::npos);
}

TEST(Report, FormatNames) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
  EXPECT_THROW(parse_report_format("xml"), ReportError);
}

// CLI surface: subcommands, formats and exit codes.
class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("alphaline_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  int run(const std::string& args, std::string* out = nullptr) {
    const auto capture = dir_ / "stdout.txt";
    const std::string cmd = std::string(ALPHALINE_CLI) + " " + args + " > " + capture.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (out) *out = read(capture);
    return WEXITSTATUS(status);
  }

  static std::string read(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::filesystem::path dir_;
};

TEST_F(Cli, GenerateAndSolve) {
  const auto file = dir_ / "helm.col";
  ASSERT_EQ(run("generate helm:n=3 --out " + file.string()), 0);
  EXPECT_EQ(read(file).rfind("p edge 7 9\n", 0), 0u);
  std::string out;
  EXPECT_EQ(run("solve " + file.string() + " --what alpha", &out), 0);
  EXPECT_NE(out.find("alpha: 4"), std::string::npos);
  EXPECT_EQ(run("solve " + file.string() + " --what nu", &out), 0);
  EXPECT_NE(out.find("nu: 3"), std::string::npos);
  EXPECT_EQ(run("solve " + file.string() + " --what alpha-line", &out), 0);
  EXPECT_NE(out.find("alpha-line: 3"), std::string::npos);

  const auto json = dir_ / "k4.json";
  ASSERT_EQ(run("generate complete:n=4 --format json --out " + json.string()), 0);
  EXPECT_EQ(run("solve " + json.string() + " --what nu", &out), 0);
  EXPECT_NE(out.find("perfect matching: yes"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("verify --family sunlet:n=3..5 --format csv"), 0);
  EXPECT_EQ(run("verify --family wheel:n=3..4 --format csv"), 1);
  EXPECT_EQ(run("verify --family wheel:n=2..4"), 2);
  EXPECT_EQ(run("verify"), 2);
  EXPECT_EQ(run("verify --family sunlet:n=3 --oracle maybe"), 2);
  EXPECT_EQ(run("generate dodecahedron:n=3"), 2);
  EXPECT_EQ(run("solve " + (dir_ / "nope.col").string()), 2);
  EXPECT_EQ(run("theorem1 --count 20 --max-vertices 8 --max-edges 12 --seed 3"), 0);
  EXPECT_EQ(run("theorem1 --count 1 --max-edges 30"), 2);
  EXPECT_EQ(run("bogus"), 2);
}

TEST_F(Cli, BudgetEnvironmentVariable) {
  const auto file = dir_ / "k9.col";
  ASSERT_EQ(run("generate complete:n=9 --out " + file.string()), 0);
  std::string out;
  EXPECT_EQ(run("solve " + file.string() + " --what alpha-line", &out), 0);
  EXPECT_EQ(run("solve " + file.string() + " --what alpha-line --budget 1", &out), 1);
  EXPECT_NE(out.find("budget exhausted"), std::string::npos);
  ::setenv("ALPHALINE_BUDGET", "1", 1);
  EXPECT_EQ(run("solve " + file.string() + " --what alpha-line"), 1);
  ::setenv("ALPHALINE_BUDGET", "many", 1);
  EXPECT_EQ(run("solve " + file.string() + " --what alpha-line"), 2);
  ::unsetenv("ALPHALINE_BUDGET");
}

}  // namespace
}  // namespace alphaline
