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

#ifndef ALPHALINE_REPORT_HPP
#define ALPHALINE_REPORT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphaline/harness.hpp"

namespace alphaline {

ReportFormat parse_report_format(std::string_view name);

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// CSV columns, in order:
//   family,n,alpha,alpha_line,sum,product,match,
//   m,predicted_alpha,predicted_alpha_line,line_mis,oracle_alpha,oracle_nu,outcome
// alpha and alpha_line are the computed alpha(G) and nu(G) (= alpha(L(G)));
// line_mis is alpha(L(G)) from the independent-set solver on L(G).
// Missing values are empty fields.
inline constexpr std::string_view kCsvHeader =
    "family,n,alpha,alpha_line,sum,product,match,m,predicted_alpha,predicted_alpha_line,line_mis,oracle_alpha,"
    "oracle_nu,outcome";

// Throws ReportError on an empty record list. CSV and JSON output is a pure
// function of the records and config; the table includes timings.
std::string emit_report(const std::vector<VerificationRecord>& records, ReportFormat format,
                        const RunConfig& config = {});

// Inverse of the JSON report.
std::vector<VerificationRecord> parse_json_report(std::string_view text);

void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace alphaline

#endif  // ALPHALINE_REPORT_HPP
