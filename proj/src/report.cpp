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

#include "alphaline/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace alphaline {
namespace {

using nlohmann::json;

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json opt_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::optional<int> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

std::string_view format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::Table:
      return "table";
    case ReportFormat::Csv:
      return "csv";
    case ReportFormat::Json:
      return "json";
  }
  return "?";
}

std::string csv(const std::vector<VerificationRecord>& records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : records) {
    const bool computed = r.alpha && r.nu;
    const std::int64_t a = r.alpha.value_or(0);
    const std::int64_t b = r.nu.value_or(0);
    out += std::string(family_name(r.spec.family)) + ',' + std::to_string(r.spec.n) + ',' + opt(r.alpha) + ',' +
           opt(r.nu) + ',' + (computed ? std::to_string(a + b) : "") + ',' + (computed ? std::to_string(a * b) : "") +
           ',' + (r.match() ? "true" : "false") + ',' + (has_m_parameter(r.spec.family) ? std::to_string(r.spec.m) : "") +
           ',' + std::to_string(r.predicted.alpha) + ',' + std::to_string(r.predicted.alpha_line) + ',' +
           opt(r.alpha_line) + ',' + opt(r.oracle_alpha) + ',' + opt(r.oracle_nu) + ',' +
           std::string(to_string(r.outcome())) + '\n';
  }
  return out;
}

json record_json(const VerificationRecord& r) {
  json j;
  j["family"] = family_name(r.spec.family);
  j["n"] = r.spec.n;
  if (has_m_parameter(r.spec.family)) j["m"] = r.spec.m;
  j["predicted"] = {{"alpha", r.predicted.alpha},
                    {"alpha_line", r.predicted.alpha_line},
                    {"sum", r.predicted.sum()},
                    {"product", r.predicted.product()},
                    {"provenance", r.predicted.provenance}};
  j["computed"] = {{"alpha", opt_json(r.alpha)}, {"nu", opt_json(r.nu)}, {"alpha_line", opt_json(r.alpha_line)}};
  j["oracle"] = {{"alpha", opt_json(r.oracle_alpha)}, {"nu", opt_json(r.oracle_nu)}};
  j["witnesses_valid"] = r.witnesses_valid;
  j["stats"] = {{"mis_nodes", r.mis_nodes}, {"augmentations", r.augmentations}, {"line_nodes", r.line_nodes}};
  j["match"] = {{"alpha", r.alpha_matches()},
                {"nu", r.nu_matches()},
                {"line_identity", opt_json(r.line_matches())},
                {"oracle_alpha", opt_json(r.oracle_alpha_matches())},
                {"oracle_nu", opt_json(r.oracle_nu_matches())},
                {"all", r.match()}};
  j["outcome"] = to_string(r.outcome());
  return j;
}

std::string json_report(const std::vector<VerificationRecord>& records, const RunConfig& config) {
  json doc;
  json ranges = json::array();
  for (const auto& range : config.ranges) {
    json r = {{"family", family_name(range.family)}, {"n", {range.n_min, range.n_max}}};
    if (has_m_parameter(range.family)) r["m"] = {range.m_min, range.m_max};
    ranges.push_back(r);
  }
  doc["run_config"] = {{"ranges", ranges},
                       {"budget", config.budget},
                       {"oracle", config.oracle},
                       {"format", format_name(config.format)},
                       {"seed", config.seed}};
  doc["records"] = json::array();
  for (const auto& r : records) doc["records"].push_back(record_json(r));
  const RunSummary s = summarize(records);
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  return doc.dump(2) + "\n";
}

std::string table(const std::vector<VerificationRecord>& records) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %6s %6s %6s %6s %6s %6s %8s %10s  %s\n", "instance", "a", "nu", "a(L)",
                "pred a", "pred nu", "sum", "product", "ms", "outcome");
  out << line;
  for (const auto& r : records) {
    const std::string sum = r.alpha && r.nu ? std::to_string(*r.alpha + *r.nu) : "-";
    const std::string product = r.alpha && r.nu ? std::to_string(static_cast<long long>(*r.alpha) * *r.nu) : "-";
    auto show = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::snprintf(line, sizeof line, "%-22s %6s %6s %6s %6lld %6lld %6s %8s %10.2f  %s\n", to_string(r.spec).c_str(),
                  show(r.alpha).c_str(), show(r.nu).c_str(), show(r.alpha_line).c_str(),
                  static_cast<long long>(r.predicted.alpha), static_cast<long long>(r.predicted.alpha_line),
                  sum.c_str(), product.c_str(), r.elapsed_ms, std::string(to_string(r.outcome())).c_str());
    out << line;
  }
  const RunSummary s = summarize(records);
  out << "\n" << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped: "
      << (s.ok() ? "OK" : "FAILED") << "\n";
  return out.str();
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "table") return ReportFormat::Table;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw ReportError("unknown report format '" + std::string(name) + "' (expected table, csv or json)");
}

std::string emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, const RunConfig& config) {
  if (records.empty()) throw ReportError("no records to report");
  switch (format) {
    case ReportFormat::Table:
      return table(records);
    case ReportFormat::Csv:
      return csv(records);
    case ReportFormat::Json:
      return json_report(records, config);
  }
  throw ReportError("unknown report format");
}

std::vector<VerificationRecord> parse_json_report(std::string_view text) {
  std::vector<VerificationRecord> out;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("records")) {
      VerificationRecord r;
      const auto family = family_from_name(j.at("family").get<std::string>());
      if (!family) throw ReportError("unknown family in report: " + j.at("family").dump());
      r.spec = FamilySpec{*family, j.at("n").get<int>(), j.value("m", 0)};
      const json& p = j.at("predicted");
      r.predicted.alpha = p.at("alpha").get<std::int64_t>();
      r.predicted.alpha_line = p.at("alpha_line").get<std::int64_t>();
      r.predicted.provenance = p.at("provenance").get<std::string>();
      const json& c = j.at("computed");
      r.alpha = opt_from(c.at("alpha"));
      r.nu = opt_from(c.at("nu"));
      r.alpha_line = opt_from(c.at("alpha_line"));
      r.oracle_alpha = opt_from(j.at("oracle").at("alpha"));
      r.oracle_nu = opt_from(j.at("oracle").at("nu"));
      r.witnesses_valid = j.at("witnesses_valid").get<bool>();
      const json& s = j.at("stats");
      r.mis_nodes = s.at("mis_nodes").get<std::uint64_t>();
      r.augmentations = s.at("augmentations").get<std::uint64_t>();
      r.line_nodes = s.at("line_nodes").get<std::uint64_t>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed report: ") + e.what());
  }
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ReportError("cannot open " + path.string() + " for writing");
  file << contents;
  if (!file.flush()) throw ReportError("write to " + path.string() + " failed");
}

}  // namespace alphaline
