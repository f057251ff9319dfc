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

#include "alphaline/families.hpp"

#include <array>
#include <charconv>
#include <utility>
#include <vector>

namespace alphaline {
namespace {

constexpr std::array<Family, 10> kFamilies = {
    Family::Complete, Family::CompleteBipartite, Family::Path, Family::Cycle,  Family::Wheel,
    Family::Helm,     Family::Fan,               Family::Sun,  Family::Sunlet, Family::ArmedCrown,
};

constexpr std::array<std::string_view, 10> kNames = {
    "complete", "complete_bipartite", "path", "cycle", "wheel", "helm", "fan", "sun", "sunlet", "armed_crown",
};

using EdgeList = std::vector<std::pair<int, int>>;

void add_cycle(EdgeList& edges, int n) {
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
}

void add_path(EdgeList& edges, int n) {
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
}

void add_hub(EdgeList& edges, int hub, int n) {
  for (int i = 0; i < n; ++i) edges.emplace_back(i, hub);
}

void require(bool ok, const FamilySpec& spec, std::string_view bound) {
  if (!ok) {
    throw ParameterError(std::string(family_name(spec.family)) + " requires " + std::string(bound) + ", got " +
                         to_string(spec));
  }
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("invalid integer '" + std::string(text) + "' for " + std::string(what));
  }
  return value;
}

}  // namespace

std::span<const Family> all_families() { return kFamilies; }

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> family_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kFamilies[i];
  }
  return std::nullopt;
}

bool has_m_parameter(Family f) { return f == Family::CompleteBipartite || f == Family::ArmedCrown; }

void FamilySpec::validate() const {
  switch (family) {
    case Family::Complete:
    case Family::Fan:
      require(n >= 1, *this, "n >= 1");
      break;
    case Family::CompleteBipartite:
      require(m >= 1, *this, "m >= 1");
      require(n >= 1, *this, "n >= 1");
      break;
    case Family::Path:
      require(n >= 2, *this, "n >= 2");
      break;
    case Family::Cycle:
    case Family::Wheel:
    case Family::Helm:
    case Family::Sun:
    case Family::Sunlet:
      require(n >= 3, *this, "n >= 3");
      break;
    case Family::ArmedCrown:
      require(n >= 3, *this, "n >= 3");
      require(m >= 2, *this, "m >= 2");
      break;
  }
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += ':';
  if (has_m_parameter(spec.family)) out += "m=" + std::to_string(spec.m) + ",";
  out += "n=" + std::to_string(spec.n);
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const auto family = family_from_name(name);
  if (!family) throw ParameterError("unknown family '" + std::string(name) + "'");

  FamilySpec spec{*family, 0, 0};
  bool seen_n = false;
  bool seen_m = false;
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParameterError("expected key=value, got '" + std::string(item) + "'");
    const std::string_view key = item.substr(0, eq);
    const int value = parse_int(item.substr(eq + 1), key);
    if (key == "n") {
      spec.n = value;
      seen_n = true;
    } else if (key == "m" && has_m_parameter(spec.family)) {
      spec.m = value;
      seen_m = true;
    } else {
      throw ParameterError("unknown parameter '" + std::string(key) + "' for " + std::string(name));
    }
  }
  if (!seen_n) throw ParameterError("missing parameter n in '" + std::string(text) + "'");
  if (has_m_parameter(spec.family) && !seen_m) {
    throw ParameterError("missing parameter m in '" + std::string(text) + "'");
  }
  spec.validate();
  return spec;
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int m = spec.m;
  EdgeList edges;
  int vertices = n;
  switch (spec.family) {
    case Family::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::CompleteBipartite:
      vertices = m + n;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
      break;
    case Family::Path:
      add_path(edges, n);
      break;
    case Family::Cycle:
      add_cycle(edges, n);
      break;
    case Family::Wheel:
      vertices = n + 1;
      add_cycle(edges, n);
      add_hub(edges, n, n);
      break;
    case Family::Helm:
      vertices = 2 * n + 1;
      add_cycle(edges, n);
      add_hub(edges, n, n);
      for (int i = 0; i < n; ++i) edges.emplace_back(i, n + 1 + i);
      break;
    case Family::Fan:
      vertices = n + 1;
      add_path(edges, n);
      add_hub(edges, n, n);
      break;
    case Family::Sun:
      vertices = 2 * n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      for (int i = 0; i < n; ++i) {
        edges.emplace_back(n + i, i);
        edges.emplace_back(n + i, (i + 1) % n);
      }
      break;
    case Family::Sunlet:
      vertices = 2 * n;
      add_cycle(edges, n);
      for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
      break;
    case Family::ArmedCrown:
      vertices = n * m;
      add_cycle(edges, n);
      for (int i = 0; i < n; ++i) {
        int prev = i;
        for (int k = 0; k < m - 1; ++k) {
          const int next = n + i * (m - 1) + k;
          edges.emplace_back(prev, next);
          prev = next;
        }
      }
      break;
  }
  return Graph::build(vertices, edges);
}

}  // namespace alphaline
