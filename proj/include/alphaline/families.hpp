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

#ifndef ALPHALINE_FAMILIES_HPP
#define ALPHALINE_FAMILIES_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "alphaline/graph.hpp"

namespace alphaline {

enum class Family {
  Complete,
  CompleteBipartite,
  Path,
  Cycle,
  Wheel,
  Helm,
  Fan,
  Sun,
  Sunlet,
  ArmedCrown,
};

std::span<const Family> all_families();

// CLI name, e.g. "armed_crown".
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// True for families parameterized by (m, n) rather than n alone.
bool has_m_parameter(Family f);

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  Family family = Family::Complete;
  int n = 0;
  int m = 0;  // CompleteBipartite and ArmedCrown only

  // Throws ParameterError naming the violated bound.
  void validate() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
  friend auto operator<=>(const FamilySpec&, const FamilySpec&) = default;
};

// "wheel:n=5", "armed_crown:m=3,n=5".
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family_spec(std::string_view text);

// Canonical layouts (all indices 0-based):
//   complete            all pairs on 0..n-1
//   complete_bipartite  parts {0..m-1} and {m..m+n-1}
//   path / cycle        0-1-...-(n-1) (cycle closes n-1 to 0)
//   wheel               rim cycle 0..n-1, hub n
//   helm                wheel, plus pendant n+1+i on rim vertex i
//   fan                 path 0..n-1, hub n
//   sun                 clique on 0..n-1, vertex n+i adjacent to i and (i+1) mod n
//   sunlet              cycle 0..n-1, pendant n+i on cycle vertex i
//   armed_crown         cycle 0..n-1; arm i is the path
//                       i, n+i*(m-1), n+i*(m-1)+1, ..., n+i*(m-1)+(m-2)
//                       (m vertices counting the cycle vertex)
Graph generate(const FamilySpec& spec);

}  // namespace alphaline

#endif  // ALPHALINE_FAMILIES_HPP
