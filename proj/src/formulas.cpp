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

#include "alphaline/formulas.hpp"

#include <algorithm>

namespace alphaline {
namespace {

std::int64_t floor_half(std::int64_t x) { return x / 2; }
std::int64_t ceil_half(std::int64_t x) { return (x + 1) / 2; }
bool odd(std::int64_t x) { return x % 2 != 0; }

constexpr const char* kArmNote = " [arm = path on m vertices incl. its cycle vertex; interpretation]";

}  // namespace

Prediction predict(const FamilySpec& spec) {
  spec.validate();
  const std::int64_t n = spec.n;
  const std::int64_t m = spec.m;
  switch (spec.family) {
    case Family::Complete:
      return {1, floor_half(n), "complete: alpha = 1, nu = floor(n/2)"};
    case Family::CompleteBipartite:
      return {std::max(m, n), std::min(m, n), "complete bipartite: alpha = max(m,n), nu = min(m,n)"};
    case Family::Path:
      return {ceil_half(n), floor_half(n), "path: alpha = ceil(n/2), nu = floor(n/2)"};
    case Family::Cycle:
      return {floor_half(n), floor_half(n), "cycle: alpha = floor(n/2), nu = floor(n/2)"};
    case Family::Wheel:
      return {floor_half(n), floor_half(n), "wheel: alpha = floor(n/2), nu = floor(n/2)"};
    case Family::Helm:
      return {n + 1, n, "helm: alpha = n+1, nu = n"};
    case Family::Fan:
      if (odd(n)) return {(n + 1) / 2, (n + 1) / 2, "fan, n odd: alpha = nu = (n+1)/2"};
      return {n / 2, n / 2, "fan, n even: alpha = nu = n/2"};
    case Family::Sun:
      return {n, n, "complete sun: alpha = n, nu = n"};
    case Family::Sunlet:
      return {n, n, "sunlet: alpha = n, nu = n"};
    case Family::ArmedCrown:
      if (odd(m) && odd(n)) {
        return {floor_half(n) * (m + 1) / 2 + ceil_half(n) * (m - 1) / 2, floor_half(n) + n * (m - 1) / 2,
                std::string("armed crown, m and n odd: alpha = floor(n/2)(m+1)/2 + ceil(n/2)(m-1)/2, "
                            "nu = floor(n/2) + n(m-1)/2") +
                    kArmNote};
      }
      return {n * m / 2, n * m / 2, std::string("armed crown, m or n even: alpha = nu = nm/2") + kArmNote};
  }
  throw ParameterError("unsupported family " + to_string(spec));
}

StatedIdentity stated_identity(const FamilySpec& spec) {
  spec.validate();
  const std::int64_t n = spec.n;
  const std::int64_t m = spec.m;
  switch (spec.family) {
    case Family::Complete:
      return {floor_half(n) + 1, floor_half(n)};
    case Family::CompleteBipartite:
      return {m + n, m * n};
    case Family::Path:
      return {ceil_half(n) + floor_half(n), ceil_half(n) * floor_half(n)};
    case Family::Cycle:
      return {2 * floor_half(n), floor_half(n) * floor_half(n)};
    case Family::Wheel:
      return {2 * floor_half(n), floor_half(n) * floor_half(n)};
    case Family::Helm:
      return {2 * n + 1, n * (n + 1)};
    case Family::Fan:
      if (odd(n)) return {n + 1, (n + 1) * (n + 1) / 4};
      return {n, n * n / 4};
    case Family::Sun:
    case Family::Sunlet:
      return {2 * n, n * n};
    case Family::ArmedCrown:
      if (odd(m) && odd(n)) {
        // Regrouped sum as displayed, and the product of the two bracketed factors.
        const std::int64_t sum = floor_half(n) * ((m + 1) / 2 + 1) + ((m - 1) / 2) * (n + ceil_half(n));
        const std::int64_t product = (floor_half(n) * ((m + 1) / 2) + ceil_half(n) * ((m - 1) / 2)) *
                                     (floor_half(n) + n * ((m - 1) / 2));
        return {sum, product};
      }
      return {m * n, n * n * m * m / 4};
  }
  throw ParameterError("unsupported family " + to_string(spec));
}

}  // namespace alphaline
