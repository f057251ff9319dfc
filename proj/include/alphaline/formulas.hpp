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

#ifndef ALPHALINE_FORMULAS_HPP
#define ALPHALINE_FORMULAS_HPP

#include <cstdint>
#include <string>

#include "alphaline/families.hpp"

namespace alphaline {

// Closed-form (alpha(G), alpha(L(G))) for a family member. alpha(L(G)) is
// nu(G), so alpha_line doubles as the predicted matching number.
struct Prediction {
  std::int64_t alpha = 0;
  std::int64_t alpha_line = 0;
  std::string provenance;

  std::int64_t sum() const { return alpha + alpha_line; }
  std::int64_t product() const { return alpha * alpha_line; }
};

// Throws ParameterError outside the family's parameter domain.
Prediction predict(const FamilySpec& spec);

// The sum and product exactly as the published identities write them,
// evaluated without going through the (alpha, alpha_line) pair. Used to
// check that each stated identity agrees with its pair.
struct StatedIdentity {
  std::int64_t sum = 0;
  std::int64_t product = 0;
};
StatedIdentity stated_identity(const FamilySpec& spec);

}  // namespace alphaline

#endif  // ALPHALINE_FORMULAS_HPP
