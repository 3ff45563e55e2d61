// Copyright 2026 The symlp Authors
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

#ifndef SYMLP_SIMPLEX_H_
#define SYMLP_SIMPLEX_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "symlp/lp_model.h"
#include "symlp/rational.h"

namespace symlp {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view ToString(SolveStatus status);

enum class PivotRule {
  kBland,    // smallest improving index; never cycles
  kDantzig,  // most negative reduced cost, ties by index
};

// When status is kOptimal, x and value are present, value == c^t x and x is
// feasible, all exactly.
struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Vector> x;
  std::optional<Rational> value;
  std::size_t pivot_count = 0;
};

// Two-phase primal simplex on a dense exact tableau. Phase I adds one
// artificial variable per row with b_i < 0 and drives every artificial out
// of the basis before phase II. Problems with nonneg() == false are solved
// through the split x = x+ - x-.
SolveOutcome Solve(const LpProblem& lp, PivotRule rule = PivotRule::kBland);

// Optimum found by enumerating every basic solution. Only sensible for a
// handful of variables and rows. Throws InvalidProblem unless nonneg().
struct BruteForceResult {
  SolveStatus status = SolveStatus::kInfeasible;
  std::optional<Rational> value;
};
BruteForceResult BruteForceSolve(const LpProblem& lp);

inline constexpr std::size_t kCertifyMaxVars = 3;
inline constexpr std::size_t kCertifyMaxRows = 6;

// Re-checks an outcome from scratch. For kOptimal: x present, feasible and
// value == c^t x. When n <= 3 and m <= 6 the status and optimal value must
// also agree with BruteForceSolve.
bool Certify(const LpProblem& lp, const SolveOutcome& outcome);

}  // namespace symlp

#endif  // SYMLP_SIMPLEX_H_
