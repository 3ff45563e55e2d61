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

#ifndef SYMLP_TESTS_SAMPLE_LPS_H_
#define SYMLP_TESTS_SAMPLE_LPS_H_

#include "symlp/lp_model.h"
#include "symlp/matrix.h"

namespace symlp::testing {

// Four variables; symmetric under (1 2)(3 4) with orbits {1,2}, {3,4}.
inline LpProblem FourVarLp() {
  return LpProblem(Matrix{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}},
                   {1, 2, 3, 3}, {1, 1, 2, 2});
}

// max x1 + x2 with x1 <= 2.5, x2 <= 2.5, x1 + x2 <= 3.7.
inline LpProblem TwoVarLp() {
  return LpProblem(Matrix{{1, 0}, {0, 1}, {1, 1}},
                   {Rational(5, 2), Rational(5, 2), Rational(37, 10)}, {1, 1});
}

// max x1 + x2 with x1 + x2 <= 2.
inline LpProblem SimplexCornerLp() {
  return LpProblem(Matrix{{1, 1}}, {2}, {1, 1});
}

// A single extra row over two variables.
inline LpProblem SingleRow(Rational a1, Rational a2, Rational rhs) {
  return LpProblem(Matrix{{a1, a2}}, {rhs}, {1, 1});
}

}  // namespace symlp::testing

#endif  // SYMLP_TESTS_SAMPLE_LPS_H_
