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

#ifndef SYMLP_LP_MODEL_H_
#define SYMLP_LP_MODEL_H_

#include <cstddef>
#include <span>

#include "symlp/matrix.h"
#include "symlp/rational.h"

namespace symlp {

// max c^t x  s.t.  A x <= b, and x >= 0 when nonneg() is set.
//
// Sign constraints are a flag rather than rows of A: symmetries permute the
// rows of A, and x >= 0 must never take part in that row matching.
class LpProblem {
 public:
  // Throws DimensionMismatch if the shapes disagree and InvalidProblem if c
  // is the zero vector. A system with zero rows is legal.
  LpProblem(Matrix a, Vector b, Vector c, bool nonneg = true);

  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }
  const Vector& c() const { return c_; }
  bool nonneg() const { return nonneg_; }

  std::size_t num_vars() const { return c_.size(); }
  std::size_t num_rows() const { return b_.size(); }

  friend bool operator==(const LpProblem&, const LpProblem&) = default;

 private:
  Matrix a_;
  Vector b_;
  Vector c_;
  bool nonneg_;
};

// c^t x. Throws DimensionMismatch if x has the wrong length.
Rational EvaluateUtility(const LpProblem& lp, std::span<const Rational> x);

// True iff A x <= b componentwise and, for nonneg problems, x >= 0.
bool IsFeasible(const LpProblem& lp, std::span<const Rational> x);

// Stacks the inequality systems (A over A', b over b'). The utility vector
// and sign flag come from `top`. Any common symmetry of both parts is a
// symmetry of the result.
LpProblem StackSystems(const LpProblem& top, const LpProblem& bottom);

}  // namespace symlp

#endif  // SYMLP_LP_MODEL_H_
