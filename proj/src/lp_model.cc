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

#include "symlp/lp_model.h"

#include <algorithm>
#include <string>
#include <utility>

#include "symlp/error.h"

namespace symlp {

LpProblem::LpProblem(Matrix a, Vector b, Vector c, bool nonneg)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), nonneg_(nonneg) {
  if (a_.rows() == 0 && a_.cols() == 0) a_ = Matrix(0, c_.size());
  if (a_.cols() != c_.size()) {
    throw DimensionMismatch("constraint matrix has " +
                            std::to_string(a_.cols()) +
                            " columns but utility vector has " +
                            std::to_string(c_.size()) + " entries");
  }
  if (a_.rows() != b_.size()) {
    throw DimensionMismatch("constraint matrix has " +
                            std::to_string(a_.rows()) +
                            " rows but right-hand side has " +
                            std::to_string(b_.size()) + " entries");
  }
  if (std::all_of(c_.begin(), c_.end(),
                  [](const Rational& v) { return v.is_zero(); })) {
    throw InvalidProblem("utility vector must have a nonzero entry");
  }
}

Rational EvaluateUtility(const LpProblem& lp, std::span<const Rational> x) {
  if (x.size() != lp.num_vars()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) +
                            " coordinates, problem has " +
                            std::to_string(lp.num_vars()) + " variables");
  }
  return Dot(lp.c(), x);
}

bool IsFeasible(const LpProblem& lp, std::span<const Rational> x) {
  if (x.size() != lp.num_vars()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) +
                            " coordinates, problem has " +
                            std::to_string(lp.num_vars()) + " variables");
  }
  if (lp.nonneg()) {
    for (const Rational& v : x) {
      if (v.sign() < 0) return false;
    }
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    if (Dot(lp.a().row(i), x) > lp.b()[i]) return false;
  }
  return true;
}

LpProblem StackSystems(const LpProblem& top, const LpProblem& bottom) {
  if (top.num_vars() != bottom.num_vars()) {
    throw DimensionMismatch("cannot stack systems over " +
                            std::to_string(top.num_vars()) + " and " +
                            std::to_string(bottom.num_vars()) + " variables");
  }
  Vector b = top.b();
  b.insert(b.end(), bottom.b().begin(), bottom.b().end());
  return LpProblem(top.a().StackBelow(bottom.a()), std::move(b), top.c(),
                   top.nonneg());
}

}  // namespace symlp
