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

#include "symlp/simplex.h"

#include <algorithm>
#include <utility>
#include <vector>

#include "symlp/error.h"
#include "symlp/matrix.h"

namespace symlp {
namespace {

// Dense tableau for  T x = rhs, x >= 0  with an explicit basis. The
// objective row holds reduced costs d_j = c_B B^-1 a_j - c_j of a
// maximization; the tableau is optimal when no allowed d_j is negative.
class Tableau {
 public:
  Tableau(Matrix t, Vector rhs, std::vector<std::size_t> basis)
      : t_(std::move(t)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.rows(); }
  std::size_t cols() const { return t_.cols(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Vector& rhs() const { return rhs_; }
  const Rational& at(std::size_t r, std::size_t c) const { return t_(r, c); }
  std::size_t pivots() const { return pivots_; }

  void SetObjective(const Vector& cost) {
    cost_ = cost;
    reduced_.assign(cols(), Rational());
    objective_ = Rational();
    for (std::size_t j = 0; j < cols(); ++j) reduced_[j] = -cost_[j];
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = cost_[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < cols(); ++j) reduced_[j] += cb * t_(r, j);
      objective_ += cb * rhs_[r];
    }
  }

  const Rational& objective() const { return objective_; }

  // Runs primal simplex over the columns flagged in `allowed`. Returns
  // false when the objective is unbounded.
  bool Optimize(const std::vector<bool>& allowed, PivotRule rule) {
    while (true) {
      const std::size_t enter = ChooseEntering(allowed, rule);
      if (enter == cols()) return true;
      const std::size_t leave = ChooseLeaving(enter);
      if (leave == rows()) return false;
      Pivot(leave, enter);
    }
  }

  void Pivot(std::size_t r, std::size_t c) {
    const Rational inv = Rational(1) / t_(r, c);
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!t_(r, j).is_zero()) t_(r, j) *= inv;
    }
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_(i, c).is_zero()) continue;
      const Rational factor = t_(i, c);
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!t_(r, j).is_zero()) t_(i, j) -= factor * t_(r, j);
      }
      rhs_[i] -= factor * rhs_[r];
    }
    if (!reduced_.empty() && !reduced_[c].is_zero()) {
      const Rational factor = reduced_[c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!t_(r, j).is_zero()) reduced_[j] -= factor * t_(r, j);
      }
      objective_ -= factor * rhs_[r];
    }
    basis_[r] = c;
    ++pivots_;
  }

  // Removes row r; used for redundant rows left after phase I.
  void DropRow(std::size_t r) {
    std::vector<Vector> kept;
    Vector rhs;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r) continue;
      kept.emplace_back(t_.row(i).begin(), t_.row(i).end());
      rhs.push_back(rhs_[i]);
      basis.push_back(basis_[i]);
    }
    const std::size_t n = cols();
    t_ = kept.empty() ? Matrix(0, n) : Matrix::FromRows(kept);
    rhs_ = std::move(rhs);
    basis_ = std::move(basis);
  }

 private:
  std::size_t ChooseEntering(const std::vector<bool>& allowed,
                             PivotRule rule) const {
    std::size_t best = cols();
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!allowed[j] || reduced_[j].sign() >= 0) continue;
      if (rule == PivotRule::kBland) return j;
      if (best == cols() || reduced_[j] < reduced_[best]) best = j;
    }
    return best;
  }

  // Minimum ratio test; ties go to the smallest basic variable index.
  std::size_t ChooseLeaving(std::size_t enter) const {
    std::size_t best = rows();
    Rational best_ratio;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (t_(i, enter).sign() <= 0) continue;
      Rational ratio = rhs_[i] / t_(i, enter);
      if (best == rows() || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::move(ratio);
      }
    }
    return best;
  }

  Matrix t_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
  Vector cost_;
  Vector reduced_;
  Rational objective_;
  std::size_t pivots_ = 0;
};

SolveOutcome SolveNonneg(const LpProblem& lp, PivotRule rule) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();

  std::vector<std::size_t> artificial_rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.b()[i].sign() < 0) artificial_rows.push_back(i);
  }
  const std::size_t num_art = artificial_rows.size();
  // Columns: x (n), slacks (m), artificials (num_art).
  const std::size_t width = n + m + num_art;
  Matrix t(m, width);
  Vector rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.b()[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = flip ? -lp.a()(i, j) : lp.a()(i, j);
    }
    t(i, n + i) = flip ? -1 : 1;
    rhs[i] = flip ? -lp.b()[i] : lp.b()[i];
    basis[i] = n + i;
  }
  for (std::size_t k = 0; k < num_art; ++k) {
    const std::size_t row = artificial_rows[k];
    t(row, n + m + k) = 1;
    basis[row] = n + m + k;
  }
  Tableau tableau(std::move(t), std::move(rhs), std::move(basis));
  SolveOutcome outcome;

  if (num_art > 0) {
    Vector phase1(width);
    for (std::size_t k = 0; k < num_art; ++k) phase1[n + m + k] = -1;
    tableau.SetObjective(phase1);
    tableau.Optimize(std::vector<bool>(width, true), rule);
    if (tableau.objective().sign() < 0) {
      outcome.status = SolveStatus::kInfeasible;
      outcome.pivot_count = tableau.pivots();
      return outcome;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < tableau.rows();) {
      if (tableau.basis()[r] < n + m) {
        ++r;
        continue;
      }
      std::size_t col = 0;
      while (col < n + m && tableau.at(r, col).is_zero()) ++col;
      if (col == n + m) {
        tableau.DropRow(r);
      } else {
        tableau.Pivot(r, col);
        ++r;
      }
    }
  }

  Vector phase2(width);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.c()[j];
  tableau.SetObjective(phase2);
  std::vector<bool> allowed(width, true);
  for (std::size_t k = 0; k < num_art; ++k) allowed[n + m + k] = false;
  const bool bounded = tableau.Optimize(allowed, rule);
  outcome.pivot_count = tableau.pivots();
  if (!bounded) {
    outcome.status = SolveStatus::kUnbounded;
    return outcome;
  }
  Vector x(n);
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    if (tableau.basis()[r] < n) x[tableau.basis()[r]] = tableau.rhs()[r];
  }
  outcome.status = SolveStatus::kOptimal;
  outcome.value = EvaluateUtility(lp, x);
  outcome.x = std::move(x);
  return outcome;
}

// Iterates over all k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void ForEachSubset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "Optimal";
    case SolveStatus::kInfeasible:
      return "Infeasible";
    case SolveStatus::kUnbounded:
      return "Unbounded";
  }
  return "Unknown";
}

SolveOutcome Solve(const LpProblem& lp, PivotRule rule) {
  if (lp.nonneg()) return SolveNonneg(lp, rule);
  const std::size_t n = lp.num_vars();
  Matrix a(lp.num_rows(), 2 * n);
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = lp.a()(i, j);
      a(i, n + j) = -lp.a()(i, j);
    }
  }
  Vector c(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    c[j] = lp.c()[j];
    c[n + j] = -lp.c()[j];
  }
  SolveOutcome split =
      SolveNonneg(LpProblem(std::move(a), lp.b(), std::move(c), true), rule);
  if (split.status == SolveStatus::kOptimal) {
    Vector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = (*split.x)[j] - (*split.x)[n + j];
    split.value = EvaluateUtility(lp, x);
    split.x = std::move(x);
  }
  return split;
}

BruteForceResult BruteForceSolve(const LpProblem& lp) {
  if (!lp.nonneg()) {
    throw InvalidProblem("vertex enumeration needs x >= 0");
  }
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  // Constraint rows: A x <= b, then -x_j <= 0.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t i = 0; i < m; ++i) {
    rows.emplace_back(lp.a().row(i).begin(), lp.a().row(i).end());
    rhs.push_back(lp.b()[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = -1;
    rows.push_back(std::move(e));
    rhs.push_back(Rational());
  }

  BruteForceResult result;
  ForEachSubset(rows.size(), n, [&](const std::vector<std::size_t>& pick) {
    Matrix sys(n, n);
    Vector sys_rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) sys(r, j) = rows[pick[r]][j];
      sys_rhs[r] = rhs[pick[r]];
    }
    Vector x;
    if (!SolveSquare(std::move(sys), std::move(sys_rhs), &x)) return;
    if (!IsFeasible(lp, x)) return;
    Rational value = EvaluateUtility(lp, x);
    if (!result.value || value > *result.value) result.value = std::move(value);
  });
  if (!result.value) return result;  // x >= 0 makes the region pointed

  // Unbounded iff some extreme ray d of {A d <= 0, d >= 0, sum d = 1} has
  // c^t d > 0. The normalization row is always tight, so pick n - 1 more.
  bool unbounded = false;
  ForEachSubset(rows.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
    if (unbounded) return;
    Matrix sys(n, n);
    Vector sys_rhs(n);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      for (std::size_t j = 0; j < n; ++j) sys(r, j) = rows[pick[r]][j];
    }
    for (std::size_t j = 0; j < n; ++j) sys(n - 1, j) = 1;
    sys_rhs[n - 1] = 1;
    Vector d;
    if (!SolveSquare(std::move(sys), std::move(sys_rhs), &d)) return;
    for (const Rational& v : d) {
      if (v.sign() < 0) return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (Dot(lp.a().row(i), d).sign() > 0) return;
    }
    if (Dot(lp.c(), d).sign() > 0) unbounded = true;
  });
  if (unbounded) {
    result.status = SolveStatus::kUnbounded;
    result.value.reset();
    return result;
  }
  result.status = SolveStatus::kOptimal;
  return result;
}

bool Certify(const LpProblem& lp, const SolveOutcome& outcome) {
  if (outcome.status == SolveStatus::kOptimal) {
    if (!outcome.x || !outcome.value) return false;
    if (outcome.x->size() != lp.num_vars()) return false;
    if (!IsFeasible(lp, *outcome.x)) return false;
    if (EvaluateUtility(lp, *outcome.x) != *outcome.value) return false;
  } else if (outcome.x || outcome.value) {
    return false;
  }
  if (lp.num_vars() <= kCertifyMaxVars && lp.num_rows() <= kCertifyMaxRows &&
      lp.nonneg()) {
    const BruteForceResult oracle = BruteForceSolve(lp);
    if (oracle.status != outcome.status) return false;
    if (oracle.status == SolveStatus::kOptimal &&
        *oracle.value != *outcome.value) {
      return false;
    }
  }
  return true;
}

}  // namespace symlp
