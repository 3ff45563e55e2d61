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

#include "symlp/symmetry_detect.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "symlp/error.h"

namespace symlp {
namespace {

// A row restricted to some columns, followed by its right-hand side.
using TaggedRow = std::vector<Rational>;

std::vector<std::size_t> SortedOrder(const std::vector<TaggedRow>& rows) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     return rows[x] < rows[y];
                   });
  return order;
}

bool SameMultiset(std::vector<TaggedRow> x, std::vector<TaggedRow> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

class Backtracker {
 public:
  explicit Backtracker(const LpProblem& lp)
      : lp_(lp),
        n_(lp.num_vars()),
        m_(lp.num_rows()),
        image_(n_, 0),
        taken_(n_, false) {
    column_keys_.reserve(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      Vector column = lp.a().column(j);
      std::sort(column.begin(), column.end());
      column_keys_.push_back(std::move(column));
    }
    // Rows of A restricted to columns 0..depth-1, grown one column per level.
    original_prefix_.assign(m_, TaggedRow());
    permuted_prefix_.assign(m_, TaggedRow());
  }

  std::vector<Permutation> Run() {
    Recurse(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  bool Compatible(std::size_t j, std::size_t target) const {
    return lp_.c()[j] == lp_.c()[target] &&
           column_keys_[j] == column_keys_[target];
  }

  // Multisets of (A restricted to columns 0..depth, b) and of
  // (A restricted to image columns, b) must coincide.
  bool PrefixRowsMatch() const {
    std::vector<TaggedRow> lhs(m_);
    std::vector<TaggedRow> rhs(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      lhs[i] = original_prefix_[i];
      lhs[i].push_back(lp_.b()[i]);
      rhs[i] = permuted_prefix_[i];
      rhs[i].push_back(lp_.b()[i]);
    }
    return SameMultiset(std::move(lhs), std::move(rhs));
  }

  void Recurse(std::size_t depth) {
    if (depth == n_) {
      Permutation g(image_);
      if (IsLpSymmetry(lp_, g).verdict) found_.push_back(std::move(g));
      return;
    }
    for (std::size_t target = 0; target < n_; ++target) {
      if (taken_[target] || !Compatible(depth, target)) continue;
      taken_[target] = true;
      image_[depth] = target;
      // Column `depth` of A P_g is column g(depth) of A.
      for (std::size_t i = 0; i < m_; ++i) {
        original_prefix_[i].push_back(lp_.a()(i, depth));
        permuted_prefix_[i].push_back(lp_.a()(i, target));
      }
      if (PrefixRowsMatch()) Recurse(depth + 1);
      for (std::size_t i = 0; i < m_; ++i) {
        original_prefix_[i].pop_back();
        permuted_prefix_[i].pop_back();
      }
      taken_[target] = false;
    }
  }

  const LpProblem& lp_;
  std::size_t n_;
  std::size_t m_;
  std::vector<Vector> column_keys_;
  std::vector<TaggedRow> original_prefix_;
  std::vector<TaggedRow> permuted_prefix_;
  std::vector<std::size_t> image_;
  std::vector<bool> taken_;
  std::vector<Permutation> found_;
};

}  // namespace

std::string_view ToString(SymmetryReason reason) {
  switch (reason) {
    case SymmetryReason::kOk:
      return "Ok";
    case SymmetryReason::kUtilityVectorMoved:
      return "UtilityVectorMoved";
    case SymmetryReason::kNoRowMatching:
      return "NoRowMatching";
  }
  return "Unknown";
}

std::optional<Permutation> FindRowPermutation(const Matrix& a,
                                              std::span<const Rational> b,
                                              const Permutation& g) {
  if (a.rows() != b.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(a.rows()) +
                            " rows, right-hand side has " +
                            std::to_string(b.size()));
  }
  if (a.cols() != g.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(a.cols()) +
                            " columns, permutation acts on " +
                            std::to_string(g.size()) + " points");
  }
  const std::size_t m = a.rows();
  std::vector<TaggedRow> original(m);
  std::vector<TaggedRow> permuted(m);
  for (std::size_t i = 0; i < m; ++i) {
    original[i].assign(a.row(i).begin(), a.row(i).end());
    original[i].push_back(b[i]);
    permuted[i].reserve(a.cols() + 1);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      permuted[i].push_back(a(i, g(j)));
    }
    permuted[i].push_back(b[i]);
  }
  const std::vector<std::size_t> original_order = SortedOrder(original);
  const std::vector<std::size_t> permuted_order = SortedOrder(permuted);
  // P_sigma sends row i of A P_g to row sigma(i).
  std::vector<std::size_t> sigma(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (permuted[permuted_order[k]] != original[original_order[k]]) {
      return std::nullopt;
    }
    sigma[permuted_order[k]] = original_order[k];
  }
  return Permutation(std::move(sigma));
}

SymmetryReport IsLpSymmetry(const LpProblem& lp, const Permutation& g) {
  if (g.size() != lp.num_vars()) {
    throw DimensionMismatch("permutation acts on " + std::to_string(g.size()) +
                            " points, problem has " +
                            std::to_string(lp.num_vars()) + " variables");
  }
  SymmetryReport report{.candidate = g};
  if (Apply(g, lp.c()) != lp.c()) {
    report.reason = SymmetryReason::kUtilityVectorMoved;
    return report;
  }
  report.witness_sigma = FindRowPermutation(lp.a(), lp.b(), g);
  if (!report.witness_sigma) {
    report.reason = SymmetryReason::kNoRowMatching;
    return report;
  }
  report.verdict = true;
  report.reason = SymmetryReason::kOk;
  return report;
}

std::vector<SymmetryReport> VerifyGroup(const LpProblem& lp,
                                        std::span<const Permutation> gens) {
  std::vector<SymmetryReport> reports;
  reports.reserve(gens.size());
  for (const Permutation& g : gens) reports.push_back(IsLpSymmetry(lp, g));
  return reports;
}

bool AllVerified(std::span<const SymmetryReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const SymmetryReport& r) { return r.verdict; });
}

std::vector<Permutation> FullSymmetryGroup(const LpProblem& lp,
                                           std::size_t naive_threshold,
                                           std::size_t cap) {
  if (lp.num_vars() > cap) throw DimensionTooLarge(lp.num_vars(), cap);
  std::vector<Permutation> group = Backtracker(lp).Run();
  if (lp.num_vars() <= naive_threshold && group != NaiveSymmetryGroup(lp)) {
    throw std::logic_error(
        "symmetry backtracking disagrees with exhaustive enumeration");
  }
  return group;
}

std::vector<Permutation> NaiveSymmetryGroup(const LpProblem& lp) {
  std::vector<std::size_t> images(lp.num_vars());
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> group;
  do {
    Permutation g(images);
    if (IsLpSymmetry(lp, g).verdict) group.push_back(std::move(g));
  } while (std::next_permutation(images.begin(), images.end()));
  return group;  // next_permutation visits image arrays in sorted order
}

}  // namespace symlp
