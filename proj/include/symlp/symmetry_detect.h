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

#ifndef SYMLP_SYMMETRY_DETECT_H_
#define SYMLP_SYMMETRY_DETECT_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "symlp/lp_model.h"
#include "symlp/matrix.h"
#include "symlp/perm_group.h"

namespace symlp {

inline constexpr std::size_t kDetectionDimensionCap = 10;

enum class SymmetryReason { kOk, kUtilityVectorMoved, kNoRowMatching };

std::string_view ToString(SymmetryReason reason);

// Outcome of checking one candidate column permutation g against an LP.
// verdict, reason == kOk and a present witness_sigma always agree. When
// present, the witness satisfies P_sigma A P_g = A and b^sigma = b.
struct SymmetryReport {
  Permutation candidate;
  bool verdict = false;
  std::optional<Permutation> witness_sigma;
  SymmetryReason reason = SymmetryReason::kNoRowMatching;
};

// Finds a row permutation sigma with P_sigma (A P_g) = A and b^sigma = b.
// Each row i of A P_g, tagged with b_i, must land on an identical tagged row
// of A; identical rows are matched in index order. Throws DimensionMismatch
// on inconsistent shapes.
std::optional<Permutation> FindRowPermutation(const Matrix& a,
                                              std::span<const Rational> b,
                                              const Permutation& g);

// g is a symmetry of the LP iff c^g = c and a row witness exists.
SymmetryReport IsLpSymmetry(const LpProblem& lp, const Permutation& g);

// One report per generator; failures are reported, not thrown.
std::vector<SymmetryReport> VerifyGroup(const LpProblem& lp,
                                        std::span<const Permutation> gens);
bool AllVerified(std::span<const SymmetryReport> reports);

// Every symmetry of the LP, sorted by image array.
//
// Backtracks over column images. Column j may only go to a column j' with
// c_j = c_j' and the same multiset of entries, and every partial assignment
// must keep the tagged rows, restricted to the assigned columns, equal as
// multisets. Complete assignments are accepted only via IsLpSymmetry.
//
// For n <= naive_threshold the result is cross-checked against plain n!
// enumeration and a disagreement throws std::logic_error. Throws
// DimensionTooLarge when n exceeds `cap`.
std::vector<Permutation> FullSymmetryGroup(
    const LpProblem& lp, std::size_t naive_threshold = 0,
    std::size_t cap = kDetectionDimensionCap);

// All g in S_n passing IsLpSymmetry, by enumeration. Sorted.
std::vector<Permutation> NaiveSymmetryGroup(const LpProblem& lp);

}  // namespace symlp

#endif  // SYMLP_SYMMETRY_DETECT_H_
