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

#ifndef SYMLP_REDUCTION_H_
#define SYMLP_REDUCTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symlp/lp_model.h"
#include "symlp/matrix.h"
#include "symlp/perm_group.h"
#include "symlp/symmetry_detect.h"

namespace symlp {

// The maps attached to one orbit partition, all in reindexed coordinates
// where every orbit is a contiguous block.
//
//   p      n x n  block diagonal; each block has a first column of ones
//   m_r    n x k  column i is the indicator of orbit i
//   m_iota k x n  row i picks the first index of orbit i
//
// with p p = p, m_iota m_r = I_k, m_r m_iota = p and rank(p) = k.
struct ProjectionMaps {
  Matrix p;
  Matrix m_r;
  Matrix m_iota;
};

struct ReductionMaps {
  // Original index i moves to position pi(i).
  Permutation pi;
  // Orbits in reindexed coordinates (contiguous blocks).
  OrbitPartition orbits;
  Matrix p;
  Matrix m_r;
  Matrix m_iota;
};

// Result of the substitution step: c_hat^t = c^t P and A_hat = A P.
struct Substitution {
  Vector c_hat;
  Matrix a_hat;
};

// The k-variable retract  max (m_r^t c_hat)^t y  s.t.  (A_hat m_r) y <= b.
struct ReducedLp {
  LpProblem lp;
  ReductionMaps maps;
  Substitution substitution;
  std::size_t original_n = 0;
};

// Sends every orbit to a contiguous block. Blocks keep the partition's order
// (by smallest member); inside a block the original order is kept.
Permutation CanonicalReindex(const OrbitPartition& orbits);

// The partition seen in reindexed coordinates.
OrbitPartition ReindexPartition(const OrbitPartition& orbits,
                                const Permutation& pi);

// Reorders the variables: column pi(j) of the result is column j of lp.
LpProblem ReindexLp(const LpProblem& lp, const Permutation& pi);

// Throws InvalidProblem if the partition is not contiguous.
ProjectionMaps BuildProjection(const OrbitPartition& orbits);

// Expects `lp` already reindexed so `orbits` is contiguous. Throws
// UtilityNotOrbitConstant if c differs inside some orbit, InvalidProblem if
// the partition is not contiguous and DimensionMismatch on size mismatch.
Substitution Substitute(const LpProblem& lp, const OrbitPartition& orbits);

// Full pipeline for orbits given in the lp's own coordinates.
ReducedLp Reduce(const LpProblem& lp, const OrbitPartition& orbits);

// Maps a retract point back to the original coordinates: pi^-1(m_r y).
Vector Lift(std::span<const Rational> y, const ReductionMaps& maps);

// The same map as a matrix (original n x k).
Matrix LiftMatrix(const ReductionMaps& maps);

// Barycenter of the orbit of a feasible x under the listed group elements.
// The result is fixed by the group, feasible and has the utility of x.
// Throws InfeasiblePoint if x is not feasible.
Vector FixedPointOf(const LpProblem& lp,
                    std::span<const Permutation> group_elements,
                    std::span<const Rational> x,
                    std::size_t limit = kDefaultClosureLimit);

struct IterateOptions {
  std::size_t max_rounds = 1;
  // Detect symmetries of each successive retract.
  bool detect = true;
  // Used instead of detection in the first round when present; the caller
  // is responsible for having verified them.
  std::optional<std::vector<Permutation>> initial_generators;
  std::size_t naive_threshold = 0;
  std::size_t detection_cap = kDetectionDimensionCap;
};

struct IterateResult {
  std::vector<ReducedLp> chain;
  // Per round: the supplied generators or every detected group element.
  std::vector<std::vector<Permutation>> round_symmetries;
  // Problem after the last round; the input when the chain is empty.
  LpProblem final_lp;
  // original n x final k; lifting is lift_matrix * y.
  Matrix lift_matrix;
};

// Reduces, then keeps reducing each retract while its detected symmetry
// group is nontrivial and max_rounds allows. Propagates DimensionTooLarge
// from detection.
IterateResult IterateReduce(const LpProblem& lp, const IterateOptions& options);

}  // namespace symlp

#endif  // SYMLP_REDUCTION_H_
