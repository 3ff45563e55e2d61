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

#include "symlp/reduction.h"

#include <string>
#include <utility>

#include "symlp/error.h"

namespace symlp {
namespace {

void RequireContiguous(const OrbitPartition& orbits) {
  if (!orbits.IsContiguous()) {
    throw InvalidProblem("orbit partition " + orbits.ToString() +
                         " is not contiguous; reindex first");
  }
}

}  // namespace

Permutation CanonicalReindex(const OrbitPartition& orbits) {
  std::vector<std::size_t> images(orbits.n());
  std::size_t next = 0;
  for (const auto& block : orbits.blocks()) {
    for (std::size_t i : block) images[i] = next++;
  }
  return Permutation(std::move(images));
}

OrbitPartition ReindexPartition(const OrbitPartition& orbits,
                                const Permutation& pi) {
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(orbits.k());
  for (const auto& block : orbits.blocks()) {
    std::vector<std::size_t> moved;
    moved.reserve(block.size());
    for (std::size_t i : block) moved.push_back(pi(i));
    blocks.push_back(std::move(moved));
  }
  return OrbitPartition(orbits.n(), std::move(blocks));
}

LpProblem ReindexLp(const LpProblem& lp, const Permutation& pi) {
  // Column j of A P_g is column g(j) of A.
  return LpProblem(MatMul(lp.a(), PermutationMatrix(Inverse(pi))), lp.b(),
                   Apply(pi, lp.c()), lp.nonneg());
}

ProjectionMaps BuildProjection(const OrbitPartition& orbits) {
  RequireContiguous(orbits);
  const std::size_t n = orbits.n();
  const std::size_t k = orbits.k();
  ProjectionMaps maps{Matrix(n, n), Matrix(n, k), Matrix(k, n)};
  for (std::size_t b = 0; b < k; ++b) {
    const auto& block = orbits.blocks()[b];
    const std::size_t rep = block.front();
    for (std::size_t i : block) {
      maps.p(i, rep) = 1;
      maps.m_r(i, b) = 1;
    }
    maps.m_iota(b, rep) = 1;
  }
  return maps;
}

Substitution Substitute(const LpProblem& lp, const OrbitPartition& orbits) {
  if (orbits.n() != lp.num_vars()) {
    throw DimensionMismatch("partition of " + std::to_string(orbits.n()) +
                            " points for a problem with " +
                            std::to_string(lp.num_vars()) + " variables");
  }
  RequireContiguous(orbits);
  for (const auto& block : orbits.blocks()) {
    for (std::size_t i : block) {
      if (lp.c()[i] != lp.c()[block.front()]) {
        throw UtilityNotOrbitConstant(
            "utility coefficients differ between variables " +
            std::to_string(block.front() + 1) + " and " +
            std::to_string(i + 1) +
            " of one orbit; the partition does not come from a symmetry "
            "group");
      }
    }
  }
  const Matrix p = BuildProjection(orbits).p;
  return {VecMat(lp.c(), p), MatMul(lp.a(), p)};
}

ReducedLp Reduce(const LpProblem& lp, const OrbitPartition& orbits) {
  if (orbits.n() != lp.num_vars()) {
    throw DimensionMismatch("partition of " + std::to_string(orbits.n()) +
                            " points for a problem with " +
                            std::to_string(lp.num_vars()) + " variables");
  }
  Permutation pi = CanonicalReindex(orbits);
  OrbitPartition contiguous = ReindexPartition(orbits, pi);
  const LpProblem reindexed = ReindexLp(lp, pi);
  Substitution sub = Substitute(reindexed, contiguous);
  ProjectionMaps proj = BuildProjection(contiguous);
  LpProblem retract(MatMul(sub.a_hat, proj.m_r), lp.b(),
                    VecMat(sub.c_hat, proj.m_r), lp.nonneg());
  return ReducedLp{
      .lp = std::move(retract),
      .maps = ReductionMaps{.pi = std::move(pi),
                            .orbits = std::move(contiguous),
                            .p = std::move(proj.p),
                            .m_r = std::move(proj.m_r),
                            .m_iota = std::move(proj.m_iota)},
      .substitution = std::move(sub),
      .original_n = lp.num_vars(),
  };
}

Vector Lift(std::span<const Rational> y, const ReductionMaps& maps) {
  if (y.size() != maps.m_r.cols()) {
    throw DimensionMismatch("retract point has " + std::to_string(y.size()) +
                            " coordinates, expected " +
                            std::to_string(maps.m_r.cols()));
  }
  return Apply(Inverse(maps.pi), MatVec(maps.m_r, y));
}

Matrix LiftMatrix(const ReductionMaps& maps) {
  return MatMul(PermutationMatrix(Inverse(maps.pi)), maps.m_r);
}

Vector FixedPointOf(const LpProblem& lp,
                    std::span<const Permutation> group_elements,
                    std::span<const Rational> x, std::size_t limit) {
  if (!IsFeasible(lp, x)) {
    throw InfeasiblePoint("fixed point requested for an infeasible point");
  }
  return Barycenter(group_elements, x, limit);
}

IterateResult IterateReduce(const LpProblem& lp,
                            const IterateOptions& options) {
  IterateResult result{.final_lp = lp,
                       .lift_matrix = Matrix::Identity(lp.num_vars())};
  for (std::size_t round = 0; round < options.max_rounds; ++round) {
    const LpProblem& current = result.final_lp;
    std::vector<Permutation> symmetries;
    if (round == 0 && options.initial_generators) {
      symmetries = *options.initial_generators;
    } else if (options.detect) {
      symmetries = FullSymmetryGroup(current, options.naive_threshold,
                                     options.detection_cap);
    }
    const OrbitPartition orbits =
        OrbitsFromGenerators(symmetries, current.num_vars());
    if (orbits.k() == current.num_vars()) break;  // trivial action

    ReducedLp reduced = Reduce(current, orbits);
    result.lift_matrix = MatMul(result.lift_matrix, LiftMatrix(reduced.maps));
    result.final_lp = reduced.lp;
    result.chain.push_back(std::move(reduced));
    result.round_symmetries.push_back(std::move(symmetries));
  }
  return result;
}

}  // namespace symlp
