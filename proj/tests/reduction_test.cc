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

#include <random>

#include "gtest/gtest.h"
#include "symlp/error.h"
#include "symlp/reduction.h"
#include "symlp/simplex.h"
#include "tests/oracles.h"
#include "tests/sample_lps.h"

namespace symlp {
namespace {

using testing::FourVarLp;
using testing::TwoVarLp;

Permutation P(const char* cycles, std::size_t n) {
  return Permutation::ParseCycles(cycles, n);
}

OrbitPartition Orbits(std::size_t n, std::vector<std::vector<std::size_t>> one_based) {
  for (auto& block : one_based) {
    for (auto& i : block) --i;
  }
  return OrbitPartition(n, std::move(one_based));
}

TEST(CanonicalReindexTest, Examples) {
  EXPECT_TRUE(CanonicalReindex(Orbits(4, {{1, 2}, {3, 4}})).IsIdentity());
  EXPECT_TRUE(CanonicalReindex(OrbitPartition::Singletons(5)).IsIdentity());

  const OrbitPartition interleaved = Orbits(4, {{1, 3}, {2, 4}});
  const Permutation pi = CanonicalReindex(interleaved);
  // Original order (1,3,2,4) lands on positions (1,2,3,4).
  EXPECT_EQ(pi(0), 0u);
  EXPECT_EQ(pi(2), 1u);
  EXPECT_EQ(pi(1), 2u);
  EXPECT_EQ(pi(3), 3u);
  const OrbitPartition moved = ReindexPartition(interleaved, pi);
  EXPECT_TRUE(moved.IsContiguous());
  EXPECT_EQ(moved.ToString(), "{1,2}{3,4}");
  EXPECT_TRUE(Compose(pi, Inverse(pi)).IsIdentity());
}

TEST(BuildProjectionTest, TwoOrbitsOfTwo) {
  const ProjectionMaps maps = BuildProjection(Orbits(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(maps.p, (Matrix{{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}}));
  EXPECT_EQ(maps.m_r, (Matrix{{1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  EXPECT_EQ(maps.m_iota, (Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}}));
}

TEST(BuildProjectionTest, SingletonsGiveIdentities) {
  const ProjectionMaps maps = BuildProjection(OrbitPartition::Singletons(3));
  EXPECT_EQ(maps.p, Matrix::Identity(3));
  EXPECT_EQ(maps.m_r, Matrix::Identity(3));
  EXPECT_EQ(maps.m_iota, Matrix::Identity(3));
}

TEST(BuildProjectionTest, SingleOrbit) {
  const ProjectionMaps maps = BuildProjection(Orbits(3, {{1, 2, 3}}));
  EXPECT_EQ(maps.p, (Matrix{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
  EXPECT_EQ(maps.m_r, (Matrix{{1}, {1}, {1}}));
  EXPECT_EQ(Rank(maps.p), 1u);
}

TEST(BuildProjectionTest, RejectsNonContiguous) {
  EXPECT_THROW(BuildProjection(Orbits(4, {{1, 3}, {2, 4}})), InvalidProblem);
}

TEST(BuildProjectionTest, MapIdentitiesOnRandomPartitions) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<std::vector<std::size_t>> blocks(1 + rng() % n);
    for (std::size_t i = 0; i < n; ++i) {
      blocks[i < blocks.size() ? i : rng() % blocks.size()].push_back(i);
    }
    const OrbitPartition raw(n, blocks);
    const OrbitPartition orbits = ReindexPartition(raw, CanonicalReindex(raw));
    const ProjectionMaps maps = BuildProjection(orbits);
    const std::size_t k = orbits.k();
    EXPECT_EQ(MatMul(maps.p, maps.p), maps.p);
    EXPECT_EQ(MatMul(maps.m_iota, maps.m_r), Matrix::Identity(k));
    EXPECT_EQ(MatMul(maps.m_r, maps.m_iota), maps.p);
    EXPECT_EQ(Rank(maps.p), k);
    Vector c(n);
    for (std::size_t b = 0; b < k; ++b) {
      const Rational value = testing::RandomRational(rng, -9, 9, 5);
      for (std::size_t i : orbits.blocks()[b]) c[i] = value;
    }
    EXPECT_EQ(MatVec(maps.p, c), c);
  }
}

TEST(SubstituteTest, FourVarExample) {
  const Substitution sub = Substitute(FourVarLp(), Orbits(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(sub.c_hat, (Vector{2, 0, 4, 0}));
  EXPECT_EQ(sub.a_hat,
            (Matrix{{2, 0, 0, 0}, {0, 0, 2, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}}));
}

TEST(SubstituteTest, SingletonsAreNeutral) {
  const Substitution sub = Substitute(FourVarLp(), OrbitPartition::Singletons(4));
  EXPECT_EQ(sub.c_hat, FourVarLp().c());
  EXPECT_EQ(sub.a_hat, FourVarLp().a());
}

TEST(SubstituteTest, RejectsNonConstantUtility) {
  const LpProblem lp(Matrix{{1, 1}}, {1}, {1, 2});
  EXPECT_THROW(Substitute(lp, Orbits(2, {{1, 2}})), UtilityNotOrbitConstant);
  EXPECT_THROW(Reduce(lp, Orbits(2, {{1, 2}})), UtilityNotOrbitConstant);
  EXPECT_THROW(Substitute(FourVarLp(), OrbitPartition::Singletons(3)),
               DimensionMismatch);
}

TEST(ReduceTest, FourVarExample) {
  const ReducedLp reduced = Reduce(FourVarLp(), Orbits(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(reduced.lp.a(), (Matrix{{2, 0}, {0, 2}, {1, 1}, {1, 1}}));
  EXPECT_EQ(reduced.lp.b(), (Vector{1, 2, 3, 3}));
  EXPECT_EQ(reduced.lp.c(), (Vector{2, 4}));
  EXPECT_EQ(reduced.original_n, 4u);
  const ReductionMaps& maps = reduced.maps;
  EXPECT_EQ(MatMul(reduced.substitution.a_hat, maps.m_r), reduced.lp.a());
  EXPECT_EQ(VecMat(reduced.substitution.c_hat, maps.m_r), reduced.lp.c());
}

TEST(ReduceTest, TwoVarExample) {
  const ReducedLp reduced = Reduce(TwoVarLp(), Orbits(2, {{1, 2}}));
  EXPECT_EQ(reduced.lp.a(), (Matrix{{1}, {1}, {2}}));
  EXPECT_EQ(reduced.lp.b(),
            (Vector{Rational(5, 2), Rational(5, 2), Rational(37, 10)}));
  EXPECT_EQ(reduced.lp.c(), (Vector{2}));
}

TEST(ReduceTest, TrivialPartitionKeepsProblem) {
  const ReducedLp reduced = Reduce(FourVarLp(), OrbitPartition::Singletons(4));
  EXPECT_EQ(reduced.lp, FourVarLp());
}

TEST(ReduceTest, NonContiguousOrbitsAreReindexed) {
  // FourVarLp with columns reordered to (x1, x3, x2, x4).
  const LpProblem lp(Matrix{{1, 0, 1, 0}, {0, 1, 0, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}},
                     {1, 2, 3, 3}, {1, 2, 1, 2});
  const OrbitPartition orbits = Orbits(4, {{1, 3}, {2, 4}});
  const ReducedLp reduced = Reduce(lp, orbits);
  EXPECT_EQ(reduced.lp.c(), (Vector{2, 4}));
  EXPECT_EQ(reduced.lp.a(), (Matrix{{2, 0}, {0, 2}, {1, 1}, {1, 1}}));
  EXPECT_EQ(Lift(Vector{Rational(1, 2), 1}, reduced.maps),
            (Vector{Rational(1, 2), 1, Rational(1, 2), 1}));
}

TEST(LiftTest, Examples) {
  const ReducedLp four = Reduce(FourVarLp(), Orbits(4, {{1, 2}, {3, 4}}));
  EXPECT_EQ(Lift(Vector{Rational(1, 2), 1}, four.maps),
            (Vector{Rational(1, 2), Rational(1, 2), 1, 1}));
  EXPECT_EQ(Lift(Vector(2), four.maps), Vector(4));
  EXPECT_THROW(Lift(Vector(3), four.maps), DimensionMismatch);

  const ReducedLp two = Reduce(TwoVarLp(), Orbits(2, {{1, 2}}));
  const Vector x = Lift(Vector{Rational(37, 20)}, two.maps);
  EXPECT_EQ(x, (Vector{Rational(37, 20), Rational(37, 20)}));
  EXPECT_TRUE(IsFeasible(TwoVarLp(), x));
  EXPECT_EQ(EvaluateUtility(TwoVarLp(), x), Rational(37, 10));
  EXPECT_EQ(MatVec(LiftMatrix(two.maps), Vector{Rational(37, 20)}), x);
}

TEST(RetractTest, FeasibleRegionCorrespondence) {
  // Fix-space points map to retract-feasible points and back.
  const LpProblem lp = FourVarLp();
  const ReducedLp reduced = Reduce(lp, Orbits(4, {{1, 2}, {3, 4}}));
  std::mt19937 rng(43);
  const LpProblem sub(reduced.substitution.a_hat, lp.b(),
                      reduced.substitution.c_hat);
  int hits = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Vector y(2);
    for (auto& v : y) v = testing::RandomRational(rng, 0, 8, 4);
    const Vector x = MatVec(reduced.maps.m_r, y);  // a point of Fix
    EXPECT_EQ(IsFeasible(reduced.lp, y), IsFeasible(sub, x));
    EXPECT_EQ(IsFeasible(reduced.lp, y), IsFeasible(lp, x));
    EXPECT_EQ(MatVec(reduced.maps.m_iota, x), y);
    if (IsFeasible(reduced.lp, y)) {
      ++hits;
      EXPECT_EQ(EvaluateUtility(reduced.lp, y), EvaluateUtility(lp, x));
    }
  }
  EXPECT_GT(hits, 10);
}

TEST(FixedPointOfTest, Examples) {
  const std::vector<Permutation> s2 = {Permutation::Identity(2), P("(1 2)", 2)};
  const Vector x{Rational(5, 2), Rational(6, 5)};
  const Vector fixed = FixedPointOf(TwoVarLp(), s2, x);
  EXPECT_EQ(fixed, (Vector{Rational(37, 20), Rational(37, 20)}));
  EXPECT_EQ(EvaluateUtility(TwoVarLp(), fixed), Rational(37, 10));
  EXPECT_EQ(EvaluateUtility(TwoVarLp(), x), Rational(37, 10));

  EXPECT_EQ(FixedPointOf(TwoVarLp(), s2, fixed), fixed);

  const std::vector<Permutation> g2 = {Permutation::Identity(4),
                                       P("(1 2)(3 4)", 4)};
  const Vector y = FixedPointOf(FourVarLp(), g2, Vector{1, 0, 1, 1});
  EXPECT_EQ(y, (Vector{Rational(1, 2), Rational(1, 2), 1, 1}));
  EXPECT_EQ(EvaluateUtility(FourVarLp(), y), Rational(5));

  EXPECT_THROW(FixedPointOf(FourVarLp(), g2, Vector{1, 1, 0, 0}), InfeasiblePoint);
}

// Base problem in (y1, y2): max 2 y1 + 2 y2, y1 + 2 y2 <= 3, 2 y1 + y2 <= 3.
// y1 is spread over x1, x2, y2 is x3; the spread problem only has (1 2),
// while its retract gains (1 2) in y.
LpProblem NestedLp() {
  return LpProblem(Matrix{{Rational(1, 2), Rational(1, 2), 2}, {1, 1, 1}},
                   {3, 3}, {1, 1, 2});
}

TEST(IterateReduceTest, FourVarTakesOneRound) {
  const IterateResult result =
      IterateReduce(FourVarLp(), {.max_rounds = 5, .detect = true});
  ASSERT_EQ(result.chain.size(), 1u);
  EXPECT_EQ(result.final_lp.num_vars(), 2u);
  EXPECT_EQ(result.final_lp.c(), (Vector{2, 4}));
}

TEST(IterateReduceTest, NestedSymmetryTakesTwoRounds) {
  const LpProblem lp = NestedLp();
  EXPECT_EQ(FullSymmetryGroup(lp).size(), 2u);
  const IterateResult result =
      IterateReduce(lp, {.max_rounds = 5, .detect = true});
  ASSERT_EQ(result.chain.size(), 2u);
  EXPECT_EQ(result.chain[0].lp.num_vars(), 2u);
  EXPECT_EQ(result.final_lp.num_vars(), 1u);
  EXPECT_EQ(result.lift_matrix.rows(), 3u);
  EXPECT_EQ(result.lift_matrix.cols(), 1u);

  const SolveOutcome reduced = Solve(result.final_lp);
  const SolveOutcome direct = Solve(lp);
  ASSERT_EQ(reduced.status, SolveStatus::kOptimal);
  ASSERT_EQ(direct.status, SolveStatus::kOptimal);
  const Vector x = MatVec(result.lift_matrix, *reduced.x);
  EXPECT_TRUE(IsFeasible(lp, x));
  EXPECT_EQ(EvaluateUtility(lp, x), *direct.value);
  EXPECT_EQ(*direct.value, Rational(4));

  const IterateResult one = IterateReduce(lp, {.max_rounds = 1, .detect = true});
  EXPECT_EQ(one.chain.size(), 1u);
}

TEST(IterateReduceTest, TrivialGroupLeavesProblem) {
  const LpProblem lp(Matrix{{1, 2}}, {1}, {1, 1});
  const IterateResult result = IterateReduce(lp, {.max_rounds = 3, .detect = true});
  EXPECT_TRUE(result.chain.empty());
  EXPECT_EQ(result.final_lp, lp);
  EXPECT_EQ(result.lift_matrix, Matrix::Identity(2));
}

TEST(IterateReduceTest, SuppliedGeneratorsWithoutDetection) {
  const std::vector<Permutation> gens = {P("(1 2)(3 4)", 4)};
  const IterateResult result = IterateReduce(
      FourVarLp(), {.max_rounds = 3, .detect = false, .initial_generators = gens});
  ASSERT_EQ(result.chain.size(), 1u);
  EXPECT_EQ(result.round_symmetries[0], gens);
}

}  // namespace
}  // namespace symlp
