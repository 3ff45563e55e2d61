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
#include <stdexcept>

#include "gtest/gtest.h"
#include "symlp/error.h"
#include "symlp/matrix.h"
#include "symlp/rational.h"
#include "tests/oracles.h"

namespace symlp {
namespace {

TEST(RationalTest, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::Parse("2.5"), Rational(5, 2));
  EXPECT_EQ(Rational::Parse("3.7"), Rational(37, 10));
  EXPECT_EQ(Rational::Parse("0"), Rational(0));
  EXPECT_EQ(Rational::Parse("0").denominator(), "1");
  EXPECT_EQ(Rational::Parse("-.75"), Rational(-3, 4));
  EXPECT_EQ(Rational::Parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::Parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::Parse("+4."), Rational(4));
}

TEST(RationalTest, ParsesFractionsInLowestTerms) {
  const Rational r = Rational::Parse("10/4");
  EXPECT_EQ(r.numerator(), "5");
  EXPECT_EQ(r.denominator(), "2");
  const Rational neg = Rational::Parse("-6/9");
  EXPECT_EQ(neg.numerator(), "-2");
  EXPECT_EQ(neg.denominator(), "3");
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", ".", "-", "1/",
                          "/2", "2e3", "1 2", "0x10"}) {
    EXPECT_THROW(Rational::Parse(bad), ParseError) << bad;
  }
}

TEST(RationalTest, HandlesBigValuesWithoutOverflow) {
  const Rational big = Rational::Parse("123456789012345678901234567890");
  EXPECT_EQ((big * big / big), big);
  EXPECT_EQ(Rational::Parse("0.000000000000000000000000001") *
                Rational::Parse("1000000000000000000000000000"),
            Rational(1));
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(RationalTest, Formatting) {
  EXPECT_EQ(Rational(5, 2).ToString(), "5/2");
  EXPECT_EQ(Rational(4).ToString(), "4");
  EXPECT_EQ(Rational(4).ToFractionString(), "4/1");
  EXPECT_EQ(Rational(0).ToFractionString(), "0/1");
}

TEST(RationalTest, FieldIdentitiesHoldExactly) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::RandomRational(rng, -1000, 1000, 97);
    const Rational b = testing::RandomRational(rng, -1000, 1000, 89);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
    }
    EXPECT_EQ(Rational::Parse(a.ToString()), a);
  }
}

TEST(MatrixTest, MultipliesFourVarExample) {
  const Matrix a{{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  const Matrix p{{1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 1, 0}};
  const Matrix expected{{2, 0, 0, 0}, {0, 0, 2, 0}, {1, 0, 1, 0}, {1, 0, 1, 0}};
  EXPECT_EQ(MatMul(a, p), expected);
  EXPECT_EQ(MatMul(Matrix::Identity(4), a), a);
  EXPECT_EQ(MatMul(a, Matrix::Identity(4)), a);
}

TEST(MatrixTest, InclusionTimesRetractionIsIdentity) {
  const Matrix m_iota{{1, 0, 0, 0}, {0, 0, 1, 0}};
  const Matrix m_r{{1, 0}, {1, 0}, {0, 1}, {0, 1}};
  EXPECT_EQ(MatMul(m_iota, m_r), Matrix::Identity(2));
}

TEST(MatrixTest, DimensionMismatchThrows) {
  EXPECT_THROW(MatMul(Matrix(2, 3), Matrix(2, 3)), DimensionMismatch);
  EXPECT_THROW(MatVec(Matrix(2, 3), Vector(2)), DimensionMismatch);
  EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionMismatch);
}

TEST(MatrixTest, MultiplicationIsAssociative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 5);
  auto random_matrix = [&](std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = testing::RandomRational(rng, -9, 9, 7);
      }
    }
    return m;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = dim(rng), q = dim(rng), r = dim(rng), s = dim(rng);
    const Matrix a = random_matrix(p, q);
    const Matrix b = random_matrix(q, r);
    const Matrix c = random_matrix(r, s);
    EXPECT_EQ(MatMul(MatMul(a, b), c), MatMul(a, MatMul(b, c)));
  }
}

TEST(MatrixTest, RankAndSolve) {
  EXPECT_EQ(Rank(Matrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(Rank(Matrix::Identity(3)), 3u);
  EXPECT_EQ(Rank(Matrix(2, 2)), 0u);
  Vector x;
  ASSERT_TRUE(SolveSquare(Matrix{{2, 1}, {1, 3}}, {3, 5}, &x));
  EXPECT_EQ(x, (Vector{Rational(4, 5), Rational(7, 5)}));
  EXPECT_FALSE(SolveSquare(Matrix{{1, 2}, {2, 4}}, {1, 1}, &x));
}

TEST(MatrixTest, StackBelow) {
  const Matrix top{{1, 2}};
  EXPECT_EQ(top.StackBelow(Matrix(0, 2)), top);
  EXPECT_EQ(top.StackBelow(Matrix{{3, 4}}), (Matrix{{1, 2}, {3, 4}}));
  EXPECT_THROW(top.StackBelow(Matrix{{1, 2, 3}}), DimensionMismatch);
}

}  // namespace
}  // namespace symlp
