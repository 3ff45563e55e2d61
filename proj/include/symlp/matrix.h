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

#ifndef SYMLP_MATRIX_H_
#define SYMLP_MATRIX_H_

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "symlp/rational.h"

namespace symlp {

using Vector = std::vector<Rational>;

// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  // Builds from nested rows; all rows must have the same length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix Identity(std::size_t n);
  // Throws DimensionMismatch on ragged input.
  static Matrix FromRows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  Matrix Transpose() const;
  // Appends the rows of `other` below this matrix.
  Matrix StackBelow(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Exact product. Throws DimensionMismatch unless a.cols() == b.rows().
Matrix MatMul(const Matrix& a, const Matrix& b);
// a * x for a column vector x.
Vector MatVec(const Matrix& a, std::span<const Rational> x);
// x^t * a for a row vector x.
Vector VecMat(std::span<const Rational> x, const Matrix& a);
Rational Dot(std::span<const Rational> x, std::span<const Rational> y);

// Rank by exact Gaussian elimination.
std::size_t Rank(Matrix m);

// Solves the square system a * x = b. Returns false when a is singular.
bool SolveSquare(Matrix a, Vector b, Vector* x);

}  // namespace symlp

#endif  // SYMLP_MATRIX_H_
