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

#include "symlp/matrix.h"

#include <string>
#include <utility>

#include "symlp/error.h"

namespace symlp {
namespace {

std::string Shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::Identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::FromRows(const std::vector<Vector>& rows) {
  Matrix m;
  m.rows_ = rows.size();
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  m.entries_.reserve(m.rows_ * m.cols_);
  for (const Vector& row : rows) {
    if (row.size() != m.cols_) throw DimensionMismatch("ragged matrix rows");
    m.entries_.insert(m.entries_.end(), row.begin(), row.end());
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

Matrix Matrix::Transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::StackBelow(const Matrix& other) const {
  // An empty block stacks with anything; otherwise widths must agree.
  if (other.rows_ == 0 && (other.cols_ == cols_ || other.cols_ == 0)) {
    return *this;
  }
  if (rows_ == 0 && cols_ == 0) return other;
  if (other.cols_ != cols_) {
    throw DimensionMismatch("cannot stack " + Shape(other.rows_, other.cols_) +
                            " below " + Shape(rows_, cols_));
  }
  Matrix out = *this;
  out.rows_ += other.rows_;
  out.entries_.insert(out.entries_.end(), other.entries_.begin(),
                      other.entries_.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) os << ", ";
      os << m(r, c);
    }
    os << "]";
  }
  return os << "]";
}

Matrix MatMul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + Shape(a.rows(), a.cols()) +
                            " by " + Shape(b.rows(), b.cols()));
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector MatVec(const Matrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) {
    throw DimensionMismatch("cannot multiply " + Shape(a.rows(), a.cols()) +
                            " by vector of length " +
                            std::to_string(x.size()));
  }
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = Dot(a.row(i), x);
  return out;
}

Vector VecMat(std::span<const Rational> x, const Matrix& a) {
  if (a.rows() != x.size()) {
    throw DimensionMismatch("cannot multiply row vector of length " +
                            std::to_string(x.size()) + " by " +
                            Shape(a.rows(), a.cols()));
  }
  Vector out(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += x[i] * a(i, j);
  }
  return out;
}

Rational Dot(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("dot product of vectors with lengths " +
                            std::to_string(x.size()) + " and " +
                            std::to_string(y.size()));
  }
  Rational sum;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !y[i].is_zero()) sum += x[i] * y[i];
  }
  return sum;
}

std::size_t Rank(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(pivot, j), m(rank, j));
      }
    }
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational factor = m(r, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m(r, j) -= factor * m(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

bool SolveSquare(Matrix a, Vector b, Vector* x) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw DimensionMismatch("SolveSquare needs a square system");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return false;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      std::swap(b[pivot], b[c]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational factor = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= factor * a(c, j);
      b[r] -= factor * b[c];
    }
  }
  x->assign(n, Rational());
  for (std::size_t i = 0; i < n; ++i) (*x)[i] = b[i] / a(i, i);
  return true;
}

}  // namespace symlp
