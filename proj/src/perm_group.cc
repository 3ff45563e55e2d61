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

#include "symlp/perm_group.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <utility>

#include "symlp/error.h"

namespace symlp {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

void CheckSameSize(const Permutation& g, std::size_t n) {
  if (g.size() != n) {
    throw InvalidPermutation("permutation on " + std::to_string(g.size()) +
                             " points used where " + std::to_string(n) +
                             " were expected");
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidPermutation("image array is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::ParseCycles(std::string_view text, std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError(what, 0, pos + 1);
  };

  skip_space();
  if (text.substr(pos).starts_with("id")) {
    pos += 2;
    skip_space();
    if (pos != text.size()) throw fail("unexpected text after 'id'");
    return Permutation(std::move(images));
  }

  while (true) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) {
        throw ParseError("expected a point index", 0, start + 1);
      }
      std::size_t value = 0;
      bool overflow = false;
      for (std::size_t i = start; i < pos; ++i) {
        if (value > n) overflow = true;
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      }
      if (overflow || value < 1 || value > n) {
        throw ParseError("point " + std::string(text.substr(start, pos - start)) +
                             " outside 1.." + std::to_string(n),
                         0, start + 1);
      }
      const std::size_t point = value - 1;
      if (used[point]) {
        throw ParseError("point " + std::to_string(value) + " repeated", 0,
                         start + 1);
      }
      used[point] = true;
      cycle.push_back(point);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::IsIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation Compose(const Permutation& g, const Permutation& h) {
  CheckSameSize(h, g.size());
  std::vector<std::size_t> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) images[i] = h(g(i));
  return Permutation(std::move(images));
}

Permutation Inverse(const Permutation& g) {
  std::vector<std::size_t> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) images[g(i)] = i;
  return Permutation(std::move(images));
}

Matrix PermutationMatrix(const Permutation& g) {
  Matrix m(g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(g(i), i) = 1;
  return m;
}

Vector Apply(const Permutation& g, std::span<const Rational> x) {
  if (x.size() != g.size()) {
    throw DimensionMismatch("permutation on " + std::to_string(g.size()) +
                            " points applied to vector of length " +
                            std::to_string(x.size()));
  }
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[g(i)] = x[i];
  return out;
}

OrbitPartition::OrbitPartition(std::size_t n,
                               std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n, n) {
  for (auto& block : blocks_) {
    if (block.empty()) throw InvalidProblem("empty orbit block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t i : blocks_[b]) {
      if (i >= n_) {
        throw InvalidProblem("orbit member " + std::to_string(i + 1) +
                             " outside 1.." + std::to_string(n_));
      }
      if (block_of_[i] != n_) {
        throw InvalidProblem("orbit blocks overlap at " +
                             std::to_string(i + 1));
      }
      block_of_[i] = b;
      ++covered;
    }
  }
  if (covered != n_) throw InvalidProblem("orbit blocks do not cover 1..n");
}

OrbitPartition OrbitPartition::Singletons(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return OrbitPartition(n, std::move(blocks));
}

std::vector<std::size_t> OrbitPartition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  for (const auto& block : blocks_) out.push_back(block.size());
  return out;
}

std::vector<std::size_t> OrbitPartition::offsets() const {
  std::vector<std::size_t> out;
  out.reserve(blocks_.size());
  std::size_t total = 0;
  for (const auto& block : blocks_) {
    total += block.size();
    out.push_back(total);
  }
  return out;
}

bool OrbitPartition::IsContiguous() const {
  for (const auto& block : blocks_) {
    if (block.back() - block.front() + 1 != block.size()) return false;
  }
  return true;
}

std::string OrbitPartition::ToString() const {
  std::string out;
  for (const auto& block : blocks_) {
    out += "{";
    for (std::size_t j = 0; j < block.size(); ++j) {
      if (j != 0) out += ",";
      out += std::to_string(block[j] + 1);
    }
    out += "}";
  }
  return out;
}

OrbitPartition OrbitsFromGenerators(std::span<const Permutation> gens,
                                    std::size_t n) {
  DisjointSet sets(n);
  for (const Permutation& g : gens) {
    CheckSameSize(g, n);
    for (std::size_t i = 0; i < n; ++i) sets.Union(i, g(i));
  }
  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[sets.Find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> blocks;
  for (auto& block : by_root) {
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return OrbitPartition(n, std::move(blocks));
}

std::vector<Permutation> GroupClosure(std::span<const Permutation> gens,
                                      std::size_t n, std::size_t limit) {
  for (const Permutation& g : gens) CheckSameSize(g, n);
  std::set<Permutation> elements = {Permutation::Identity(n)};
  if (elements.size() > limit) throw ClosureLimitExceeded(limit);
  std::deque<Permutation> frontier = {Permutation::Identity(n)};
  while (!frontier.empty()) {
    const Permutation current = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = Compose(current, g);
      if (elements.insert(next).second) {
        if (elements.size() > limit) throw ClosureLimitExceeded(limit);
        frontier.push_back(std::move(next));
      }
    }
  }
  return {elements.begin(), elements.end()};
}

std::set<Vector> OrbitOfPoint(std::span<const Permutation> gens,
                              std::span<const Rational> x,
                              std::size_t limit) {
  for (const Permutation& g : gens) CheckSameSize(g, x.size());
  Vector start(x.begin(), x.end());
  std::set<Vector> orbit = {start};
  std::deque<Vector> frontier = {std::move(start)};
  while (!frontier.empty()) {
    const Vector current = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Vector next = Apply(g, current);
      if (orbit.insert(next).second) {
        if (orbit.size() > limit) throw ClosureLimitExceeded(limit);
        frontier.push_back(std::move(next));
      }
    }
  }
  return orbit;
}

Vector Barycenter(std::span<const Permutation> gens,
                  std::span<const Rational> x, std::size_t limit) {
  const std::set<Vector> orbit = OrbitOfPoint(gens, x, limit);
  Vector sum(x.size());
  for (const Vector& y : orbit) {
    for (std::size_t i = 0; i < y.size(); ++i) sum[i] += y[i];
  }
  const Rational count(static_cast<std::int64_t>(orbit.size()));
  for (Rational& v : sum) v /= count;
  return sum;
}

SignedPermutation DecomposeSignedPermutation(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NotSignedPermutation("matrix is not square");
  }
  const std::size_t n = m.rows();
  const Rational one(1);
  const Rational minus_one(-1);
  std::vector<std::size_t> images(n);
  std::vector<int> signs(n, 0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t hit = n;
    for (std::size_t row = 0; row < n; ++row) {
      const Rational& v = m(row, col);
      if (v.is_zero()) continue;
      if (hit != n || (v != one && v != minus_one)) {
        throw NotSignedPermutation("column " + std::to_string(col + 1) +
                                   " is not a signed unit vector");
      }
      hit = row;
    }
    if (hit == n) {
      throw NotSignedPermutation("column " + std::to_string(col + 1) +
                                 " is zero");
    }
    if (signs[hit] != 0) {
      throw NotSignedPermutation("columns collide in row " +
                                 std::to_string(hit + 1));
    }
    signs[hit] = m(hit, col).sign();
    images[col] = hit;
  }
  return {std::move(signs), Permutation(std::move(images))};
}

Matrix ComposeSignedPermutation(const SignedPermutation& sp) {
  if (sp.signs.size() != sp.p.size()) {
    throw DimensionMismatch("sign vector and permutation sizes differ");
  }
  Matrix m = PermutationMatrix(sp.p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(r, c) *= Rational(sp.signs[r]);
    }
  }
  return m;
}

}  // namespace symlp
