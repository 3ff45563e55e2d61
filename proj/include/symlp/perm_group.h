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

#ifndef SYMLP_PERM_GROUP_H_
#define SYMLP_PERM_GROUP_H_

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symlp/matrix.h"
#include "symlp/rational.h"

namespace symlp {

inline constexpr std::size_t kDefaultClosureLimit = 1'000'000;

// A bijection on {0, ..., n-1}. Text forms (cycle notation) are 1-based.
//
// Action convention, used everywhere in the library:
//   * g acts on basis vectors by e_i -> e_{g(i)}, so (x^g)[g(i)] = x[i];
//   * PermutationMatrix(g) is P_g with P_g e_i = e_{g(i)}, hence
//     P_g x = x^g and column j of A P_g is column g(j) of A;
//   * Compose(g, h) applies g first, then h (right action, x^{gh} =
//     (x^g)^h), hence P_{Compose(g, h)} = P_h P_g.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless `images` is a bijection on [0, n).
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation Identity(std::size_t n);

  // Parses a product of disjoint cycles such as "(1 2)(3 4)". "()", "id"
  // and the empty string denote the identity. Throws ParseError on
  // malformed text, repeated indices or indices outside [1, n].
  static Permutation ParseCycles(std::string_view text, std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool IsIdentity() const;
  // Disjoint-cycle form with 1-based entries; "()" for the identity.
  std::string ToCycleString() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// g then h. Throws InvalidPermutation on size mismatch.
Permutation Compose(const Permutation& g, const Permutation& h);
Permutation Inverse(const Permutation& g);

Matrix PermutationMatrix(const Permutation& g);

// x^g, i.e. PermutationMatrix(g) * x.
Vector Apply(const Permutation& g, std::span<const Rational> x);

// The orbits of {0, ..., n-1} under a group. Blocks are sorted internally
// and ordered by their smallest member.
class OrbitPartition {
 public:
  OrbitPartition() = default;
  // Throws InvalidProblem unless the blocks are nonempty, pairwise disjoint
  // and cover [0, n).
  OrbitPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  static OrbitPartition Singletons(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t k() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const {
    return blocks_;
  }
  // n_i per block.
  std::vector<std::size_t> sizes() const;
  // Running totals s_i = n_1 + ... + n_i; the last entry equals n.
  std::vector<std::size_t> offsets() const;
  // Index of the block containing element i.
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }

  // True when every block is a run of consecutive indices.
  bool IsContiguous() const;

  std::string ToString() const;

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// Connected components of i ~ g(i) over all generators (union-find).
// Throws InvalidPermutation if a generator is not on n points.
OrbitPartition OrbitsFromGenerators(std::span<const Permutation> gens,
                                    std::size_t n);

// Every element of the group generated by `gens`, identity included, sorted
// by image array. Throws ClosureLimitExceeded once more than `limit`
// elements have been found.
std::vector<Permutation> GroupClosure(std::span<const Permutation> gens,
                                      std::size_t n,
                                      std::size_t limit = kDefaultClosureLimit);

// x^G, closed under the generators' coordinate action.
std::set<Vector> OrbitOfPoint(std::span<const Permutation> gens,
                              std::span<const Rational> x,
                              std::size_t limit = kDefaultClosureLimit);

// (1/|x^G|) * sum of the orbit of x.
Vector Barycenter(std::span<const Permutation> gens,
                  std::span<const Rational> x,
                  std::size_t limit = kDefaultClosureLimit);

// M = D * P_p with D = diag(signs).
struct SignedPermutation {
  std::vector<int> signs;
  Permutation p;
};

// Factors a signed permutation matrix. Throws NotSignedPermutation if some
// column is not +-e_i or two columns share a row.
SignedPermutation DecomposeSignedPermutation(const Matrix& m);
Matrix ComposeSignedPermutation(const SignedPermutation& sp);

}  // namespace symlp

#endif  // SYMLP_PERM_GROUP_H_
