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

#ifndef SYMLP_LP_IO_H_
#define SYMLP_LP_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symlp/lp_model.h"
#include "symlp/matrix.h"
#include "symlp/perm_group.h"

namespace symlp {

// In-memory form of an LPS file:
//
//   name <string>            # optional
//   maximize
//   <q> <q> ... <q>          # n utility coefficients
//   subject-to
//   <q> ... <q> <= <q>       # n coefficients then the right-hand side
//   nonneg true|false        # optional, default true
//
// where <q> is an integer, p/q or a finite decimal. '#' starts a comment.
struct LpFileDocument {
  LpProblem lp;
  std::optional<std::string> name;
};

// Throws ParseError (with line and column) on bad syntax, relations other
// than "<=", ragged rows, or an all-zero objective.
LpFileDocument ParseLpDocument(std::string_view text);
LpProblem ParseLpFile(std::string_view text);

// Inverse of ParseLpDocument: ParseLpFile(EmitLpFile(lp)) == lp.
std::string EmitLpFile(const LpProblem& lp,
                       const std::optional<std::string>& name = std::nullopt);

// One cycle-notation permutation per non-blank, non-comment line. Errors
// carry the line number.
std::vector<Permutation> ParseGeneratorsFile(std::string_view text,
                                             std::size_t n);

// Whitespace-separated rationals, one matrix row per line.
Matrix ParseMatrixFile(std::string_view text);

// Reads a whole file. Throws Error if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace symlp

#endif  // SYMLP_LP_IO_H_
