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

#ifndef SYMLP_PIPELINE_H_
#define SYMLP_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "symlp/error.h"
#include "symlp/lp_model.h"
#include "symlp/perm_group.h"
#include "symlp/simplex.h"
#include "symlp/symmetry_detect.h"

namespace symlp {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOptimal = 0,
  kExitError = 1,
  kExitInfeasible = 2,
  kExitUnbounded = 3,
  kExitVerificationFailure = 4,
  kExitParseError = 5,
};

// A supplied generator is not a symmetry, or a lifted solution failed its
// recomputation in the original coordinates.
class VerificationFailed : public Error {
 public:
  VerificationFailed(const std::string& message,
                     std::vector<SymmetryReport> reports = {});
  const std::vector<SymmetryReport>& reports() const { return reports_; }

 private:
  std::vector<SymmetryReport> reports_;
};

// Closure limit from SYMLP_CLOSURE_LIMIT, else kDefaultClosureLimit. Throws
// Error when the variable is set but not a positive integer.
std::size_t ClosureLimitFromEnv();

// "sha256:<hex>" of the given bytes.
std::string Sha256Digest(std::string_view bytes);

struct RunOptions {
  // Verified, then used instead of detection for the first round.
  std::optional<std::vector<Permutation>> generators;
  std::size_t rounds = 1;
  PivotRule rule = PivotRule::kBland;
  std::size_t naive_threshold = 0;
  std::size_t detection_cap = kDetectionDimensionCap;
};

struct RunReport {
  std::string input_digest;
  bool generators_supplied = false;
  // Supplied generators, or every detected group element.
  std::vector<Permutation> generators;
  std::vector<SymmetryReport> verification;
  // First-round orbits in original coordinates.
  OrbitPartition orbits;
  std::size_t k = 0;
  std::size_t rounds = 0;
  std::vector<std::size_t> dimensions;  // n, then k after each round
  LpProblem reduced_lp;
  SolveOutcome reduced_outcome;
  std::optional<Vector> lifted_x;
  // Recomputed against the original problem, never copied from the solver.
  bool lifted_feasible = false;
  std::optional<Rational> lifted_value;
};

// Verify (or detect), reduce, solve the retract, lift and re-verify.
// Throws VerificationFailed if a supplied generator is not a symmetry or the
// lifted point fails its recomputation, and DimensionTooLarge when
// detection is needed above the cap.
RunReport RunPipeline(const LpProblem& lp, const RunOptions& options,
                      std::string input_digest = "");

int ExitCodeFor(const RunReport& report);

// Rationals are written as "p/q" strings.
nlohmann::json ToJson(const Rational& r);
nlohmann::json ToJson(std::span<const Rational> v);
nlohmann::json ToJson(const LpProblem& lp);
nlohmann::json ToJson(const SymmetryReport& report);
nlohmann::json ToJson(const RunReport& report);

// Human-readable summary of a report.
std::string FormatReport(const RunReport& report);

}  // namespace symlp

#endif  // SYMLP_PIPELINE_H_
