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

#include "symlp/pipeline.h"

#include <openssl/evp.h>

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "symlp/reduction.h"

namespace symlp {

VerificationFailed::VerificationFailed(const std::string& message,
                                       std::vector<SymmetryReport> reports)
    : Error(message), reports_(std::move(reports)) {}

std::size_t ClosureLimitFromEnv() {
  const char* raw = std::getenv("SYMLP_CLOSURE_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultClosureLimit;
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw Error("SYMLP_CLOSURE_LIMIT must be a positive integer, got '" +
                std::string(text) + "'");
  }
  return value;
}

std::string Sha256Digest(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xf];
  }
  return out;
}

RunReport RunPipeline(const LpProblem& lp, const RunOptions& options,
                      std::string input_digest) {
  RunReport report{.input_digest = std::move(input_digest),
                   .orbits = OrbitPartition::Singletons(lp.num_vars()),
                   .k = lp.num_vars(),
                   .reduced_lp = lp};

  IterateOptions iterate{.max_rounds = options.rounds,
                         .detect = true,
                         .naive_threshold = options.naive_threshold,
                         .detection_cap = options.detection_cap};
  if (options.generators) {
    report.generators_supplied = true;
    report.generators = *options.generators;
    report.verification = VerifyGroup(lp, report.generators);
    if (!AllVerified(report.verification)) {
      throw VerificationFailed("supplied generator is not a symmetry",
                               report.verification);
    }
    iterate.initial_generators = report.generators;
    // Without rounds beyond the first, nothing needs detecting.
    iterate.detect = options.rounds > 1;
  }

  IterateResult reduced = IterateReduce(lp, iterate);
  report.dimensions.push_back(lp.num_vars());
  if (!reduced.chain.empty()) {
    if (!options.generators) report.generators = reduced.round_symmetries[0];
    const ReducedLp& first = reduced.chain.front();
    // Back to original coordinates.
    report.orbits = ReindexPartition(first.maps.orbits, Inverse(first.maps.pi));
    report.k = first.lp.num_vars();
    for (const ReducedLp& stage : reduced.chain) {
      report.dimensions.push_back(stage.lp.num_vars());
    }
  } else if (!options.generators) {
    report.generators = {Permutation::Identity(lp.num_vars())};
  }
  report.rounds = reduced.chain.size();
  report.reduced_lp = reduced.final_lp;
  report.reduced_outcome = Solve(reduced.final_lp, options.rule);

  if (report.reduced_outcome.status == SolveStatus::kOptimal) {
    Vector x = MatVec(reduced.lift_matrix, *report.reduced_outcome.x);
    report.lifted_feasible = IsFeasible(lp, x);
    report.lifted_value = EvaluateUtility(lp, x);
    report.lifted_x = std::move(x);
    if (!report.lifted_feasible ||
        *report.lifted_value != *report.reduced_outcome.value) {
      throw VerificationFailed(
          "lifted solution failed recomputation in original coordinates");
    }
  }
  return report;
}

int ExitCodeFor(const RunReport& report) {
  switch (report.reduced_outcome.status) {
    case SolveStatus::kOptimal:
      return kExitOptimal;
    case SolveStatus::kInfeasible:
      return kExitInfeasible;
    case SolveStatus::kUnbounded:
      return kExitUnbounded;
  }
  return kExitError;
}

nlohmann::json ToJson(const Rational& r) { return r.ToFractionString(); }

nlohmann::json ToJson(std::span<const Rational> v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rational& r : v) out.push_back(ToJson(r));
  return out;
}

nlohmann::json ToJson(const LpProblem& lp) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < lp.num_rows(); ++i) a.push_back(ToJson(lp.a().row(i)));
  return {{"n", lp.num_vars()},
          {"m", lp.num_rows()},
          {"a", std::move(a)},
          {"b", ToJson(lp.b())},
          {"c", ToJson(lp.c())},
          {"nonneg", lp.nonneg()}};
}

nlohmann::json ToJson(const SymmetryReport& report) {
  nlohmann::json out = {{"candidate", report.candidate.ToCycleString()},
                        {"verdict", report.verdict},
                        {"reason", std::string(ToString(report.reason))}};
  out["witness_sigma"] =
      report.witness_sigma ? nlohmann::json(report.witness_sigma->ToCycleString())
                           : nlohmann::json(nullptr);
  return out;
}

nlohmann::json ToJson(const RunReport& report) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Permutation& g : report.generators) gens.push_back(g.ToCycleString());
  nlohmann::json verification = nlohmann::json::array();
  for (const SymmetryReport& r : report.verification) {
    verification.push_back(ToJson(r));
  }
  nlohmann::json orbits = nlohmann::json::array();
  for (const auto& block : report.orbits.blocks()) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t i : block) members.push_back(i + 1);
    orbits.push_back(std::move(members));
  }
  const SolveOutcome& outcome = report.reduced_outcome;
  nlohmann::json solver = {
      {"status", std::string(ToString(outcome.status))},
      {"pivot_count", outcome.pivot_count},
      {"y", outcome.x ? ToJson(*outcome.x) : nlohmann::json(nullptr)},
      {"value", outcome.value ? ToJson(*outcome.value) : nlohmann::json(nullptr)}};
  nlohmann::json lifted = {
      {"x", report.lifted_x ? ToJson(*report.lifted_x) : nlohmann::json(nullptr)},
      {"feasible", report.lifted_feasible},
      {"value", report.lifted_value ? ToJson(*report.lifted_value)
                                    : nlohmann::json(nullptr)}};
  return {{"input_digest", report.input_digest},
          {"generators_source", report.generators_supplied ? "supplied" : "detected"},
          {"generators", std::move(gens)},
          {"verification", std::move(verification)},
          {"orbits", std::move(orbits)},
          {"k", report.k},
          {"rounds", report.rounds},
          {"dimensions", report.dimensions},
          {"reduced_lp", ToJson(report.reduced_lp)},
          {"solver", std::move(solver)},
          {"lifted", std::move(lifted)}};
}

std::string FormatReport(const RunReport& report) {
  std::ostringstream out;
  if (!report.input_digest.empty()) out << "input:      " << report.input_digest << "\n";
  out << (report.generators_supplied ? "generators: " : "symmetries: ");
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    out << (i == 0 ? "" : " ") << report.generators[i].ToCycleString();
  }
  out << "\norbits:     " << report.orbits.ToString() << "\n";
  out << "k:          " << report.k << "\n";
  out << "rounds:     " << report.rounds << " (dimensions";
  for (std::size_t d : report.dimensions) out << " " << d;
  out << ")\n";
  const SolveOutcome& outcome = report.reduced_outcome;
  out << "status:     " << ToString(outcome.status) << " after "
      << outcome.pivot_count << " pivots\n";
  auto print_vector = [&out](const Vector& v) {
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i == 0 ? "" : ", ") << v[i];
    out << ")\n";
  };
  if (outcome.x) {
    out << "y*:         ";
    print_vector(*outcome.x);
  }
  if (report.lifted_x) {
    out << "x*:         ";
    print_vector(*report.lifted_x);
    out << "value:      " << *report.lifted_value << "\n";
    out << "check:      " << (report.lifted_feasible ? "feasible" : "INFEASIBLE")
        << ", utility recomputed\n";
  }
  return out.str();
}

}  // namespace symlp
