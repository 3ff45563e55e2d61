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

// symlp: symmetry detection and orbit reduction for linear programs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symlp/error.h"
#include "symlp/lp_io.h"
#include "symlp/perm_group.h"
#include "symlp/pipeline.h"
#include "symlp/reduction.h"
#include "symlp/symmetry_detect.h"

namespace {

using namespace symlp;

struct Loaded {
  LpProblem lp;
  std::optional<std::string> name;
  std::string digest;
};

// Rethrows parse errors with the offending path in front.
template <typename Fn>
auto WithPath(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Loaded LoadLp(const std::string& path) {
  const std::string text = ReadFile(path);
  LpFileDocument doc = WithPath(path, [&] { return ParseLpDocument(text); });
  return {std::move(doc.lp), std::move(doc.name), Sha256Digest(text)};
}

std::vector<Permutation> LoadGenerators(const std::string& path,
                                        std::size_t n) {
  const std::string text = ReadFile(path);
  return WithPath(path, [&] { return ParseGeneratorsFile(text, n); });
}

void PrintReports(const std::vector<SymmetryReport>& reports) {
  for (const SymmetryReport& r : reports) {
    std::cout << r.candidate.ToCycleString() << "\t" << ToString(r.reason);
    if (r.witness_sigma) {
      std::cout << "\tsigma=" << r.witness_sigma->ToCycleString();
    }
    std::cout << "\n";
  }
}

// Group order via closure, or a note when the closure limit is exceeded.
std::string GroupOrder(const std::vector<Permutation>& gens, std::size_t n) {
  try {
    return std::to_string(GroupClosure(gens, n, ClosureLimitFromEnv()).size());
  } catch (const ClosureLimitExceeded& e) {
    return "> " + std::to_string(e.limit());
  }
}

// Verified supplied generators, or the detected group.
std::vector<Permutation> Symmetries(const LpProblem& lp,
                                    const std::string& gens_path) {
  if (gens_path.empty()) return FullSymmetryGroup(lp);
  std::vector<Permutation> gens = LoadGenerators(gens_path, lp.num_vars());
  std::vector<SymmetryReport> reports = VerifyGroup(lp, gens);
  if (!AllVerified(reports)) {
    throw VerificationFailed("supplied generator is not a symmetry",
                             std::move(reports));
  }
  return gens;
}

int RunDetect(const std::string& lp_path) {
  const Loaded in = LoadLp(lp_path);
  const std::vector<Permutation> group = FullSymmetryGroup(in.lp);
  std::cout << "order " << group.size() << "\n";
  for (const Permutation& g : group) std::cout << g.ToCycleString() << "\n";
  std::cout << "orbits " << OrbitsFromGenerators(group, in.lp.num_vars()).ToString()
            << "\n";
  return kExitOptimal;
}

int RunVerify(const std::string& lp_path, const std::string& gens_path) {
  const Loaded in = LoadLp(lp_path);
  const std::vector<Permutation> gens =
      LoadGenerators(gens_path, in.lp.num_vars());
  const std::vector<SymmetryReport> reports = VerifyGroup(in.lp, gens);
  PrintReports(reports);
  if (!AllVerified(reports)) return kExitVerificationFailure;
  std::cout << "group order " << GroupOrder(gens, in.lp.num_vars()) << "\n";
  return kExitOptimal;
}

int RunOrbits(const std::string& lp_path, const std::string& gens_path) {
  const Loaded in = LoadLp(lp_path);
  const std::vector<Permutation> gens = Symmetries(in.lp, gens_path);
  const OrbitPartition orbits = OrbitsFromGenerators(gens, in.lp.num_vars());
  std::cout << orbits.ToString() << "\n";
  std::cout << "k " << orbits.k() << "\n";
  return kExitOptimal;
}

int RunReduce(const std::string& lp_path, const std::string& gens_path,
              const std::string& out_path) {
  const Loaded in = LoadLp(lp_path);
  const std::vector<Permutation> gens = Symmetries(in.lp, gens_path);
  const ReducedLp reduced =
      Reduce(in.lp, OrbitsFromGenerators(gens, in.lp.num_vars()));
  std::optional<std::string> name;
  if (in.name) name = *in.name + " (retract)";
  const std::string text = EmitLpFile(reduced.lp, name);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
  }
  return kExitOptimal;
}

int RunSolve(const std::string& lp_path, const std::string& gens_path,
             std::size_t rounds, bool json, bool dantzig) {
  const Loaded in = LoadLp(lp_path);
  RunOptions options;
  options.rounds = rounds;
  options.rule = dantzig ? PivotRule::kDantzig : PivotRule::kBland;
  if (!gens_path.empty()) {
    options.generators = LoadGenerators(gens_path, in.lp.num_vars());
  }
  const RunReport report = RunPipeline(in.lp, options, in.digest);
  // Whole document at once.
  const std::string text =
      json ? ToJson(report).dump(2) + "\n" : FormatReport(report);
  std::cout << text << std::flush;
  return ExitCodeFor(report);
}

int RunDecompose(const std::string& path) {
  const std::string text = ReadFile(path);
  const Matrix m = WithPath(path, [&] { return ParseMatrixFile(text); });
  const SignedPermutation sp = DecomposeSignedPermutation(m);
  std::cout << "signs";
  for (int s : sp.signs) std::cout << " " << (s > 0 ? "+1" : "-1");
  std::cout << "\npermutation " << sp.p.ToCycleString() << "\n";
  return kExitOptimal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry detection and orbit reduction for linear programs"};
  app.require_subcommand(1);

  std::string lp_path;
  std::string gens_path;
  std::string out_path;
  std::string matrix_path;
  std::size_t rounds = 1;
  bool json = false;
  bool dantzig = false;

  auto* detect = app.add_subcommand("detect", "List every symmetry of an LP");
  detect->add_option("lp", lp_path, "LPS file")->required();

  auto* verify = app.add_subcommand("verify", "Check supplied generators");
  verify->add_option("lp", lp_path, "LPS file")->required();
  verify->add_option("--gens", gens_path, "generators file")->required();

  auto* orbits = app.add_subcommand("orbits", "Print the orbit partition");
  orbits->add_option("lp", lp_path, "LPS file")->required();
  orbits->add_option("--gens", gens_path, "generators file");

  auto* reduce = app.add_subcommand("reduce", "Write the reduced LP");
  reduce->add_option("lp", lp_path, "LPS file")->required();
  reduce->add_option("--gens", gens_path, "generators file");
  reduce->add_option("--out", out_path, "output LPS file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Reduce, solve and lift");
  solve->add_option("lp", lp_path, "LPS file")->required();
  solve->add_option("--gens", gens_path, "generators file");
  solve->add_option("--iterate", rounds, "maximum reduction rounds")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--json", json, "print the report as JSON");
  solve->add_flag("--dantzig", dantzig, "use Dantzig's pivot rule");

  auto* decompose = app.add_subcommand(
      "decompose-signed", "Factor a signed permutation matrix as D*P");
  decompose->add_option("matrix", matrix_path, "matrix file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*detect) return RunDetect(lp_path);
    if (*verify) return RunVerify(lp_path, gens_path);
    if (*orbits) return RunOrbits(lp_path, gens_path);
    if (*reduce) return RunReduce(lp_path, gens_path, out_path);
    if (*solve) return RunSolve(lp_path, gens_path, rounds, json, dantzig);
    if (*decompose) return RunDecompose(matrix_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    PrintReports(e.reports());
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
