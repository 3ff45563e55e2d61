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

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun Cli(const std::string& args) {
  const std::string cmd = std::string(SYMLP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  CliRun run{-1, ""};
  if (pipe == nullptr) return run;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) run.out.append(buf, got);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string Data(const std::string& name) {
  return std::string(SYMLP_TEST_DATA_DIR) + "/" + name;
}

std::string Temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

bool Contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(CliTest, Detect) {
  const CliRun r = Cli("detect " + Data("lambda0.lps"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "order 2"));
  EXPECT_TRUE(Contains(r.out, "(1 2)(3 4)"));
  EXPECT_TRUE(Contains(r.out, "{1,2}{3,4}"));
}

TEST(CliTest, Verify) {
  CliRun r = Cli("verify " + Data("lambda0.lps") + " --gens " + Data("lambda0.gens"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "sigma=(3 4)"));
  const std::string bad = Temp("bad.gens", "(1 3)\n");
  r = Cli("verify " + Data("lambda0.lps") + " --gens " + bad);
  EXPECT_EQ(r.code, 4) << r.out;
}

TEST(CliTest, OrbitsAndReduce) {
  CliRun r = Cli("orbits " + Data("lambda0.lps"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "k 2"));
  r = Cli("reduce " + Data("lambda0.lps"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "2 4"));
  EXPECT_TRUE(Contains(r.out, "2 0 <= 1"));
}

TEST(CliTest, SolveExitCodes) {
  CliRun r = Cli("solve " + Data("lambda0.lps") + " --json");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "\"5/1\""));
  r = Cli("solve " + Data("fixed_points.lps"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "37/10"));

  const std::string infeasible =
      Temp("inf.lps", "maximize\n1 1\nsubject-to\n1 1 <= -1\n");
  EXPECT_EQ(Cli("solve " + infeasible).code, 2);
  const std::string unbounded = Temp("unb.lps", "maximize\n1 1\nsubject-to\n");
  EXPECT_EQ(Cli("solve " + unbounded).code, 3);
  const std::string bad = Temp("bad.lps", "maximize\n1 1\nsubject-to\n1 1 = 2\n");
  r = Cli("solve " + bad);
  EXPECT_EQ(r.code, 5);
  EXPECT_TRUE(Contains(r.out, "line 4"));
  EXPECT_EQ(Cli("solve /nonexistent.lps").code, 1);
}

TEST(CliTest, DecomposeSigned) {
  const CliRun r = Cli("decompose-signed " + Data("signed.mat"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Contains(r.out, "signs -1 +1"));
  EXPECT_TRUE(Contains(r.out, "permutation (1 2)"));
  const std::string not_signed = Temp("ns.mat", "1 1\n0 1\n");
  EXPECT_NE(Cli("decompose-signed " + not_signed).code, 0);
}

}  // namespace
