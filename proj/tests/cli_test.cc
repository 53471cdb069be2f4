// Copyright 2026 The hamverify Authors
//
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

#include "cli.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "hamverify/family_f.h"
#include "hamverify/graph_io.h"
#include "hamverify/named_graphs.h"
#include "json.hpp"

namespace hamverify::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args, const std::string& input = "", const Hooks& hooks = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, in, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(CliInvariantsTest, CompleteBipartiteFromGraph6) {
  const Result r = RunCli({"invariants", "--format", "graph6", "-"}, EncodeGraph6(CompleteBipartiteGraph(2, 3)) + "\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n=5 edges=6 m=2 kappa=2 hamiltonian=false family_f=(2,3)\n");
}

TEST(CliInvariantsTest, TriangleFromEdgeList) {
  const Result r = RunCli({"invariants", "--format", "edgelist"}, "3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n=3 edges=3 m=1 kappa=2 hamiltonian=true cycle=0,1,2 family_f=none\n");
}

TEST(CliInvariantsTest, JsonOneObjectPerGraph) {
  const Result r = RunCli({"invariants", "--json"}, "Bw\nDhc\nA_\n");
  ASSERT_EQ(r.code, kExitOk);
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  const auto c5 = nlohmann::json::parse(lines[1]);
  EXPECT_EQ(c5["m"], 2);
  EXPECT_EQ(c5["kappa"], 2);
  EXPECT_EQ(c5["hamiltonian"], true);
  EXPECT_EQ(c5["cycle"], nlohmann::json::array({0, 1, 2, 3, 4}));
  EXPECT_TRUE(c5["family_f"].is_null());
  EXPECT_TRUE(nlohmann::json::parse(lines[2])["hamiltonian"].is_null());
}

TEST(CliInvariantsTest, MalformedGraph6) {
  const Result r = RunCli({"invariants", "-"}, "Bw\nD? {\n");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_NE(r.err.find("offset 2"), std::string::npos);
}

TEST(CliInvariantsTest, CapacityIsAnError) {
  const Result r = RunCli({"invariants"}, EncodeGraph6(CompleteGraph(40)) + "\n");
  EXPECT_EQ(r.code, kExitError);
}

TEST(CliCheckTest, Verdicts) {
  const Result k23 = RunCli({"check"}, EncodeGraph6(CompleteBipartiteGraph(2, 3)) + "\n");
  EXPECT_EQ(k23.code, kExitOk);
  EXPECT_EQ(k23.out, "family_f n=5 m=2 kappa=2 p=2 q=3\n");

  const Result c6 = RunCli({"check"}, EncodeGraph6(CycleGraph(6)) + "\n");
  EXPECT_EQ(c6.code, kExitOk);
  EXPECT_EQ(c6.out, "premise_failed(matching_exceeds_kappa) n=6 m=3 kappa=2\n");

  const Result k5 = RunCli({"check", "--json"}, EncodeGraph6(CompleteGraph(5)) + "\n");
  EXPECT_EQ(k5.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(k5.out)["verdict"], "hamiltonian");
}

TEST(CliCheckTest, InjectedCounterexampleExitsOne) {
  Hooks hooks;
  hooks.verifier = [](const Graph& g) { return TheoremVerdict{Counterexample{}, g.num_vertices(), 0, 0}; };
  const Result r = RunCli({"check"}, "Bw\n", hooks);
  EXPECT_EQ(r.code, kExitCounterexample);
  EXPECT_EQ(Lines(r.out).front().rfind("counterexample", 0), 0u);
  const Result scan = RunCli({"scan", "--enumerate", "3", "-j", "1"}, "", hooks);
  EXPECT_EQ(scan.code, kExitCounterexample);
}

TEST(CliScanTest, EnumerateFive) {
  const Result r = RunCli({"scan", "--enumerate", "5", "-j", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 1024);
  EXPECT_TRUE(j["counterexamples"].empty());
}

TEST(CliScanTest, EnumerateAboveCap) {
  const Result r = RunCli({"scan", "--enumerate", "8"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("graph6"), std::string::npos);
}

TEST(CliScanTest, PetersenFromInput) {
  const Result r = RunCli({"scan", "--input", "-", "-j", "1"}, EncodeGraph6(PetersenGraph()) + "\n");
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 1);
  EXPECT_EQ(j["premise_failed"], 1);
}

TEST(CliScanTest, StrictAndCsv) {
  const Result r = RunCli({"scan", "--enumerate", "4", "--strict", "--csv", "-j", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("strict:labeled:n=4,64,", 0), 0u);
}

TEST(CliScanTest, NeedsASource) {
  EXPECT_EQ(RunCli({"scan"}).code, kExitError);
  EXPECT_EQ(RunCli({"scan", "--enumerate", "4", "--input", "x"}).code, kExitError);
  EXPECT_EQ(RunCli({"scan", "--input", "/nonexistent/file.g6"}).code, kExitError);
}

TEST(CliGenerateTest, NoneIsCompleteBipartite) {
  const Result r = RunCli({"generate", "--p", "2", "--q", "3", "--a-edges", "none"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, EncodeGraph6(CompleteBipartiteGraph(2, 3)) + "\n");
}

TEST(CliGenerateTest, ConstraintViolation) {
  const Result r = RunCli({"generate", "--p", "1", "--q", "5"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("q >= p + 1 >= 3"), std::string::npos);
  EXPECT_EQ(RunCli({"generate", "--p", "3", "--q", "3"}).code, kExitError);
}

TEST(CliGenerateTest, RandomIsSeededAndRecognized) {
  const std::vector<std::string> args = {"generate", "--p", "3", "--q", "4", "--a-edges", "random", "--seed", "7",
                                         "--count", "5"};
  const Result first = RunCli(args);
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_EQ(RunCli(args).out, first.out);
  EXPECT_EQ(Lines(first.out).size(), 5u);
  const Result inv = RunCli({"invariants"}, first.out);
  ASSERT_EQ(inv.code, kExitOk);
  for (const std::string& line : Lines(inv.out)) EXPECT_NE(line.find("family_f=(3,4)"), std::string::npos) << line;
}

TEST(CliPipelineTest, GenerateIntoCheck) {
  const Result gen = RunCli({"generate", "--p", "4", "--q", "6", "--a-edges", "random", "--count", "10"});
  ASSERT_EQ(gen.code, kExitOk);
  const Result check = RunCli({"check"}, gen.out);
  EXPECT_EQ(check.code, kExitOk);
  const auto lines = Lines(check.out);
  ASSERT_EQ(lines.size(), 10u);
  for (const std::string& line : lines) EXPECT_EQ(line.rfind("family_f", 0), 0u) << line;
}

TEST(CliUsageTest, BadUsageExitsTwo) {
  EXPECT_EQ(RunCli({}).code, kExitError);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(RunCli({"invariants", "--format", "sparse6"}).code, kExitError);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace hamverify::cli
