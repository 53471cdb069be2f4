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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Thresholds are fixed constants below.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "hamverify/connectivity.h"
#include "hamverify/enumerate.h"
#include "hamverify/family_f.h"
#include "hamverify/graph_io.h"
#include "hamverify/hamilton.h"
#include "hamverify/matching.h"
#include "hamverify/named_graphs.h"
#include "hamverify/scan.h"
#include "hamverify/theorem.h"
#include "test_support.h"

namespace hamverify {
namespace {

constexpr int kScanWorkers = 8;
constexpr double kSmallScanBudgetSeconds = 10.0;   // n <= 6
constexpr double kLargeScanBudgetSeconds = 600.0;  // n = 7
constexpr int kRandomMatchingGraphs = 10000;
constexpr int kRandomMatchingMaxOrder = 10;
constexpr int kRandomConnectivityGraphs = 10000;
constexpr int kRandomConnectivityMaxOrder = 9;
constexpr int kRandomHamiltonGraphs = 1000;
constexpr int kRandomHamiltonMinOrder = 10;
constexpr int kRandomHamiltonMaxOrder = 16;
constexpr int kDiracMaxOrder = 14;
constexpr int kFamilyMaxOrder = 12;
constexpr int kFamilySubsetsPerShape = 20;
constexpr int kRoundTripGraphs = 10000;
constexpr int kRoundTripMaxOrder = 30;
constexpr int kMinHandFixtures = 5;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

double Seconds(std::chrono::steady_clock::duration d) { return std::chrono::duration<double>(d).count(); }

Outcome TheoremExhaustive() {
  Outcome o;
  const std::uint64_t expected[] = {0, 0, 0, 8, 64, 1024, 32768, 2097152};
  double small_seconds = 0;
  for (int n = 3; n <= 7; ++n) {
    LabeledGraphs graphs(n);
    const auto start = std::chrono::steady_clock::now();
    const ScanReport r = Scan(graphs, {.parallelism = kScanWorkers});
    const double seconds = Seconds(std::chrono::steady_clock::now() - start);
    if (n <= 6) small_seconds += seconds;
    if (r.total != expected[n]) o.Fail("n=" + std::to_string(n) + " total " + std::to_string(r.total));
    if (!r.counterexamples.empty()) o.Fail("n=" + std::to_string(n) + " counterexample " + r.counterexamples[0]);
    if (!r.errors.empty()) o.Fail("n=" + std::to_string(n) + " error " + r.errors[0].message);
    if (n == 7 && seconds > kLargeScanBudgetSeconds) o.Fail("n=7 took " + std::to_string(seconds) + "s");
    o.detail << "n=" << n << ":" << r.total << " graphs/" << r.counterexamples.size() << " cx/" << seconds << "s ";
  }
  if (small_seconds > kSmallScanBudgetSeconds) o.Fail("n<=6 took " + std::to_string(small_seconds) + "s");
  return o;
}

Outcome MatchingOracle() {
  Outcome o;
  std::uint64_t checked = 0;
  auto check = [&](const Graph& g) {
    const Matching m = MaximumMatching(g);
    ++checked;
    if (!CheckMatching(g, m).empty()) return o.Fail("invalid matching on " + EncodeGraph6(g));
    if (m.size() != BruteMatchingNumber(g)) return o.Fail("size mismatch on " + EncodeGraph6(g));
    if (FindAugmentingPath(g, m)) o.Fail("augmenting path on " + EncodeGraph6(g));
  };
  for (int n = 1; n <= 6; ++n) {
    LabeledGraphs graphs(n);
    while (auto g = graphs.Next()) check(*g);
  }
  std::mt19937_64 rng(2);
  for (int i = 0; i < kRandomMatchingGraphs; ++i) check(testing::RandomGraphUpTo(1, kRandomMatchingMaxOrder, rng));
  o.detail << checked << " graphs, exact equality + Berge check";
  return o;
}

Outcome ConnectivityOracle() {
  Outcome o;
  std::uint64_t checked = 0;
  auto check = [&](const Graph& g) {
    ++checked;
    const int kappa = VertexConnectivity(g);
    if (kappa != BruteVertexConnectivity(g)) return o.Fail("kappa mismatch on " + EncodeGraph6(g));
    const auto cut = MinVertexCut(g);
    if (!cut) {
      if (!g.IsComplete() && g.num_vertices() >= 2) o.Fail("missing cut on " + EncodeGraph6(g));
      return;
    }
    if (cut->vertices.size() != kappa) return o.Fail("cut size on " + EncodeGraph6(g));
    if (!CheckVertexCut(g, *cut).empty()) o.Fail("cut does not separate on " + EncodeGraph6(g));
  };
  for (int n = 1; n <= 6; ++n) {
    LabeledGraphs graphs(n);
    while (auto g = graphs.Next()) check(*g);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < kRandomConnectivityGraphs; ++i) {
    check(testing::RandomGraphUpTo(1, kRandomConnectivityMaxOrder, rng));
  }
  o.detail << checked << " graphs, exact equality + separating witnesses";
  return o;
}

Outcome HamiltonEngines() {
  Outcome o;
  std::uint64_t checked = 0;
  auto check = [&](const Graph& g) {
    ++checked;
    const HamiltonCertificate dp = HeldKarpHamiltonianCycle(g);
    const HamiltonCertificate bt = BacktrackHamiltonianCycle(g);
    if (IsCycle(dp) != IsCycle(bt)) return o.Fail("engines disagree on " + EncodeGraph6(g));
    for (const HamiltonCertificate* c : {&dp, &bt}) {
      if (IsCycle(*c) && !CheckHamiltonCycle(g, std::get<HamiltonCycle>(*c).order).empty()) {
        o.Fail("invalid certificate on " + EncodeGraph6(g));
      }
    }
  };
  for (int n = 3; n <= 6; ++n) {
    LabeledGraphs graphs(n);
    while (auto g = graphs.Next()) check(*g);
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < kRandomHamiltonGraphs; ++i) {
    const int n = kRandomHamiltonMinOrder + static_cast<int>(rng() % (kRandomHamiltonMaxOrder - kRandomHamiltonMinOrder + 1));
    check(testing::RandomGraph(n, 0.1 + 0.5 * testing::UnitDraw(rng), rng));
  }
  if (IsHamiltonian(PetersenGraph()) || IsCycle(BacktrackHamiltonianCycle(PetersenGraph()))) {
    o.Fail("Petersen reported Hamiltonian");
  }
  int dirac = 0;
  for (int i = 0; i < 5000; ++i) {
    const int n = 3 + static_cast<int>(rng() % (kDiracMaxOrder - 2));
    const Graph g = testing::RandomGraph(n, 0.5 + 0.5 * testing::UnitDraw(rng), rng);
    if (2 * g.MinDegree() < n) continue;
    ++dirac;
    const HamiltonCertificate cert = HamiltonianCycle(g);
    if (!IsCycle(cert) || !CheckHamiltonCycle(g, std::get<HamiltonCycle>(cert).order).empty()) {
      o.Fail("Dirac graph not Hamiltonian: " + EncodeGraph6(g));
    }
  }
  if (dirac == 0) o.Fail("no Dirac graphs sampled");
  o.detail << checked << " engine comparisons, Petersen non-Hamiltonian, " << dirac << " Dirac graphs Hamiltonian";
  return o;
}

Outcome FamilyExtremalTriple() {
  Outcome o;
  std::mt19937_64 rng(5);
  int members = 0;
  for (int p = 2; 2 * p + 1 <= kFamilyMaxOrder; ++p) {
    for (int q = p + 1; p + q <= kFamilyMaxOrder; ++q) {
      for (int s = 0; s < kFamilySubsetsPerShape; ++s) {
        std::vector<Edge> a_edges;
        for (const Edge& e : AllPairs(p)) {
          if (rng() % 2) a_edges.push_back(e);
        }
        const Graph g = GenerateFamilyF(p, q, a_edges);
        ++members;
        const std::string tag = " (p=" + std::to_string(p) + ",q=" + std::to_string(q) + ") " + EncodeGraph6(g);
        if (MatchingNumber(g) != p) o.Fail("m != p" + tag);
        if (VertexConnectivity(g) != p) o.Fail("kappa != p" + tag);
        if (IsHamiltonian(g)) o.Fail("Hamiltonian" + tag);
        if (KindOf(VerifyTheorem(g)) != VerdictKind::kFamilyF) o.Fail("verdict not family_f" + tag);
      }
    }
  }
  o.detail << members << " members: m = kappa = p, non-Hamiltonian, verdict family_f";
  return o;
}

Outcome StrictCorollary() {
  Outcome o;
  std::uint64_t in_slice = 0;
  for (int n = 1; n <= 7; ++n) {
    LabeledGraphs graphs(n);
    const ScanReport r = CorollaryStrictScan(graphs, {.parallelism = kScanWorkers});
    if (!r.counterexamples.empty()) o.Fail("n=" + std::to_string(n) + " non-Hamiltonian " + r.counterexamples[0]);
    if (!r.errors.empty()) o.Fail("n=" + std::to_string(n) + " error " + r.errors[0].message);
    if (r.family_f != 0) o.Fail("family_f counted in strict scan");
    in_slice += r.hamiltonian + r.counterexamples.size();
  }
  if (in_slice == 0) o.Fail("slice m <= kappa - 1 is empty");
  o.detail << in_slice << " graphs with kappa >= 2 and m <= kappa - 1, all Hamiltonian";
  return o;
}

Outcome FormatFidelity() {
  Outcome o;
  struct Fixture {
    const char* text;
    Graph graph;
  };
  const std::vector<Fixture> fixtures = {
      {"?", Graph(0)},
      {"@", Graph(1)},
      {"A_", Graph::FromEdges(2, {{0, 1}})},
      {"Bw", CompleteGraph(3)},
      {"C~", CompleteGraph(4)},
      {"D?{", Graph::FromEdges(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})},
      {"Dhc", CycleGraph(5)},
  };
  for (const Fixture& f : fixtures) {
    if (EncodeGraph6(f.graph) != f.text) o.Fail(std::string("encode mismatch for ") + f.text);
    if (!(ParseGraph6(f.text) == f.graph)) o.Fail(std::string("decode mismatch for ") + f.text);
  }
  if (static_cast<int>(fixtures.size()) < kMinHandFixtures) o.Fail("too few fixtures");
  std::mt19937_64 rng(7);
  for (int i = 0; i < kRoundTripGraphs; ++i) {
    const Graph g = testing::RandomGraphUpTo(0, kRoundTripMaxOrder, rng);
    const std::string text = EncodeGraph6(g);
    if (!(ParseGraph6(text) == g)) o.Fail("round trip failed for " + text);
    const auto [n, edges] = testing::ReferenceDecodeGraph6(text);
    if (!(Graph::FromEdges(n, edges) == g)) o.Fail("reference decoder disagrees on " + text);
  }
  o.detail << kRoundTripGraphs << " round trips, " << fixtures.size() << " byte-exact fixtures";
  return o;
}

Outcome CliContract() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args, const std::string& input, std::string& out,
                const cli::Hooks& hooks = {}) {
    std::istringstream in(input);
    std::ostringstream out_stream;
    std::ostringstream err_stream;
    const int code = cli::Run(args, in, out_stream, err_stream, hooks);
    out = out_stream.str();
    return code;
  };
  std::string generated;
  if (run({"generate", "--p", "3", "--q", "5", "--a-edges", "random", "--seed", "11", "--count", "25"}, "",
          generated) != cli::kExitOk) {
    o.Fail("generate failed");
  }
  std::string verdicts;
  if (run({"check"}, generated, verdicts) != cli::kExitOk) o.Fail("generate | check did not exit 0");
  std::istringstream lines(verdicts);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    if (line.rfind("family_f", 0) != 0) o.Fail("non-family_f verdict: " + line);
  }
  if (count != 25) o.Fail("expected 25 verdicts, got " + std::to_string(count));

  std::string ignored;
  if (run({"check"}, "D? {\n", ignored) != cli::kExitError) o.Fail("malformed input did not exit 2");
  cli::Hooks fake;
  fake.verifier = [](const Graph& g) { return TheoremVerdict{Counterexample{}, g.num_vertices(), 0, 0}; };
  if (run({"check"}, generated, ignored, fake) != cli::kExitCounterexample) o.Fail("fake counterexample did not exit 1");
  o.detail << "pipeline exit 0 with " << count << " family_f verdicts; malformed -> 2; injected counterexample -> 1";
  return o;
}

}  // namespace
}  // namespace hamverify

int main() {
  using hamverify::Outcome;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 theorem holds on all labeled graphs n=3..7", hamverify::TheoremExhaustive},
      {"AC2 blossom matching equals brute force", hamverify::MatchingOracle},
      {"AC3 flow connectivity equals brute force", hamverify::ConnectivityOracle},
      {"AC4 Hamiltonicity engines agree", hamverify::HamiltonEngines},
      {"AC5 family F extremal triple", hamverify::FamilyExtremalTriple},
      {"AC6 strict corollary (m <= kappa - 1) all Hamiltonian", hamverify::StrictCorollary},
      {"AC7 graph6 fidelity", hamverify::FormatFidelity},
      {"AC8 CLI exit-code contract", hamverify::CliContract},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << seconds << "s) -- "
              << outcome.detail.str() << std::endl;
    if (!outcome.pass) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
