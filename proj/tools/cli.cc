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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hamverify/connectivity.h"
#include "hamverify/enumerate.h"
#include "hamverify/errors.h"
#include "hamverify/family_f.h"
#include "hamverify/graph_io.h"
#include "hamverify/hamilton.h"
#include "hamverify/matching.h"
#include "json.hpp"

namespace hamverify::cli {
namespace {

using Json = nlohmann::ordered_json;

struct CliConfig {
  std::string input = "-";
  std::string format = "graph6";
  std::string output = "human";
  int parallelism = 1;
  std::optional<int> enumerate;
  bool strict = false;
  bool csv = false;
  int p = 0;
  int q = 0;
  std::string a_edges = "none";
  double density = 0.5;
  std::uint64_t seed = 0;
  int count = 1;
};

// Owns the input stream and the reader on top of it.
struct InputSource {
  std::unique_ptr<std::ifstream> file;
  std::unique_ptr<GraphSource> reader;
};

InputSource OpenInput(const CliConfig& config, std::istream& in) {
  InputSource source;
  std::istream* stream = &in;
  std::string description = "stdin";
  if (config.input != "-") {
    source.file = std::make_unique<std::ifstream>(config.input);
    if (!*source.file) throw InputError("cannot open input file '" + config.input + "'");
    stream = source.file.get();
    description = config.input;
  }
  if (config.format == "edgelist") {
    source.reader = std::make_unique<EdgeListReader>(*stream, description);
  } else {
    source.reader = std::make_unique<Graph6Reader>(*stream, description);
  }
  return source;
}

std::string JoinCycle(const std::vector<Vertex>& order) {
  std::string s;
  for (Vertex v : order) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

int DefaultParallelism() {
  if (const char* env = std::getenv("HAMVERIFY_PARALLELISM"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 4096) {
      throw InputError(std::string("HAMVERIFY_PARALLELISM must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(value);
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Prints every invariant of one graph. Returns false on a capacity problem.
bool ReportInvariants(const Graph& g, bool json, std::ostream& out, std::ostream& err) {
  const int m = MatchingNumber(g);
  const int kappa = VertexConnectivity(g);
  std::optional<HamiltonCertificate> cert;
  bool ok = true;
  if (g.num_vertices() >= 3) {
    try {
      cert = HamiltonianCycle(g);
    } catch (const CapacityError& e) {
      err << "error: " << e.what() << '\n';
      ok = false;
    }
  }
  const std::optional<FamilyFWitness> witness = RecognizeFamilyF(g);

  if (json) {
    Json j = {{"graph6", EncodeGraph6(g)}, {"n", g.num_vertices()}, {"edges", g.num_edges()}, {"m", m},
              {"kappa", kappa}};
    j["hamiltonian"] = cert ? Json(IsCycle(*cert)) : Json(nullptr);
    if (cert && IsCycle(*cert)) {
      j["cycle"] = std::get<HamiltonCycle>(*cert).order;
    } else {
      j["cycle"] = nullptr;
    }
    j["family_f"] = witness ? Json{{"p", witness->p()}, {"q", witness->q()}} : Json(nullptr);
    out << j.dump() << '\n';
  } else {
    out << "n=" << g.num_vertices() << " edges=" << g.num_edges() << " m=" << m << " kappa=" << kappa
        << " hamiltonian=";
    if (!cert) {
      out << "n/a";
    } else if (IsCycle(*cert)) {
      out << "true cycle=" << JoinCycle(std::get<HamiltonCycle>(*cert).order);
    } else {
      out << "false";
    }
    out << " family_f=";
    if (witness) {
      out << '(' << witness->p() << ',' << witness->q() << ')';
    } else {
      out << "none";
    }
    out << '\n';
  }
  return ok;
}

int CmdInvariants(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  InputSource source = OpenInput(config, in);
  bool ok = true;
  while (std::optional<Graph> g = source.reader->Next()) {
    ok = ReportInvariants(*g, config.output == "json", out, err) && ok;
  }
  return ok ? kExitOk : kExitError;
}

void PrintVerdict(const Graph& g, const TheoremVerdict& v, bool json, std::ostream& out) {
  if (json) {
    Json j = {{"graph6", EncodeGraph6(g)}, {"verdict", VerdictLabel(v)}, {"n", v.n}, {"m", v.m},
              {"kappa", v.kappa}};
    if (const auto* h = std::get_if<ConclusionHamiltonian>(&v.kind)) j["cycle"] = h->cycle.order;
    if (const auto* f = std::get_if<ConclusionFamilyF>(&v.kind)) {
      j["p"] = f->witness.p();
      j["q"] = f->witness.q();
    }
    out << j.dump() << '\n';
    return;
  }
  out << VerdictLabel(v) << " n=" << v.n << " m=" << v.m << " kappa=" << v.kappa;
  if (const auto* h = std::get_if<ConclusionHamiltonian>(&v.kind)) out << " cycle=" << JoinCycle(h->cycle.order);
  if (const auto* f = std::get_if<ConclusionFamilyF>(&v.kind)) out << " p=" << f->witness.p() << " q=" << f->witness.q();
  out << '\n';
}

int CmdCheck(const CliConfig& config, const Hooks& hooks, std::istream& in, std::ostream& out, std::ostream& err) {
  InputSource source = OpenInput(config, in);
  bool counterexample = false;
  bool failed = false;
  while (std::optional<Graph> g = source.reader->Next()) {
    try {
      const TheoremVerdict v = hooks.verifier(*g);
      PrintVerdict(*g, v, config.output == "json", out);
      counterexample = counterexample || KindOf(v) == VerdictKind::kCounterexample;
    } catch (const CapacityError& e) {
      err << "error: " << EncodeGraph6(*g) << ": " << e.what() << '\n';
      failed = true;
    }
  }
  if (counterexample) return kExitCounterexample;
  return failed ? kExitError : kExitOk;
}

int CmdScan(const CliConfig& config, const Hooks& hooks, std::istream& in, std::ostream& out, std::ostream& err) {
  ScanOptions options;
  options.parallelism = config.parallelism;
  options.verifier = hooks.verifier;

  std::unique_ptr<GraphSource> enumerated;
  InputSource input;
  GraphSource* source = nullptr;
  if (config.enumerate) {
    enumerated = std::make_unique<LabeledGraphs>(*config.enumerate);
    source = enumerated.get();
  } else {
    input = OpenInput(config, in);
    source = input.reader.get();
  }
  const ScanReport report = config.strict ? CorollaryStrictScan(*source, options) : Scan(*source, options);
  if (config.csv) {
    out << ToCsv(report) << '\n';
  } else {
    out << ToJson(report) << '\n';
  }
  for (const ScanError& e : report.errors) err << "error: " << e.graph6 << ": " << e.message << '\n';
  if (!report.counterexamples.empty()) return kExitCounterexample;
  return report.errors.empty() ? kExitOk : kExitError;
}

// Pairs of A are kept with probability `density`, decided by the top 53 bits
// of successive std::mt19937_64 outputs (both fully specified by the
// standard, so corpora match across platforms).
std::vector<Edge> RandomAEdges(int p, double density, std::mt19937_64& rng) {
  std::vector<Edge> chosen;
  for (const Edge& e : AllPairs(p)) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < density) chosen.push_back(e);
  }
  return chosen;
}

int CmdGenerate(const CliConfig& config, std::ostream& out) {
  if (config.p < 2 || config.q < config.p + 1) {
    throw InputError("family F requires q >= p + 1 >= 3 (got p = " + std::to_string(config.p) +
                     ", q = " + std::to_string(config.q) + ")");
  }
  std::mt19937_64 rng(config.seed);
  for (int i = 0; i < config.count; ++i) {
    std::vector<Edge> a_edges;
    if (config.a_edges == "all") {
      a_edges = AllPairs(config.p);
    } else if (config.a_edges == "random") {
      a_edges = RandomAEdges(config.p, config.density, rng);
    }
    out << EncodeGraph6(GenerateFamilyF(config.p, config.q, a_edges)) << '\n';
  }
  return kExitOk;
}

void AddInputOptions(CLI::App* cmd, CliConfig& config) {
  cmd->add_option("input", config.input, "Input file, '-' for standard input")->capture_default_str();
  cmd->add_option("--format,-f", config.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  cmd->add_option("--output,-o", config.output, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  cmd->add_flag_callback("--json", [&config] { config.output = "json"; }, "Shorthand for --output json");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CliConfig config;
  CLI::App app{"Matching-number / connectivity Hamiltonicity verifier"};
  app.name("hamverify");
  app.require_subcommand(1);

  CLI::App* invariants = app.add_subcommand("invariants", "Print n, |E|, m, kappa, Hamiltonicity and F-membership");
  AddInputOptions(invariants, config);

  CLI::App* check = app.add_subcommand("check", "Check the theorem on every input graph");
  AddInputOptions(check, config);

  CLI::App* scan = app.add_subcommand("scan", "Scan a graph stream or all labeled graphs, emit a report");
  auto* enumerate_opt = scan->add_option("--enumerate", config.enumerate, "Scan all labeled graphs on N vertices");
  auto* input_opt = scan->add_option("--input,-i", config.input, "graph6 stream, '-' for standard input");
  enumerate_opt->excludes(input_opt);
  scan->add_option("--format,-f", config.format, "Input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  auto* parallelism_opt =
      scan->add_option("--parallelism,-j", config.parallelism, "Worker count (default $HAMVERIFY_PARALLELISM)")
          ->check(CLI::PositiveNumber);
  scan->add_flag("--strict", config.strict, "Only the slice m <= kappa - 1; every graph there must be Hamiltonian");
  scan->add_flag("--csv", config.csv, "Emit one CSV line instead of JSON");

  CLI::App* generate = app.add_subcommand("generate", "Emit graph6 lines for members of family F");
  generate->add_option("--p", config.p, "Size of the A side")->required();
  generate->add_option("--q", config.q, "Size of the independent B side")->required();
  generate->add_option("--a-edges", config.a_edges, "Edges inside A")
      ->check(CLI::IsMember({"all", "none", "random"}))
      ->capture_default_str();
  generate->add_option("--density", config.density, "Probability of each A-edge with --a-edges random")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate->add_option("--seed", config.seed, "Seed for --a-edges random")->capture_default_str();
  generate->add_option("--count", config.count, "Number of graphs")->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (scan->parsed() && parallelism_opt->count() == 0) config.parallelism = DefaultParallelism();
    if (scan->parsed() && !config.enumerate && input_opt->count() == 0) {
      throw InputError("scan needs --enumerate N or --input FILE");
    }
    if (invariants->parsed()) return CmdInvariants(config, in, out, err);
    if (check->parsed()) return CmdCheck(config, hooks, in, out, err);
    if (scan->parsed()) return CmdScan(config, hooks, in, out, err);
    if (generate->parsed()) return CmdGenerate(config, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace hamverify::cli
