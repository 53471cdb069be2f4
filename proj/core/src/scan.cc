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

#include "hamverify/scan.h"

#include <algorithm>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "hamverify/errors.h"
#include "hamverify/graph_io.h"
#include "json.hpp"

namespace hamverify {
namespace {

struct Tally {
  std::uint64_t premise_failed = 0;
  std::uint64_t hamiltonian = 0;
  std::uint64_t family_f = 0;
  std::vector<std::string> counterexamples;
  std::vector<ScanError> errors;

  void Record(const Graph& g, const Verifier& verify) {
    try {
      switch (KindOf(verify(g))) {
        case VerdictKind::kPremiseFailed:
          ++premise_failed;
          break;
        case VerdictKind::kHamiltonian:
          ++hamiltonian;
          break;
        case VerdictKind::kFamilyF:
          ++family_f;
          break;
        case VerdictKind::kCounterexample:
          counterexamples.push_back(EncodeGraph6(g));
          break;
      }
    } catch (const std::exception& e) {
      errors.push_back({EncodeGraph6(g), e.what()});
    }
  }

  void Merge(Tally&& other) {
    premise_failed += other.premise_failed;
    hamiltonian += other.hamiltonian;
    family_f += other.family_f;
    counterexamples.insert(counterexamples.end(), std::make_move_iterator(other.counterexamples.begin()),
                           std::make_move_iterator(other.counterexamples.end()));
    errors.insert(errors.end(), std::make_move_iterator(other.errors.begin()),
                  std::make_move_iterator(other.errors.end()));
  }
};

// Hands out batches of graphs from a shared source. The first exception
// thrown by the source stops the distribution and is rethrown by the caller.
class BatchFeeder {
 public:
  BatchFeeder(GraphSource& source, std::size_t batch_size) : source_(source), batch_size_(batch_size) {}

  bool Fill(std::vector<Graph>& batch) {
    batch.clear();
    std::lock_guard lock(mu_);
    if (failure_) return false;
    try {
      while (batch.size() < batch_size_) {
        std::optional<Graph> g = source_.Next();
        if (!g) break;
        batch.push_back(std::move(*g));
      }
    } catch (...) {
      failure_ = std::current_exception();
      return false;
    }
    return !batch.empty();
  }

  std::exception_ptr failure() const { return failure_; }

 private:
  GraphSource& source_;
  std::size_t batch_size_;
  std::mutex mu_;
  std::exception_ptr failure_;
};

}  // namespace

ScanReport Scan(GraphSource& source, const ScanOptions& options) {
  if (options.parallelism < 1) throw InputError("parallelism must be at least 1");
  const auto started = std::chrono::steady_clock::now();
  BatchFeeder feeder(source, std::max<std::size_t>(options.batch_size, 1));
  std::vector<Tally> tallies(options.parallelism);

  auto work = [&](Tally& tally) {
    std::vector<Graph> batch;
    while (feeder.Fill(batch)) {
      for (const Graph& g : batch) tally.Record(g, options.verifier);
    }
  };
  if (options.parallelism == 1) {
    work(tallies[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(options.parallelism);
    for (Tally& tally : tallies) workers.emplace_back(work, std::ref(tally));
  }
  if (feeder.failure()) std::rethrow_exception(feeder.failure());

  Tally merged;
  for (Tally& tally : tallies) merged.Merge(std::move(tally));
  std::sort(merged.counterexamples.begin(), merged.counterexamples.end());
  std::sort(merged.errors.begin(), merged.errors.end(),
            [](const ScanError& a, const ScanError& b) { return a.graph6 < b.graph6; });

  ScanReport report;
  report.premise_failed = merged.premise_failed;
  report.hamiltonian = merged.hamiltonian;
  report.family_f = merged.family_f;
  report.counterexamples = std::move(merged.counterexamples);
  report.errors = std::move(merged.errors);
  report.total = report.premise_failed + report.hamiltonian + report.family_f + report.counterexamples.size();
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  report.source = source.Describe();
  return report;
}

ScanReport CorollaryStrictScan(GraphSource& source, ScanOptions options) {
  options.verifier = VerifyStrictCorollary;
  ScanReport report = Scan(source, options);
  report.source = "strict:" + report.source;
  return report;
}

std::string ToJson(const ScanReport& report) {
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const ScanError& e : report.errors) errors.push_back({{"graph6", e.graph6}, {"message", e.message}});
  nlohmann::ordered_json j = {
      {"total", report.total},
      {"premise_failed", report.premise_failed},
      {"hamiltonian", report.hamiltonian},
      {"family_f", report.family_f},
      {"counterexamples", report.counterexamples},
      {"errors", std::move(errors)},
      {"elapsed_ms", report.elapsed.count()},
      {"source", report.source},
  };
  return j.dump();
}

std::string CsvHeader() {
  return "source,total,premise_failed,hamiltonian,family_f,counterexamples,errors,elapsed_ms";
}

std::string ToCsv(const ScanReport& report) {
  std::string joined;
  for (const std::string& c : report.counterexamples) {
    if (!joined.empty()) joined += ';';
    joined += c;
  }
  // graph6 never contains ',' or '"', but source descriptions might.
  std::string source = report.source;
  if (source.find_first_of(",\"") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : source) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    source = quoted + '"';
  }
  return source + ',' + std::to_string(report.total) + ',' + std::to_string(report.premise_failed) + ',' +
         std::to_string(report.hamiltonian) + ',' + std::to_string(report.family_f) + ',' + joined + ',' +
         std::to_string(report.errors.size()) + ',' + std::to_string(report.elapsed.count());
}

}  // namespace hamverify
