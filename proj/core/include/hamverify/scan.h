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

#ifndef HAMVERIFY_SCAN_H_
#define HAMVERIFY_SCAN_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hamverify/graph.h"
#include "hamverify/graph_source.h"
#include "hamverify/theorem.h"

namespace hamverify {

struct ScanError {
  std::string graph6;
  std::string message;

  friend bool operator==(const ScanError&, const ScanError&) = default;
};

// total = premise_failed + hamiltonian + family_f + counterexamples.size().
// Graphs that raised an error are listed in `errors` and excluded from total.
struct ScanReport {
  std::uint64_t total = 0;
  std::uint64_t premise_failed = 0;
  std::uint64_t hamiltonian = 0;
  std::uint64_t family_f = 0;
  // graph6, sorted.
  std::vector<std::string> counterexamples;
  // Sorted by graph6.
  std::vector<ScanError> errors;
  std::chrono::milliseconds elapsed{0};
  std::string source;
};

using Verifier = std::function<TheoremVerdict(const Graph&)>;

struct ScanOptions {
  int parallelism = 1;
  std::size_t batch_size = 2048;
  // Replaced in tests to inject verdicts.
  Verifier verifier = VerifyTheorem;
};

// Applies options.verifier to every graph of `source` on `parallelism`
// workers. Counts are independent of parallelism. Throws InputError for
// parallelism < 1; errors from the source itself propagate.
ScanReport Scan(GraphSource& source, const ScanOptions& options = {});

// Scan with VerifyStrictCorollary; family_f is always 0.
ScanReport CorollaryStrictScan(GraphSource& source, ScanOptions options = {});

// Single JSON object: total, premise_failed, hamiltonian, family_f,
// counterexamples, errors, elapsed_ms, source.
std::string ToJson(const ScanReport& report);
std::string CsvHeader();
// One line, no trailing newline. Counterexamples are joined by ';'.
std::string ToCsv(const ScanReport& report);

}  // namespace hamverify

#endif  // HAMVERIFY_SCAN_H_
