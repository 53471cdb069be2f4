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

#ifndef HAMVERIFY_THEOREM_H_
#define HAMVERIFY_THEOREM_H_

#include <string>
#include <variant>

#include "hamverify/family_f.h"
#include "hamverify/graph.h"
#include "hamverify/hamilton.h"

namespace hamverify {

enum class PremiseFailure {
  kOrderBelow3,
  kConnectivityBelow2,
  kMatchingExceedsConnectivity,
  // Only produced by the strict corollary check (m = κ is out of its slice).
  kMatchingNotBelowConnectivity,
};

struct PremiseFailed {
  PremiseFailure reason;
};
struct ConclusionHamiltonian {
  HamiltonCycle cycle;
};
struct ConclusionFamilyF {
  FamilyFWitness witness;
};
struct Counterexample {};

struct TheoremVerdict {
  std::variant<PremiseFailed, ConclusionHamiltonian, ConclusionFamilyF, Counterexample> kind;
  int n = 0;
  int m = 0;
  int kappa = 0;
};

enum class VerdictKind { kPremiseFailed, kHamiltonian, kFamilyF, kCounterexample };

inline VerdictKind KindOf(const TheoremVerdict& v) {
  return static_cast<VerdictKind>(v.kind.index());
}

const char* ToString(PremiseFailure reason);
// "hamiltonian", "family_f", "counterexample" or
// "premise_failed(<reason>)".
std::string VerdictLabel(const TheoremVerdict& v);

// Computes n, κ and m, then checks n >= 3, κ >= 2, m <= κ in that order.
// When the premise holds, Hamiltonicity is tried first and family
// membership second; Counterexample only if both fail.
// Throws CapacityError for n > 32.
TheoremVerdict VerifyTheorem(const Graph& g);

// Slice n >= 3, κ >= 2, m <= κ - 1, where no exception is needed: graphs in
// the slice are Hamiltonian or a Counterexample, never ConclusionFamilyF.
TheoremVerdict VerifyStrictCorollary(const Graph& g);

// Re-derives n, m and κ and the branch conditions from g. Empty when the
// verdict is consistent.
std::string CheckVerdict(const Graph& g, const TheoremVerdict& v);

}  // namespace hamverify

#endif  // HAMVERIFY_THEOREM_H_
