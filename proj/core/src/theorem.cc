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

#include "hamverify/theorem.h"

#include <string>

#include "hamverify/connectivity.h"
#include "hamverify/errors.h"
#include "hamverify/matching.h"

namespace hamverify {
namespace {

struct Invariants {
  int n;
  int kappa;
  int m;
};

Invariants Measure(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kHamiltonMaxOrder) {
    throw CapacityError("theorem check needs the Hamiltonicity solver, limited to n <= " +
                        std::to_string(kHamiltonMaxOrder) + "; got n = " + std::to_string(n));
  }
  const int kappa = VertexConnectivity(g);
  return {n, kappa, MatchingNumber(g)};
}

TheoremVerdict Make(const Invariants& inv, decltype(TheoremVerdict::kind) kind) {
  return TheoremVerdict{std::move(kind), inv.n, inv.m, inv.kappa};
}

}  // namespace

const char* ToString(PremiseFailure reason) {
  switch (reason) {
    case PremiseFailure::kOrderBelow3:
      return "n_too_small";
    case PremiseFailure::kConnectivityBelow2:
      return "kappa_below_2";
    case PremiseFailure::kMatchingExceedsConnectivity:
      return "matching_exceeds_kappa";
    case PremiseFailure::kMatchingNotBelowConnectivity:
      return "matching_not_below_kappa";
  }
  return "unknown";
}

std::string VerdictLabel(const TheoremVerdict& v) {
  switch (KindOf(v)) {
    case VerdictKind::kPremiseFailed:
      return std::string("premise_failed(") + ToString(std::get<PremiseFailed>(v.kind).reason) + ")";
    case VerdictKind::kHamiltonian:
      return "hamiltonian";
    case VerdictKind::kFamilyF:
      return "family_f";
    case VerdictKind::kCounterexample:
      return "counterexample";
  }
  return "unknown";
}

TheoremVerdict VerifyTheorem(const Graph& g) {
  const Invariants inv = Measure(g);
  if (inv.n < 3) return Make(inv, PremiseFailed{PremiseFailure::kOrderBelow3});
  if (inv.kappa < 2) return Make(inv, PremiseFailed{PremiseFailure::kConnectivityBelow2});
  if (inv.m > inv.kappa) return Make(inv, PremiseFailed{PremiseFailure::kMatchingExceedsConnectivity});

  HamiltonCertificate cert = HamiltonianCycle(g);
  if (auto* cycle = std::get_if<HamiltonCycle>(&cert)) return Make(inv, ConclusionHamiltonian{std::move(*cycle)});
  if (auto witness = RecognizeFamilyF(g)) return Make(inv, ConclusionFamilyF{std::move(*witness)});
  return Make(inv, Counterexample{});
}

TheoremVerdict VerifyStrictCorollary(const Graph& g) {
  const Invariants inv = Measure(g);
  if (inv.n < 3) return Make(inv, PremiseFailed{PremiseFailure::kOrderBelow3});
  if (inv.kappa < 2) return Make(inv, PremiseFailed{PremiseFailure::kConnectivityBelow2});
  if (inv.m > inv.kappa) return Make(inv, PremiseFailed{PremiseFailure::kMatchingExceedsConnectivity});
  if (inv.m == inv.kappa) return Make(inv, PremiseFailed{PremiseFailure::kMatchingNotBelowConnectivity});

  HamiltonCertificate cert = HamiltonianCycle(g);
  if (auto* cycle = std::get_if<HamiltonCycle>(&cert)) return Make(inv, ConclusionHamiltonian{std::move(*cycle)});
  return Make(inv, Counterexample{});
}

std::string CheckVerdict(const Graph& g, const TheoremVerdict& v) {
  const int n = g.num_vertices();
  const int kappa = VertexConnectivity(g);
  const int m = MatchingNumber(g);
  if (v.n != n || v.kappa != kappa || v.m != m) {
    return "stored (n, m, kappa) = (" + std::to_string(v.n) + ", " + std::to_string(v.m) + ", " +
           std::to_string(v.kappa) + ") but recomputed (" + std::to_string(n) + ", " + std::to_string(m) + ", " +
           std::to_string(kappa) + ")";
  }
  const bool premise = n >= 3 && kappa >= 2 && m <= kappa;
  switch (KindOf(v)) {
    case VerdictKind::kPremiseFailed:
      switch (std::get<PremiseFailed>(v.kind).reason) {
        case PremiseFailure::kOrderBelow3:
          return n < 3 ? "" : "n >= 3 but reported too small";
        case PremiseFailure::kConnectivityBelow2:
          return n >= 3 && kappa < 2 ? "" : "kappa reason inconsistent";
        case PremiseFailure::kMatchingExceedsConnectivity:
          return n >= 3 && kappa >= 2 && m > kappa ? "" : "m > kappa does not hold";
        case PremiseFailure::kMatchingNotBelowConnectivity:
          return premise && m == kappa ? "" : "m = kappa does not hold";
      }
      return "unknown premise failure";
    case VerdictKind::kHamiltonian: {
      if (!premise) return "premise fails but a conclusion was reported";
      return CheckHamiltonCycle(g, std::get<ConclusionHamiltonian>(v.kind).cycle.order);
    }
    case VerdictKind::kFamilyF: {
      if (!premise) return "premise fails but a conclusion was reported";
      return CheckFamilyFWitness(g, std::get<ConclusionFamilyF>(v.kind).witness);
    }
    case VerdictKind::kCounterexample:
      if (!premise) return "counterexample outside the premise";
      if (IsHamiltonian(g)) return "counterexample is Hamiltonian";
      if (RecognizeFamilyF(g)) return "counterexample belongs to family F";
      return {};
  }
  return "unknown verdict";
}

}  // namespace hamverify
