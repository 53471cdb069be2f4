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

#ifndef HAMVERIFY_TOOLS_CLI_H_
#define HAMVERIFY_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "hamverify/scan.h"

namespace hamverify::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitError = 2;

struct Hooks {
  // Used by `check` and `scan` (non-strict); tests swap it to inject
  // verdicts.
  Verifier verifier = VerifyTheorem;
};

// Runs one invocation. `args` excludes the program name. Never throws;
// every failure maps to an exit code.
int Run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace hamverify::cli

#endif  // HAMVERIFY_TOOLS_CLI_H_
