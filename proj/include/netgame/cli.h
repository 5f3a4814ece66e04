// Copyright 2026 The Netgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETGAME_CLI_H_
#define NETGAME_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "netgame/error.h"

namespace netgame::cli {

// Exit-code contract of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kNotEquilibrium = 1,
  kParseError = 2,
  kNotAlphaRouted = 3,
  kBoundary = 4,
  kBudgetExceeded = 5,
};

int ExitCodeFor(ErrorCode code);

// Runs one invocation; args[0] is the program name. Reports go to `out`,
// diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace netgame::cli

#endif  // NETGAME_CLI_H_
