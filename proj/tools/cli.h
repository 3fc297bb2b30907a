// Copyright 2026 The ckasim Authors
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

#ifndef CKASIM_TOOLS_CLI_H
#define CKASIM_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace ckasim {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitBadArguments = 2,
    kExitSimulationFailed = 3,
    kExitInconclusive = 4,
};

/// Runs the command line `args` (without the program name). Regular output
/// goes to `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ckasim

#endif
