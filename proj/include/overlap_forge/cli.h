// Copyright 2026 The overlap-forge Authors
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

#ifndef OVERLAP_FORGE_CLI_H
#define OVERLAP_FORGE_CLI_H

#include <ostream>
#include <string>

namespace overlap_forge {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitIo = 3,
  kExitCheckFailed = 4,
};

/// Accepts radians ("1.2") or multiples of pi ("0.6pi", "-pi").
/// Throws DomainError on malformed text.
double parse_phase(const std::string& text);

/// Entry point of the overlap-forge command line tool.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_CLI_H
