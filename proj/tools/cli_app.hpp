// Copyright 2026 The tropnev Authors.
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

// Command-line front end: sweep, verify, solve and plot.

#ifndef TROPNEV_TOOLS_CLI_APP_HPP_
#define TROPNEV_TOOLS_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tropnev {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Environment variable overriding the default verification tolerance.
inline constexpr const char* kToleranceEnv = "TROPNEV_TOL";

// Theorem ids accepted by `verify` (plus the alias "smt" for second-main).
const std::vector<std::string>& theorem_ids();

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tropnev

#endif  // TROPNEV_TOOLS_CLI_APP_HPP_
