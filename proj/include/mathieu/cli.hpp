// Copyright 2026 The Mathieu Series Authors
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

/// \file cli.hpp
/// \brief The `mathieu` command line: eval, predict, sweep and verify.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mathieu {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParameter = 2,
  kExitResource = 3,
  kExitPrecondition = 4,
};

inline constexpr const char* kVersion = "0.1.0";

/// Runs the command line with args[0] as the program name. Data goes to
/// `out` (or to --out), messages to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace mathieu
