// Copyright 2026 The Fermat Reals Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermat::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kEvalError = 3,
  kIoError = 4,
};

/// Runs `fermat <subcommand> [args]`. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`; the return value is the
/// process exit code.
///
/// Subcommands: eval canon cmp order nilpotent diff prodzero iota plot.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermat::cli
