// Copyright 2026 The gdiscord Authors
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

#ifndef GDISCORD_TOOLS_CLI_HPP
#define GDISCORD_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gdiscord::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kValidation = 2,
  kOutOfFamily = 3,
  kNumerical = 4,
};

/// Runs one command line (without the program name). Results go to `out`;
/// failures produce a single "error: <kind>: <message>" line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdiscord::cli

#endif  // GDISCORD_TOOLS_CLI_HPP
