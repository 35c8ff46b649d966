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

#ifndef GDISCORD_VERIFICATION_ACCEPTANCE_HPP
#define GDISCORD_VERIFICATION_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace gdiscord::verify {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Threads for the sampler; 0 = hardware concurrency.
  unsigned threads = 0;
  std::uint64_t seed = 20140107;
};

/// The nine acceptance criteria, in order. Each runs at its full stated size
/// and tolerance.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts = {});

/// Randomized invariant checks of the individual modules.
std::vector<CheckResult> run_invariants(const VerifyOptions& opts = {});

/// Single criterion by number (1-9).
CheckResult run_criterion(int number, const VerifyOptions& opts = {});

/// "PASS <id> <name> (<seconds>s): <detail>" for one result.
void print_result(std::ostream& os, const CheckResult& r);

}  // namespace gdiscord::verify

#endif  // GDISCORD_VERIFICATION_ACCEPTANCE_HPP
