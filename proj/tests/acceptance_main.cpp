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

#include <iostream>

#include "acceptance.hpp"

int main() {
  using namespace gdiscord::verify;
  bool ok = true;
  for (const auto& results : {run_acceptance(), run_invariants()}) {
    for (const CheckResult& r : results) {
      print_result(std::cout, r);
      std::cout.flush();
      ok = ok && r.passed;
    }
  }
  return ok ? 0 : 1;
}
