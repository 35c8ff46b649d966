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

#include "gdiscord/entropy.hpp"

#include <cmath>
#include <string>

#include "gdiscord/errors.hpp"

namespace gdiscord {

double h(double x, double clamp) {
  if (!(x >= 1.0 - clamp)) {
    throw DomainError("entropy function needs x >= 1, got " + std::to_string(x));
  }
  if (x <= 1.0) return 0.0;
  const double plus = 0.5 * (x + 1.0);
  const double minus = 0.5 * (x - 1.0);
  return plus * std::log2(plus) - minus * std::log2(minus);
}

double entropy_single_mode(const Mat2& v, double clamp) {
  const double det = v.determinant();
  if (!(det > 0.0)) {
    throw ValidationError("single-mode CM has non-positive determinant");
  }
  return h(std::sqrt(det), clamp);
}

double entropy_two_mode(const TwoModeCM& v, double tol) {
  const auto diag = validate_bona_fide(v, tol);
  if (!diag) throw ValidationError("state is not bona fide: " + diag.reason);
  const auto s = symplectic_spectrum(v);
  return h(s.nu_minus, tol) + h(s.nu_plus, tol);
}

double mutual_information(const TwoModeCM& v, double tol) {
  return entropy_single_mode(v.A(), tol) + entropy_single_mode(v.B(), tol) -
         entropy_two_mode(v, tol);
}

}  // namespace gdiscord
