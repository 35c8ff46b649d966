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

#ifndef GDISCORD_ENTROPY_HPP
#define GDISCORD_ENTROPY_HPP

#include "gdiscord/symplectic.hpp"

namespace gdiscord {

/// Slack below x = 1 that h() clamps to zero instead of rejecting.
inline constexpr double kEntropyClampTolerance = 1e-9;

/// Von Neumann entropy (bits) of a single-mode thermal state with variance x:
/// h(x) = (x+1)/2 log2((x+1)/2) - (x-1)/2 log2((x-1)/2).
/// Values in [1 - clamp, 1] return 0; below that throws DomainError.
double h(double x, double clamp = kEntropyClampTolerance);

/// h(sqrt(det V)) for a single-mode CM.
double entropy_single_mode(const Mat2& v, double clamp = kEntropyClampTolerance);

/// h(nu_-) + h(nu_+). Throws ValidationError if V is not bona fide.
double entropy_two_mode(const TwoModeCM& v, double tol = kBonaFideTolerance);

/// S(A) + S(B) - S(AB).
double mutual_information(const TwoModeCM& v, double tol = kBonaFideTolerance);

}  // namespace gdiscord

#endif  // GDISCORD_ENTROPY_HPP
