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

#ifndef GDISCORD_VERIFICATION_RANDOM_STATES_HPP
#define GDISCORD_VERIFICATION_RANDOM_STATES_HPP

#include <random>

#include "gdiscord/family.hpp"
#include "gdiscord/symplectic.hpp"

namespace gdiscord::testing {

using Rng = std::mt19937_64;

/// Squeezed thermal normal form V(a, b, c, -c) with a in [1, 11], b in (1, 11]
/// and c uniform in the physical range; one draw in ten sits on the boundary
/// c^2 = ab - 1 - |a - b|.
NormalFormCM random_squeezed_thermal(Rng& rng);

/// Family parameters with b in (1, 8], r log-uniform on [1/b, b],
/// tau in [-4, 4], eta >= |1 - tau| (on the boundary one draw in five).
FamilyParams random_family_params(Rng& rng);

/// Generic bona fide CM: S (nu_1 I (+) nu_2 I) S^T for a random two-mode
/// symplectic S built from local squeezers, rotations, a beam splitter and a
/// two-mode squeezer.
TwoModeCM random_bona_fide_cm(Rng& rng);

/// Random local symplectic S(r) R(phi).
Mat2 random_local_symplectic(Rng& rng);

}  // namespace gdiscord::testing

#endif  // GDISCORD_VERIFICATION_RANDOM_STATES_HPP
