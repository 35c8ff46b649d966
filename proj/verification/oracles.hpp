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

#ifndef GDISCORD_VERIFICATION_ORACLES_HPP
#define GDISCORD_VERIFICATION_ORACLES_HPP

// Reference computations that share no code path with the library routines
// they check: Fock-basis sums, generic eigensolvers, full-matrix inverses and
// exhaustive scans.

#include <optional>

#include "gdiscord/family.hpp"
#include "gdiscord/symplectic.hpp"

namespace gdiscord::oracle {

/// -sum_n p_n log2 p_n for the thermal distribution p_n = nbar^n/(nbar+1)^(n+1),
/// nbar = (x - 1)/2, truncated once the tail mass drops below 1e-16.
double thermal_entropy_fock(double x);

/// Moduli of the eigenvalues of i Omega V from a generic complex eigensolver,
/// paired and averaged.
SymplecticSpectrum symplectic_spectrum_eigen(const Mat4& v);

/// Conditional CM of mode A given a noisy readout k = x_B + noise(V0) of mode
/// B, from the inverse of the full joint covariance: ((Sigma^{-1})_AA)^{-1}.
Mat2 schur_conditional_cm(const Mat4& v, const Mat2& v0);

/// Feasible tau range at fixed (a, b, r) by scanning tau on a uniform grid of
/// spacing `step` over [-lim, lim] and testing eta(tau) >= |1 - tau| directly
/// from the product theta(r) theta(1/r) = a. Empty when nothing is feasible.
std::optional<TauInterval> tau_bounds_scan(double a, double b, double r, double step = 1e-4,
                                           double lim = 50.0);

struct GridWitness {
  FamilyParams params;
  double error = 0.0;
};

/// Best family witness for a normal form found by exhaustive search over a
/// grid in (r, tau) of the given resolution (eta solved from a at each node),
/// both EPR signs. The error is the max-abs forward mismatch on (c, c').
std::optional<GridWitness> membership_grid(const NormalFormCM& nf, double resolution = 1e-3);

}  // namespace gdiscord::oracle

#endif  // GDISCORD_VERIFICATION_ORACLES_HPP
