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

#ifndef GDISCORD_FAMILY_HPP
#define GDISCORD_FAMILY_HPP

#include "gdiscord/channels.hpp"
#include "gdiscord/symplectic.hpp"

namespace gdiscord {

/// Witness of the decomposition
///   rho_AB = (S_xi E S_r^{-1} (x) I)(sigma_aB)
/// where sigma_aB is an EPR state of variance b and correlation type `sign`,
/// S_x are single-mode squeezers and E the extended channel (tau, eta).
///
/// The output squeezing xi is derived, never stored.
struct FamilyParams {
  double b = 1.0;
  double r = 1.0;
  double tau = 0.0;
  double eta = 1.0;
  EprSign sign = EprSign::plus;

  /// theta(x) = sqrt(eta x + |tau| b).
  double theta(double x) const;
  /// xi = r theta(1/r) / theta(r).
  double xi() const;
  GaussianChannel channel() const { return {tau, eta}; }
};

/// Throws DomainError (b < 1, r outside [1/b, b]) or InvalidChannelParams.
void validate(const FamilyParams& fp);

/// Inverts a = tau b + eta, c = sqrt(tau (b^2 - 1)) for a squeezed thermal
/// state V(a, b, c, -c). Throws DomainError if b = 1 with c != 0 and
/// NotSqueezedThermalForm if c^2 > ab - 1 - |a - b| or a, b < 1.
GaussianChannel decompose_squeezed_thermal(double a, double b, double c);

/// Normal form of the family member:
///   a  = theta(r) theta(1/r)
///   c  = +- sqrt(|tau| (b^2 - 1) theta(1/r) / theta(r))
///   c' = -+ sign(tau) sqrt(|tau| (b^2 - 1) theta(r) / theta(1/r))
NormalFormCM family_cm_from_params(const FamilyParams& fp);

/// The same state built by pushing the EPR CM through S(r)^{-1}, the
/// channel and S(xi) as matrices. Independent of the closed formulas above.
TwoModeCM family_cm_via_channels(const FamilyParams& fp);

/// eta such that theta(r) theta(1/r) = a:
///   [sqrt(4 a^2 r^2 + (r^2 - 1)^2 tau^2 b^2) - (1 + r^2) |tau| b] / (2r).
/// Throws DomainError on bad inputs or a negative result.
double eta_from_a(double a, double r, double tau, double b);

struct TauInterval {
  double tau_min = 0.0;
  double tau_max = 0.0;
};

/// Interval of tau for which eta_from_a(a, r, tau, b) >= |1 - tau|.
/// Evaluated in cancellation-free form so the endpoints r = 1/b, b are exact
/// limits. Throws NumericalFailure if the a <= b radicand is negative beyond
/// tolerance.
TauInterval tau_bounds(double a, double b, double r);

/// Measurement squeezing u = (r b - 1) / (b - r) whose remote ensemble the
/// squeezer S_r^{-1} rectifies into coherent states; 0 and +inf at r = 1/b
/// and r = b.
double matched_measurement_u(const FamilyParams& fp);

/// Decomposition witness for a normal-form state, with forward error below
/// 1e-9 max(1, a) on (a, c, c'). b is taken from the state. Throws OutOfFamily when no
/// witness exists.
FamilyParams membership(const NormalFormCM& nf);

/// Max-abs difference between the family CM of `fp` and `nf` over (a, c, c').
double forward_error(const FamilyParams& fp, const NormalFormCM& nf);

}  // namespace gdiscord

#endif  // GDISCORD_FAMILY_HPP
