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

#ifndef GDISCORD_DISCORD_HPP
#define GDISCORD_DISCORD_HPP

#include <optional>

#include "gdiscord/entropy.hpp"
#include "gdiscord/family.hpp"
#include "gdiscord/remote_prep.hpp"
#include "gdiscord/symplectic.hpp"

namespace gdiscord {

enum class DiscordMethod { closed_form, numeric_scan };

const char* to_string(DiscordMethod m);

/// Entropic decomposition of the one-way discord D(A|B) with measurements on
/// mode B. All quantities in bits.
struct DiscordReport {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double mutual_info = 0.0;
  /// Minimum over Gaussian POVMs on B of the average conditional entropy of A.
  double s_min_cond = 0.0;
  /// S(A) - S_min(A|B).
  double classical_corr = 0.0;
  /// S_min(A|B) - S(AB) + S(B).
  double discord = 0.0;
  DiscordMethod method = DiscordMethod::closed_form;
  /// Optimal measurement (u*, phi*), only for the numeric scan.
  std::optional<GaussianMeasurement> witness;
};

/// Average entropy of A after measuring B with `m`. The conditional CM does
/// not depend on the outcome, so this is h(sqrt det(A - C (B + V0)^{-1} C^T)).
double conditional_entropy_measured(const TwoModeCM& v, const GaussianMeasurement& m,
                                    double clamp = kEntropyClampTolerance);

struct ConditionalEntropyMinimum {
  GaussianMeasurement measurement = GaussianMeasurement::heterodyne();
  double s_min = 0.0;
};

/// Grid and refinement policy of the POVM scan.
struct ScanOptions {
  int u_points = 401;
  double u_min = 1e-4;
  double u_max = 1e4;
  int phi_points = 64;
  /// Golden-section termination width on each coordinate.
  double parameter_tolerance = 1e-10;
  int max_refine_rounds = 30;
  /// Slack on nu_minus >= 1 when validating the input; entropies of
  /// variances within this slack below 1 are clamped to zero.
  double bona_fide_tolerance = kBonaFideTolerance;
};

/// Minimizes conditional_entropy_measured over rank-one Gaussian POVMs
/// (u, phi). Scans a logarithmic u grid (plus the exact homodyne limits
/// u = 0 and u = inf) against a uniform phi grid on [0, pi), then refines u
/// and phi alternately with golden-section search. Deterministic: ties keep
/// the first point in (u, phi) lexicographic order.
ConditionalEntropyMinimum minimize_conditional_entropy(const TwoModeCM& v,
                                                       const ScanOptions& opts = {});

/// Closed-form discord of a family member,
///   D = h(b) - h(nu_-) - h(nu_+) + h(|tau| + eta).
DiscordReport gaussian_discord_closed_form(const FamilyParams& fp);

/// Gaussian discord of an arbitrary bona fide state through the POVM scan.
/// Throws ValidationError if `v` is not bona fide.
DiscordReport gaussian_discord_numeric(const TwoModeCM& v, const ScanOptions& opts = {});

}  // namespace gdiscord

#endif  // GDISCORD_DISCORD_HPP
