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

#include "gdiscord/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

constexpr double kRangeTolerance = 1e-12;
constexpr double kBoundarySnap = 1e-9;
constexpr double kForwardTolerance = 1e-9;
constexpr int kMembershipScanPoints = 257;

double sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

// Unchecked eta(r) at fixed (a, tau, b); may be negative.
double eta_raw(double a, double r, double tau, double b) {
  const double t = std::abs(tau) * b;
  const double root = std::sqrt(4.0 * a * a * r * r + (r * r - 1.0) * (r * r - 1.0) * t * t);
  return (root - (1.0 + r * r) * t) / (2.0 * r);
}

// Snaps eta onto the quantum-limited boundary when it undershoots by rounding.
std::optional<double> admissible_eta(double eta, double tau) {
  const double floor = std::abs(1.0 - tau);
  if (eta >= floor) return eta;
  if (eta >= floor - kBoundarySnap * std::max(1.0, std::abs(tau))) return floor;
  return std::nullopt;
}

}  // namespace

double FamilyParams::theta(double x) const {
  return std::sqrt(eta * x + std::abs(tau) * b);
}

double FamilyParams::xi() const { return r * theta(1.0 / r) / theta(r); }

void validate(const FamilyParams& fp) {
  if (!(fp.b >= 1.0) || !std::isfinite(fp.b)) {
    throw DomainError("family: b must be >= 1, got " + std::to_string(fp.b));
  }
  const double lo = 1.0 / fp.b;
  const double hi = fp.b;
  if (!(fp.r >= lo * (1.0 - kRangeTolerance)) || !(fp.r <= hi * (1.0 + kRangeTolerance))) {
    throw DomainError("family: r=" + std::to_string(fp.r) + " outside [1/b, b]");
  }
  (void)fp.channel();
}

GaussianChannel decompose_squeezed_thermal(double a, double b, double c) {
  if (!(a >= 1.0) || !(b >= 1.0)) {
    throw NotSqueezedThermalForm("squeezed thermal state needs a, b >= 1");
  }
  if (b == 1.0 && c != 0.0) {
    throw DomainError("b = 1 admits no correlations (c must be 0)");
  }
  const double c_max_sq = a * b - 1.0 - std::abs(a - b);
  if (c * c > c_max_sq + kBoundarySnap * std::max(1.0, c_max_sq)) {
    throw NotSqueezedThermalForm("c^2=" + std::to_string(c * c) +
                                 " exceeds ab - 1 - |a - b|=" + std::to_string(c_max_sq));
  }
  if (c == 0.0) return {0.0, a};
  const double tau = c * c / (b * b - 1.0);
  const double eta = a - tau * b;
  const auto snapped = admissible_eta(eta, tau);
  if (!snapped) {
    throw NumericalFailure("squeezed thermal decomposition left the physical region");
  }
  return {tau, *snapped};
}

NormalFormCM family_cm_from_params(const FamilyParams& fp) {
  validate(fp);
  const double th_r = fp.theta(fp.r);
  const double th_inv = fp.theta(1.0 / fp.r);
  const double corr = std::abs(fp.tau) * (fp.b * fp.b - 1.0);
  const double s = to_int(fp.sign);
  NormalFormCM nf;
  nf.a = th_r * th_inv;
  nf.b = fp.b;
  nf.c = s * std::sqrt(corr * th_inv / th_r);
  nf.cp = -s * sign_of(fp.tau) * std::sqrt(corr * th_r / th_inv);
  if (corr == 0.0) {
    nf.c = 0.0;
    nf.cp = 0.0;
  }
  return nf;
}

TwoModeCM family_cm_via_channels(const FamilyParams& fp) {
  validate(fp);
  const Mat2 id = Mat2::Identity();
  TwoModeCM v = epr_cm(fp.b, fp.sign);
  v = apply_local(v, squeezer_matrix(1.0 / fp.r), id);
  v = apply_to_mode_A(fp.channel(), v);
  return apply_local(v, squeezer_matrix(fp.xi()), id);
}

double eta_from_a(double a, double r, double tau, double b) {
  if (!(a >= 1.0) || !(b >= 1.0)) {
    throw DomainError("eta_from_a: a and b must be >= 1");
  }
  if (!(r >= (1.0 / b) * (1.0 - kRangeTolerance)) || !(r <= b * (1.0 + kRangeTolerance))) {
    throw DomainError("eta_from_a: r outside [1/b, b]");
  }
  double eta = eta_raw(a, r, tau, b);
  if (eta < 0.0 && eta >= -kBoundarySnap * std::max(1.0, a)) eta = 0.0;
  if (eta < 0.0) {
    throw DomainError("eta_from_a: |tau|=" + std::to_string(std::abs(tau)) +
                      " too large for a=" + std::to_string(a));
  }
  return eta;
}

TauInterval tau_bounds(double a, double b, double r) {
  if (!(a >= 1.0) || !(b >= 1.0)) {
    throw DomainError("tau_bounds: a and b must be >= 1");
  }
  if (!(r >= (1.0 / b) * (1.0 - kRangeTolerance)) || !(r <= b * (1.0 + kRangeTolerance))) {
    throw DomainError("tau_bounds: r outside [1/b, b]");
  }
  const double excess = a * a - 1.0;
  const double gamma_plus = (r + b) * (r * b + 1.0);
  const double gamma_minus = (r - b) * (r * b - 1.0);
  const double lin_plus = b + (b * r + 2.0) * r;
  const double lin_minus = b + (b * r - 2.0) * r;
  const double base = (r * r - 1.0) * (r * r - 1.0) * b * b;
  const double rad_plus = base + 4.0 * a * a * r * gamma_plus;
  const double root_plus = std::sqrt(rad_plus);

  // Roots of gamma tau^2 -+ lin tau + r (1 - a^2) = 0, written as
  // 2 r (a^2 - 1) / (lin + sqrt(rad)) where the textbook form would cancel.
  TauInterval out;
  out.tau_min = excess == 0.0 ? 0.0 : -2.0 * r * excess / (lin_plus + root_plus);
  if (a <= b) {
    double rad_minus = base - 4.0 * a * a * r * gamma_minus;
    if (rad_minus < -1e-9 * std::max(1.0, base)) {
      throw NumericalFailure("tau_bounds: negative radicand " + std::to_string(rad_minus));
    }
    rad_minus = std::max(rad_minus, 0.0);
    out.tau_max = excess == 0.0 ? 0.0 : 2.0 * r * excess / (lin_minus + std::sqrt(rad_minus));
  } else {
    out.tau_max = (lin_plus + root_plus) / (2.0 * gamma_plus);
  }
  return out;
}

double matched_measurement_u(const FamilyParams& fp) {
  validate(fp);
  const double num = fp.r * fp.b - 1.0;
  const double den = fp.b - fp.r;
  if (num <= 0.0) return 0.0;
  if (den <= 0.0) return std::numeric_limits<double>::infinity();
  return num / den;
}

double forward_error(const FamilyParams& fp, const NormalFormCM& nf) {
  const NormalFormCM f = family_cm_from_params(fp);
  return std::max({std::abs(f.a - nf.a), std::abs(f.b - nf.b),
                   std::abs(f.c - nf.c), std::abs(f.cp - nf.cp)});
}

FamilyParams membership(const NormalFormCM& nf) {
  const double a = nf.a;
  const double b = nf.b;
  if (!(a >= 1.0) || !(b >= 1.0)) {
    throw OutOfFamily("membership: a and b must be >= 1");
  }
  const EprSign sign = nf.c < 0.0 ? EprSign::minus : EprSign::plus;

  if (nf.c == 0.0 && nf.cp == 0.0) {
    return {b, 1.0, 0.0, a, EprSign::plus};
  }
  if (nf.c == 0.0 || nf.cp == 0.0 || b == 1.0) {
    throw OutOfFamily("membership: states with c c' = 0 lie outside the family at finite b");
  }

  auto accept = [&](const FamilyParams& fp) -> std::optional<FamilyParams> {
    try {
      if (forward_error(fp, nf) <= kForwardTolerance * std::max(1.0, a)) return fp;
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  if (nf.is_squeezed_thermal(kRangeTolerance * std::max(1.0, std::abs(nf.c)))) {
    try {
      const GaussianChannel ch = decompose_squeezed_thermal(a, b, nf.c);
      if (auto fp = accept({b, 1.0, ch.tau(), ch.eta(), sign})) return *fp;
    } catch (const Error&) {
    }
    throw OutOfFamily("membership: squeezed thermal state is not bona fide");
  }

  // |c c'| = |tau| (b^2 - 1) fixes tau; sign(tau) = -sign(c c').
  const double abs_tau = std::abs(nf.c * nf.cp) / (b * b - 1.0);
  const double tau = nf.c * nf.cp > 0.0 ? -abs_tau : abs_tau;
  const double target = std::log(std::abs(nf.c) / std::abs(nf.cp));

  // log(theta(1/r) / theta(r)) - log|c / c'|, NaN where eta(r) < 0.
  auto mismatch = [&](double r) {
    const double eta = eta_raw(a, r, tau, b);
    if (!(eta >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double num = eta / r + abs_tau * b;
    const double den = eta * r + abs_tau * b;
    return 0.5 * std::log(num / den) - target;
  };
  auto candidate = [&](double r) -> std::optional<FamilyParams> {
    r = std::clamp(r, 1.0 / b, b);
    const auto eta = admissible_eta(eta_raw(a, r, tau, b), tau);
    if (!eta) return std::nullopt;
    return accept({b, r, tau, *eta, sign});
  };

  const double log_lo = -std::log(b);
  const double log_hi = std::log(b);
  std::vector<double> rs(kMembershipScanPoints);
  std::vector<double> gs(kMembershipScanPoints);
  for (int i = 0; i < kMembershipScanPoints; ++i) {
    const double t = static_cast<double>(i) / (kMembershipScanPoints - 1);
    rs[i] = i == 0 ? 1.0 / b : (i == kMembershipScanPoints - 1 ? b : std::exp(log_lo + t * (log_hi - log_lo)));
    gs[i] = mismatch(rs[i]);
  }

  for (int i = 0; i + 1 < kMembershipScanPoints; ++i) {
    double lo = rs[i];
    double hi = rs[i + 1];
    double g_lo = gs[i];
    const double g_hi = gs[i + 1];
    if (std::isnan(g_lo) || std::isnan(g_hi)) continue;
    if (g_lo == 0.0) {
      if (auto fp = candidate(lo)) return *fp;
      continue;
    }
    if ((g_lo < 0.0) == (g_hi < 0.0) && g_hi != 0.0) continue;
    // Bisect to machine precision.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double g_mid = mismatch(mid);
      if (std::isnan(g_mid)) break;
      if ((g_mid < 0.0) == (g_lo < 0.0)) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
      }
    }
    if (auto fp = candidate(0.5 * (lo + hi))) return *fp;
  }

  // A flat mismatch (eta ~ 0) has no sign change; the best scan point may
  // still reproduce the state.
  int best = -1;
  for (int i = 0; i < kMembershipScanPoints; ++i) {
    if (std::isnan(gs[i])) continue;
    if (best < 0 || std::abs(gs[i]) < std::abs(gs[best])) best = i;
  }
  if (best >= 0) {
    if (auto fp = candidate(rs[best])) return *fp;
  }
  throw OutOfFamily("membership: no (r, tau, eta) reproduces the state");
}

}  // namespace gdiscord
