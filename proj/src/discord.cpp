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

#include "gdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// u in [0, inf] <-> w in [0, 1]; the homodyne limits sit at the endpoints.
double u_from_w(double w) {
  if (w <= 0.0) return 0.0;
  if (w >= 1.0) return kInf;
  return w / (1.0 - w);
}

double w_from_u(double u) {
  if (u == kInf) return 1.0;
  return u / (1.0 + u);
}

class ConditionalEntropyObjective {
 public:
  ConditionalEntropyObjective(const TwoModeCM& v, double clamp) : v_(v), clamp_(clamp) {}

  double operator()(double w, double phi) const {
    return conditional_entropy_measured(v_, GaussianMeasurement(u_from_w(w), phi), clamp_);
  }

 private:
  const TwoModeCM& v_;
  double clamp_;
};

// Golden-section minimization of f on [lo, hi]; returns (x, f(x)).
template <typename F>
std::pair<double, double> golden_section(F&& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

DiscordReport assemble(const TwoModeCM& v, double s_min, DiscordMethod method,
                       double tol = kBonaFideTolerance) {
  DiscordReport r;
  r.s_a = entropy_single_mode(v.A(), tol);
  r.s_b = entropy_single_mode(v.B(), tol);
  r.s_ab = entropy_two_mode(v, tol);
  r.mutual_info = r.s_a + r.s_b - r.s_ab;
  r.s_min_cond = s_min;
  r.classical_corr = r.s_a - s_min;
  r.discord = s_min - (r.s_ab - r.s_b);
  r.method = method;
  return r;
}

}  // namespace

const char* to_string(DiscordMethod m) {
  return m == DiscordMethod::closed_form ? "closed_form" : "numeric_scan";
}

double conditional_entropy_measured(const TwoModeCM& v, const GaussianMeasurement& m,
                                    double clamp) {
  const double det = conditional_cm(v, m).determinant();
  if (!(det > 0.0)) {
    throw NumericalFailure("conditional CM is not positive");
  }
  return h(std::sqrt(det), clamp);
}

ConditionalEntropyMinimum minimize_conditional_entropy(const TwoModeCM& v,
                                                       const ScanOptions& opts) {
  const ConditionalEntropyObjective f(v, opts.bona_fide_tolerance);

  std::vector<double> ws;
  ws.reserve(opts.u_points + 2);
  ws.push_back(0.0);
  const double log_lo = std::log10(opts.u_min);
  const double log_hi = std::log10(opts.u_max);
  for (int i = 0; i < opts.u_points; ++i) {
    const double t = opts.u_points == 1 ? 0.0 : static_cast<double>(i) / (opts.u_points - 1);
    ws.push_back(w_from_u(std::pow(10.0, log_lo + t * (log_hi - log_lo))));
  }
  ws.push_back(1.0);

  const double phi_step = std::numbers::pi / opts.phi_points;
  std::size_t best_w = 0;
  double best_phi = 0.0;
  double best = kInf;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (int j = 0; j < opts.phi_points; ++j) {
      const double phi = j * phi_step;
      const double s = f(ws[i], phi);
      if (s < best) {
        best = s;
        best_w = i;
        best_phi = phi;
      }
    }
  }

  const double w_lo0 = best_w == 0 ? 0.0 : ws[best_w - 1];
  const double w_hi0 = best_w + 1 == ws.size() ? 1.0 : ws[best_w + 1];
  const double w_half = 0.5 * (w_hi0 - w_lo0);
  double w_star = ws[best_w];
  double phi_star = best_phi;
  double w_lo = w_lo0;
  double w_hi = w_hi0;

  for (int round = 0; round < opts.max_refine_rounds; ++round) {
    const double before = best;
    const auto [w_new, s_w] = golden_section([&](double w) { return f(w, phi_star); },
                                             w_lo, w_hi, opts.parameter_tolerance);
    if (s_w < best) {
      best = s_w;
      w_star = w_new;
    }
    const auto [phi_new, s_phi] =
        golden_section([&](double phi) { return f(w_star, phi); }, phi_star - phi_step,
                       phi_star + phi_step, opts.parameter_tolerance);
    if (s_phi < best) {
      best = s_phi;
      phi_star = phi_new;
    }
    if (!(before - best > 1e-15)) break;
    w_lo = std::max(0.0, w_star - w_half);
    w_hi = std::min(1.0, w_star + w_half);
  }

  ConditionalEntropyMinimum out;
  out.measurement = GaussianMeasurement(u_from_w(w_star), phi_star);
  out.s_min = best;
  return out;
}

DiscordReport gaussian_discord_closed_form(const FamilyParams& fp) {
  const TwoModeCM v = embed_normal_form(family_cm_from_params(fp));
  return assemble(v, min_output_entropy(fp.channel()), DiscordMethod::closed_form);
}

DiscordReport gaussian_discord_numeric(const TwoModeCM& v, const ScanOptions& opts) {
  const auto diag = validate_bona_fide(v, opts.bona_fide_tolerance);
  if (!diag) throw ValidationError("state is not bona fide: " + diag.reason);
  const auto min = minimize_conditional_entropy(v, opts);
  DiscordReport r = assemble(v, min.s_min, DiscordMethod::numeric_scan,
                              opts.bona_fide_tolerance);
  r.witness = min.measurement;
  return r;
}

}  // namespace gdiscord
