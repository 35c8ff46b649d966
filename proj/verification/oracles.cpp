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

#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

namespace gdiscord::oracle {

namespace {

// eta >= 0 solving (|tau| b / r + eta)(|tau| b r + eta) = a^2, the product of
// the diagonal A-block entries after S(r)^{-1} and the channel.
std::optional<double> noise_for_variance(double a, double b, double r, double tau) {
  const double t = std::abs(tau) * b;
  const double p = t * (r + 1.0 / r);
  const double q = t * t - a * a;
  const double disc = p * p - 4.0 * q;
  if (disc < 0.0) return std::nullopt;
  const double eta = 0.5 * (-p + std::sqrt(disc));
  if (eta < 0.0) return std::nullopt;
  return eta;
}

}  // namespace

double thermal_entropy_fock(double x) {
  const double nbar = 0.5 * (x - 1.0);
  if (nbar <= 0.0) return 0.0;
  const double log_nbar = std::log(nbar);
  const double log_np1 = std::log1p(nbar);
  const double ratio = nbar / (nbar + 1.0);
  double sum = 0.0;
  double tail = 1.0;
  for (int n = 0; tail > 1e-16; ++n) {
    const double log_p = n * log_nbar - (n + 1) * log_np1;
    const double p = std::exp(log_p);
    sum -= p * log_p;
    tail *= ratio;
  }
  return sum / std::log(2.0);
}

SymplecticSpectrum symplectic_spectrum_eigen(const Mat4& v) {
  const Eigen::Matrix4cd m =
      std::complex<double>(0.0, 1.0) * (omega_two_mode() * v).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m, false);
  std::array<double, 4> mods{};
  for (int i = 0; i < 4; ++i) mods[i] = std::abs(es.eigenvalues()(i));
  std::sort(mods.begin(), mods.end());
  return {0.5 * (mods[0] + mods[1]), 0.5 * (mods[2] + mods[3])};
}

Mat2 schur_conditional_cm(const Mat4& v, const Mat2& v0) {
  Mat4 joint = v;
  joint.block<2, 2>(2, 2) += v0;
  const Mat4 precision = joint.inverse();
  return precision.block<2, 2>(0, 0).inverse();
}

std::optional<TauInterval> tau_bounds_scan(double a, double b, double r, double step,
                                           double lim) {
  std::optional<TauInterval> out;
  const long steps = static_cast<long>(std::llround(lim / step));
  for (long i = -steps; i <= steps; ++i) {
    const double tau = i * step;
    const auto eta = noise_for_variance(a, b, r, tau);
    if (!eta || *eta < std::abs(1.0 - tau)) continue;
    if (!out) {
      out = TauInterval{tau, tau};
    } else {
      out->tau_min = std::min(out->tau_min, tau);
      out->tau_max = std::max(out->tau_max, tau);
    }
  }
  return out;
}

std::optional<GridWitness> membership_grid(const NormalFormCM& nf, double resolution) {
  const double a = nf.a;
  const double b = nf.b;
  if (b <= 1.0) return std::nullopt;
  std::optional<GridWitness> best;
  const double tau_lim = a / b;
  const long r_steps = std::max<long>(1, std::lround((b - 1.0 / b) / resolution));
  const long t_steps = std::max<long>(1, std::lround(tau_lim / resolution));
  for (long i = 0; i <= r_steps; ++i) {
    const double r = 1.0 / b + (b - 1.0 / b) * static_cast<double>(i) / r_steps;
    for (long j = -t_steps; j <= t_steps; ++j) {
      const double tau = tau_lim * static_cast<double>(j) / t_steps;
      const auto eta = noise_for_variance(a, b, r, tau);
      if (!eta || *eta < std::abs(1.0 - tau)) continue;
      // A-block diag(x, y) and C-block diag(cx, cy) after S(r)^{-1} and the
      // channel; S(xi) with xi = sqrt(y / x) equalises the A-block.
      const double t = std::abs(tau);
      const double x = t * b / r + *eta;
      const double y = t * b * r + *eta;
      const double xi = std::sqrt(y / x);
      const double cx = std::sqrt((b * b - 1.0) * t / r);
      const double cy = -(tau < 0.0 ? -1.0 : 1.0) * std::sqrt((b * b - 1.0) * t * r);
      for (int s : {1, -1}) {
        const double c = s * cx * std::sqrt(xi);
        const double cp = s * cy / std::sqrt(xi);
        const double err = std::max(std::abs(c - nf.c), std::abs(cp - nf.cp));
        if (!best || err < best->error) {
          best = GridWitness{{b, r, tau, *eta, s > 0 ? EprSign::plus : EprSign::minus}, err};
        }
      }
    }
  }
  return best;
}

}  // namespace gdiscord::oracle
