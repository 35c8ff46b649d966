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

#ifndef GDISCORD_REMOTE_PREP_HPP
#define GDISCORD_REMOTE_PREP_HPP

#include <complex>

#include "gdiscord/symplectic.hpp"

namespace gdiscord {

/// Rank-one Gaussian POVM on one mode: projection onto displaced copies of a
/// pure seed with CM V0 = R(phi) diag(u, 1/u) R(phi)^T.
///
/// u = 1 is heterodyne detection. The homodyne limits are represented
/// exactly: u = 0 measures the quadrature along R(phi) (1, 0)^T and
/// u = +inf the one along R(phi) (0, 1)^T. phi is reduced to [0, pi).
class GaussianMeasurement {
 public:
  /// Throws DomainError for u < 0, NaN, or non-finite phi.
  GaussianMeasurement(double u, double phi);

  static GaussianMeasurement heterodyne() { return {1.0, 0.0}; }
  /// Homodyne detection of the quadrature cos(phi) q + sin(phi) p.
  static GaussianMeasurement homodyne(double phi) { return {0.0, phi}; }

  /// Builds the measurement from a seed CM. Mixed seeds (det V0 != 1 beyond
  /// `tol`) and non-positive seeds are rejected with DomainError.
  static GaussianMeasurement from_seed_cm(const Mat2& v0, double tol = 1e-9);

  double u() const { return u_; }
  double phi() const { return phi_; }

  bool is_heterodyne() const { return u_ == 1.0; }
  bool is_homodyne() const;

  /// V0; throws DomainError in the homodyne limits where it diverges.
  Mat2 seed_cm() const;

  /// (B + V0)^{-1}, or its rank-one limit e e^T / (e^T B e) for homodyne,
  /// e being the measured quadrature direction. Throws NumericalFailure
  /// when the inverse does not exist.
  Mat2 outcome_precision(const Mat2& b) const;

 private:
  double u_;
  double phi_;
};

struct SingleModeState {
  Vec2 mean = Vec2::Zero();
  Mat2 cm = Mat2::Identity();
};

/// Post-measurement state of the unmeasured mode.
using ConditionalState = SingleModeState;

/// Gaussian law of the outcome k: mean x_B, covariance B + V0.
struct OutcomeDistribution {
  Vec2 mean = Vec2::Zero();
  Mat2 cov = Mat2::Identity();

  /// Probability density at k.
  double density(const Vec2& k) const;
};

/// Law of the outcome of measuring mode B. Homodyne measurements have no
/// two-dimensional density and are rejected with DomainError.
OutcomeDistribution outcome_distribution(const TwoModeCM& v, const Vec4& mean_ab,
                                         const GaussianMeasurement& m);

/// Outcome-independent conditional CM of mode A after measuring B:
/// A - C (B + V0)^{-1} C^T.
Mat2 conditional_cm(const TwoModeCM& v, const GaussianMeasurement& m);

/// Linear map L of the conditional mean, x_{A|k} = x_A - L (x_B - k), with
/// L = C (B + V0)^{-1}.
Mat2 conditional_mean_map(const TwoModeCM& v, const GaussianMeasurement& m);

/// State of mode A given outcome k (real (q, p) convention) on mode B.
ConditionalState condition_on_outcome(const TwoModeCM& v, const Vec4& mean_ab,
                                      const GaussianMeasurement& m,
                                      const Vec2& k);

/// State of mode B given outcome k on mode A (A <-> B, C -> C^T).
ConditionalState conditioning_on_mode_A(const TwoModeCM& v, const Vec4& mean_ab,
                                        const GaussianMeasurement& m,
                                        const Vec2& k);

/// Squeezing r = (1 + u mu) / (u + mu) of the states remotely prepared by
/// measuring one mode of an EPR state of variance mu. u = 0 gives 1/mu and
/// u = +inf gives mu. Throws DomainError if mu < 1 or u < 0.
double epr_squeezing_range(double mu, double u);

/// Tr(rho rho0) for two single-mode Gaussian states:
/// 2 exp(-d^T (V + V0)^{-1} d / 2) / sqrt(det(V + V0)), d = mean - mean0.
double gaussian_overlap(const SingleModeState& s1, const SingleModeState& s2);

/// Complex amplitude alpha = (q + i p) / 2 of a real outcome vector.
std::complex<double> to_complex_amplitude(const Vec2& k);
Vec2 from_complex_amplitude(std::complex<double> alpha);

}  // namespace gdiscord

#endif  // GDISCORD_REMOTE_PREP_HPP
