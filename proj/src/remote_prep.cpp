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

#include "gdiscord/remote_prep.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double reduce_angle(double phi) {
  double r = std::fmod(phi, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  if (r >= std::numbers::pi) r = 0.0;
  return r;
}

Vec2 quadrature_direction(const GaussianMeasurement& m) {
  const Mat2 rot = rotation_matrix(m.phi());
  return m.u() == 0.0 ? Vec2(rot.col(0)) : Vec2(rot.col(1));
}

Mat2 symmetrized(const Mat2& m) { return 0.5 * (m + m.transpose()); }

}  // namespace

GaussianMeasurement::GaussianMeasurement(double u, double phi) : u_(u) {
  if (std::isnan(u) || u < 0.0) {
    throw DomainError("measurement squeezing u must be in [0, inf], got " +
                      std::to_string(u));
  }
  if (!std::isfinite(phi)) {
    throw DomainError("measurement angle must be finite");
  }
  phi_ = reduce_angle(phi);
}

GaussianMeasurement GaussianMeasurement::from_seed_cm(const Mat2& v0, double tol) {
  if (!v0.allFinite() || std::abs(v0(0, 1) - v0(1, 0)) > 1e-12 * v0.cwiseAbs().maxCoeff()) {
    throw DomainError("measurement seed CM must be finite and symmetric");
  }
  const double det = v0.determinant();
  if (!(v0.trace() > 0.0) || std::abs(det - 1.0) > tol) {
    throw DomainError("measurement seed must be a pure Gaussian state (det V0 = 1), got det " +
                      std::to_string(det));
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(symmetrized(v0));
  // Eigenvalues ascending: V0 = R diag(u, 1/u) R^T with u the larger one along
  // the first column of R.
  const Vec2 dir = es.eigenvectors().col(1);
  const double u = es.eigenvalues()(1);
  return {u, std::atan2(dir(1), dir(0))};
}

bool GaussianMeasurement::is_homodyne() const { return u_ == 0.0 || u_ == kInf; }

Mat2 GaussianMeasurement::seed_cm() const {
  if (is_homodyne()) {
    throw DomainError("homodyne measurement has no finite seed CM");
  }
  const Mat2 rot = rotation_matrix(phi_);
  return rot * Eigen::Vector2d(u_, 1.0 / u_).asDiagonal() * rot.transpose();
}

Mat2 GaussianMeasurement::outcome_precision(const Mat2& b) const {
  if (is_homodyne()) {
    const Vec2 e = quadrature_direction(*this);
    const double var = e.dot(b * e);
    if (!(var > 0.0)) {
      throw NumericalFailure("homodyne limit: measured quadrature has zero variance");
    }
    return e * e.transpose() / var;
  }
  const Mat2 sum = b + seed_cm();
  const double det = sum.determinant();
  if (!(det > 0.0)) {
    throw NumericalFailure("B + V0 is singular");
  }
  return symmetrized(sum.inverse());
}

double OutcomeDistribution::density(const Vec2& k) const {
  const Vec2 d = mean - k;
  const double quad = d.dot(cov.inverse() * d);
  return std::exp(-0.5 * quad) / (2.0 * std::numbers::pi * std::sqrt(cov.determinant()));
}

OutcomeDistribution outcome_distribution(const TwoModeCM& v, const Vec4& mean_ab,
                                         const GaussianMeasurement& m) {
  if (m.is_homodyne()) {
    throw DomainError("homodyne outcomes have no two-dimensional density");
  }
  OutcomeDistribution out;
  out.mean = mean_ab.tail<2>();
  out.cov = symmetrized(v.B() + m.seed_cm());
  return out;
}

Mat2 conditional_cm(const TwoModeCM& v, const GaussianMeasurement& m) {
  const Mat2 c = v.C();
  return symmetrized(v.A() - c * m.outcome_precision(v.B()) * c.transpose());
}

Mat2 conditional_mean_map(const TwoModeCM& v, const GaussianMeasurement& m) {
  return v.C() * m.outcome_precision(v.B());
}

ConditionalState condition_on_outcome(const TwoModeCM& v, const Vec4& mean_ab,
                                      const GaussianMeasurement& m,
                                      const Vec2& k) {
  const Mat2 precision = m.outcome_precision(v.B());
  const Mat2 c = v.C();
  const Vec2 d = Vec2(mean_ab.tail<2>()) - k;
  ConditionalState out;
  out.mean = Vec2(mean_ab.head<2>()) - c * (precision * d);
  out.cm = symmetrized(v.A() - c * precision * c.transpose());
  return out;
}

ConditionalState conditioning_on_mode_A(const TwoModeCM& v, const Vec4& mean_ab,
                                        const GaussianMeasurement& m,
                                        const Vec2& k) {
  Vec4 swapped_mean;
  swapped_mean << mean_ab.tail<2>(), mean_ab.head<2>();
  return condition_on_outcome(v.swapped(), swapped_mean, m, k);
}

double epr_squeezing_range(double mu, double u) {
  if (!(mu >= 1.0)) {
    throw DomainError("EPR variance mu must be >= 1, got " + std::to_string(mu));
  }
  if (std::isnan(u) || u < 0.0) {
    throw DomainError("measurement squeezing u must be in [0, inf]");
  }
  if (u == kInf) return mu;
  if (u == 0.0) return 1.0 / mu;
  return (1.0 + u * mu) / (u + mu);
}

double gaussian_overlap(const SingleModeState& s1, const SingleModeState& s2) {
  const Mat2 sum = s1.cm + s2.cm;
  const Vec2 d = s1.mean - s2.mean;
  const double quad = d.dot(sum.inverse() * d);
  return 2.0 * std::exp(-0.5 * quad) / std::sqrt(sum.determinant());
}

std::complex<double> to_complex_amplitude(const Vec2& k) {
  return {0.5 * k(0), 0.5 * k(1)};
}

Vec2 from_complex_amplitude(std::complex<double> alpha) {
  return {2.0 * alpha.real(), 2.0 * alpha.imag()};
}

}  // namespace gdiscord
