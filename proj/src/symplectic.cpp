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

#include "gdiscord/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

Mat4 direct_sum(const Mat2& x, const Mat2& y) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = x;
  m.block<2, 2>(2, 2) = y;
  return m;
}

// det^{1/4} x^{-1/2}: the local symplectic taking a positive block to
// sqrt(det x) I.
Mat2 scalarizing_symplectic(const Mat2& x) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(x);
  return std::pow(x.determinant(), 0.25) * es.operatorInverseSqrt();
}

// Normal form by explicit local operations: scalarize A and B, then rotate the
// correlation block to diag(s1, +-s2) with its singular values.
NormalFormCM local_reduction(const TwoModeCM& v) {
  const Mat2 c = scalarizing_symplectic(v.A()) * v.C() * scalarizing_symplectic(v.B()).transpose();
  Eigen::JacobiSVD<Mat2> svd(c);
  const auto& s = svd.singularValues();
  NormalFormCM nf;
  nf.a = std::sqrt(v.A().determinant());
  nf.b = std::sqrt(v.B().determinant());
  nf.c = s(0);
  nf.cp = (c.determinant() < 0.0 ? -1.0 : 1.0) * s(1);
  return nf;
}

// `scale` bounds the magnitude of the terms summed into delta; rounding
// residue below 1e-12 of it is treated as zero.
SymplecticSpectrum spectrum_from(double delta, double disc, double det_v, double scale) {
  const double slack = 1e-12 * std::max(1.0, scale);
  if (std::abs(delta) <= slack) delta = std::max(delta, 0.0);
  if (disc < -1e-9 * std::max(1.0, scale * scale)) {
    throw NumericalFailure("symplectic spectrum: negative discriminant " +
                           std::to_string(disc));
  }
  disc = std::max(disc, 0.0);
  if (det_v < 0.0 && det_v >= -slack * std::max(1.0, scale)) det_v = 0.0;
  const double nu_plus_sq = 0.5 * (delta + std::sqrt(disc));
  if (!(nu_plus_sq >= 0.0) || det_v < 0.0) {
    throw NumericalFailure("symplectic spectrum: matrix is not positive");
  }
  if (nu_plus_sq == 0.0) return {0.0, 0.0};
  // nu_-^2 nu_+^2 = det V avoids the cancellation in (D - sqrt(disc)) / 2.
  const double nu_minus_sq = det_v / nu_plus_sq;
  SymplecticSpectrum sp;
  sp.nu_minus = std::sqrt(nu_minus_sq);
  sp.nu_plus = std::sqrt(nu_plus_sq);
  if (sp.nu_minus > sp.nu_plus) std::swap(sp.nu_minus, sp.nu_plus);
  return sp;
}

// D^2 - 4 det V = (a^2 - b^2)^2 + 4 (ac + bc')(bc + ac'), each factor written
// around c + c' so that nearly pure, nearly symmetric states keep their digits.
SymplecticSpectrum normal_form_spectrum(const NormalFormCM& nf) {
  const double a = nf.a;
  const double b = nf.b;
  const double sum = nf.c + nf.cp;
  const double p = a * sum + (b - a) * nf.cp;
  const double q = b * sum + (a - b) * nf.cp;
  const double diff = (a - b) * (a + b);
  const double delta = a * a + b * b + 2.0 * nf.c * nf.cp;
  const double disc = diff * diff + 4.0 * p * q;
  const double det_v = std::fma(-nf.c, nf.c, a * b) * std::fma(-nf.cp, nf.cp, a * b);
  return spectrum_from(delta, disc, det_v, a * a + b * b + 2.0 * std::abs(nf.c * nf.cp));
}

}  // namespace

bool NormalFormCM::is_squeezed_thermal(double tol) const {
  return std::abs(cp + c) <= tol;
}

EprSign epr_sign_from_int(int s) {
  if (s == 1) return EprSign::plus;
  if (s == -1) return EprSign::minus;
  throw DomainError("EPR sign must be +1 or -1, got " + std::to_string(s));
}

TwoModeCM::TwoModeCM() : m_(Mat4::Identity()) {}

TwoModeCM::TwoModeCM(const Mat4& m) {
  if (!m.allFinite()) {
    throw DomainError("covariance matrix has non-finite entries");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    throw DomainError("covariance matrix is not symmetric (max asymmetry " +
                      std::to_string(asym) + ")");
  }
  m_ = 0.5 * (m + m.transpose());
}

TwoModeCM TwoModeCM::from_blocks(const Mat2& a, const Mat2& b, const Mat2& c) {
  Mat4 m;
  m << a, c, c.transpose(), b;
  return TwoModeCM(m);
}

TwoModeCM TwoModeCM::swapped() const {
  return from_blocks(B(), A(), C().transpose());
}

const char* to_string(BonaFideFailure f) {
  switch (f) {
    case BonaFideFailure::none:
      return "none";
    case BonaFideFailure::not_positive_definite:
      return "not_positive_definite";
    case BonaFideFailure::uncertainty_principle:
      return "uncertainty_principle";
    case BonaFideFailure::numerical:
      return "numerical";
  }
  return "unknown";
}

TwoModeCM embed_normal_form(const NormalFormCM& nf) {
  const Mat2 corr = Eigen::Vector2d(nf.c, nf.cp).asDiagonal();
  return TwoModeCM::from_blocks(nf.a * Mat2::Identity(),
                                nf.b * Mat2::Identity(), corr);
}

SymplecticSpectrum symplectic_spectrum(const TwoModeCM& v) {
  const double det_a = v.A().determinant();
  const double det_b = v.B().determinant();
  if (det_a > 0.0 && det_b > 0.0 && v(0, 0) > 0.0 && v(2, 2) > 0.0) {
    return normal_form_spectrum(local_reduction(v));
  }

  const double det_c = v.C().determinant();
  const double det_v = v.matrix().determinant();
  const double delta = det_a + det_b + 2.0 * det_c;
  const double disc = delta * delta - 4.0 * det_v;
  return spectrum_from(delta, disc, det_v, std::abs(det_a) + std::abs(det_b) + 2.0 * std::abs(det_c));
}

BonaFideDiagnosis validate_bona_fide(const TwoModeCM& v, double tol) {
  BonaFideDiagnosis d;
  d.nu_minus = std::numeric_limits<double>::quiet_NaN();
  Eigen::LLT<Mat4> llt(v.matrix());
  if (llt.info() != Eigen::Success) {
    d.failure = BonaFideFailure::not_positive_definite;
    d.reason = "covariance matrix is not positive definite";
    return d;
  }
  try {
    d.nu_minus = symplectic_spectrum(v).nu_minus;
  } catch (const NumericalFailure& e) {
    d.failure = BonaFideFailure::numerical;
    d.reason = e.what();
    return d;
  }
  if (d.nu_minus < 1.0 - tol) {
    d.failure = BonaFideFailure::uncertainty_principle;
    d.reason = "smallest symplectic eigenvalue " + std::to_string(d.nu_minus) +
               " < 1 violates the uncertainty principle";
    return d;
  }
  d.bona_fide = true;
  return d;
}

TwoModeCM epr_cm(double b, EprSign sign) {
  if (!(b >= 1.0)) {
    throw DomainError("EPR variance b must be >= 1, got " + std::to_string(b));
  }
  const double c = to_int(sign) * std::sqrt(b * b - 1.0);
  return embed_normal_form({b, b, c, -c});
}

Mat2 squeezer_matrix(double r) {
  if (!(r > 0.0)) {
    throw DomainError("squeezing r must be > 0, got " + std::to_string(r));
  }
  const double s = std::sqrt(r);
  return Eigen::Vector2d(s, 1.0 / s).asDiagonal();
}

Mat2 rotation_matrix(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

Mat2 omega() {
  Mat2 w;
  w << 0.0, 1.0, -1.0, 0.0;
  return w;
}

Mat4 omega_two_mode() { return direct_sum(omega(), omega()); }

TwoModeCM apply_local(const TwoModeCM& v, const Mat2& s_a, const Mat2& s_b) {
  const Mat4 s = direct_sum(s_a, s_b);
  return TwoModeCM(s * v.matrix() * s.transpose());
}

NormalFormCM to_normal_form(const TwoModeCM& v) {
  if (!(v.A().determinant() > 0.0) || !(v.B().determinant() > 0.0) || !(v(0, 0) > 0.0) ||
      !(v(2, 2) > 0.0)) {
    throw NumericalFailure("normal form: local blocks are not positive");
  }
  return local_reduction(v);
}

double normal_form_residual(const TwoModeCM& v, const NormalFormCM& nf) {
  return (v.matrix() - embed_normal_form(nf).matrix()).cwiseAbs().maxCoeff();
}

}  // namespace gdiscord
