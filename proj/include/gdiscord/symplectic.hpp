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

#ifndef GDISCORD_SYMPLECTIC_HPP
#define GDISCORD_SYMPLECTIC_HPP

#include <string>

#include <Eigen/Core>
#include <Eigen/LU>

namespace gdiscord {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;

/// Lower slack on the smallest symplectic eigenvalue (vacuum variance 1).
inline constexpr double kBonaFideTolerance = 1e-9;

/// Relative tolerance for the symmetry check of a covariance matrix.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Normal-form parameters of a two-mode CM, V(a, b, c, c').
struct NormalFormCM {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  double cp = 0.0;

  /// c' = -c within `tol` (absolute).
  bool is_squeezed_thermal(double tol = 1e-12) const;

  friend bool operator==(const NormalFormCM&, const NormalFormCM&) = default;
};

/// Correlation type of an EPR state: C = sign * diag(1, -1).
enum class EprSign : int { plus = 1, minus = -1 };

inline int to_int(EprSign s) { return static_cast<int>(s); }
EprSign epr_sign_from_int(int s);

/// Covariance matrix of two bosonic modes in quadrature order
/// (q_A, p_A, q_B, p_B), with block form [[A, C], [C^T, B]].
///
/// Always symmetric: construction from a raw matrix rejects inputs whose
/// asymmetry exceeds kSymmetryTolerance (relative to the largest entry) and
/// stores the symmetrized matrix.
class TwoModeCM {
 public:
  /// Vacuum on both modes.
  TwoModeCM();
  explicit TwoModeCM(const Mat4& m);

  static TwoModeCM from_blocks(const Mat2& a, const Mat2& b, const Mat2& c);

  const Mat4& matrix() const { return m_; }
  Mat2 A() const { return m_.block<2, 2>(0, 0); }
  Mat2 B() const { return m_.block<2, 2>(2, 2); }
  Mat2 C() const { return m_.block<2, 2>(0, 2); }

  /// Relabels the modes, A <-> B and C -> C^T.
  TwoModeCM swapped() const;

  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat4 m_;
};

struct SymplecticSpectrum {
  double nu_minus = 1.0;
  double nu_plus = 1.0;
};

enum class BonaFideFailure {
  none,
  not_positive_definite,
  uncertainty_principle,
  numerical,
};

struct BonaFideDiagnosis {
  bool bona_fide = false;
  /// Smallest symplectic eigenvalue, NaN when it could not be computed.
  double nu_minus = 0.0;
  BonaFideFailure failure = BonaFideFailure::none;
  /// Human-readable description of the failed constraint; empty when accepted.
  std::string reason;

  explicit operator bool() const { return bona_fide; }
};

const char* to_string(BonaFideFailure f);

/// [[aI, diag(c, c')], [diag(c, c'), bI]]. No validation.
TwoModeCM embed_normal_form(const NormalFormCM& nf);

/// Both symplectic eigenvalues. The local blocks are first brought to normal
/// form, then nu^2 = (D +- sqrt(D^2 - 4 det V)) / 2 with
/// D = det A + det B + 2 det C. Throws NumericalFailure when the invariants
/// are inconsistent beyond rounding.
SymplecticSpectrum symplectic_spectrum(const TwoModeCM& v);

/// Accepts iff V is positive definite and nu_minus >= 1 - tol. Never throws.
BonaFideDiagnosis validate_bona_fide(const TwoModeCM& v,
                                     double tol = kBonaFideTolerance);

/// EPR (two-mode squeezed vacuum) CM with local variance b:
/// A = B = bI, C = sign * sqrt(b^2 - 1) * diag(1, -1). Throws DomainError if
/// b < 1.
TwoModeCM epr_cm(double b, EprSign sign = EprSign::plus);

/// Single-mode squeezer S(r) = diag(sqrt(r), 1/sqrt(r)); throws DomainError if
/// r <= 0.
Mat2 squeezer_matrix(double r);

/// Phase rotation by angle phi.
Mat2 rotation_matrix(double phi);

/// Single-mode symplectic form [[0, 1], [-1, 0]].
Mat2 omega();

/// Two-mode symplectic form omega() (+) omega().
Mat4 omega_two_mode();

/// (S_A (+) S_B) V (S_A (+) S_B)^T.
TwoModeCM apply_local(const TwoModeCM& v, const Mat2& s_a, const Mat2& s_b);

/// Normal form reached by local symplectic operations. Convention: c >= |c'|.
/// Throws NumericalFailure if the invariants are inconsistent.
NormalFormCM to_normal_form(const TwoModeCM& v);

/// Max-abs entry of v - embed_normal_form(nf).
double normal_form_residual(const TwoModeCM& v, const NormalFormCM& nf);

}  // namespace gdiscord

#endif  // GDISCORD_SYMPLECTIC_HPP
