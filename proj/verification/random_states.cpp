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

#include "random_states.hpp"

#include <cmath>
#include <numbers>

namespace gdiscord::testing {

namespace {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Mat4 block_diag(const Mat2& x, const Mat2& y) {
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = x;
  m.block<2, 2>(2, 2) = y;
  return m;
}

}  // namespace

NormalFormCM random_squeezed_thermal(Rng& rng) {
  const double a = uniform(rng, 1.0, 11.0);
  double b = uniform(rng, 1.0, 11.0);
  if (b == 1.0) b = 1.5;
  const double c_max = std::sqrt(std::max(0.0, a * b - 1.0 - std::abs(a - b)));
  const bool boundary = uniform(rng, 0.0, 1.0) < 0.1;
  double c = boundary ? c_max : uniform(rng, -c_max, c_max);
  if (boundary && uniform(rng, 0.0, 1.0) < 0.5) c = -c;
  return {a, b, c, -c};
}

FamilyParams random_family_params(Rng& rng) {
  FamilyParams fp;
  fp.b = uniform(rng, 1.0, 8.0);
  if (fp.b == 1.0) fp.b = 2.0;
  fp.r = std::exp(uniform(rng, -1.0, 1.0) * std::log(fp.b));
  fp.tau = uniform(rng, -4.0, 4.0);
  const double floor = std::abs(1.0 - fp.tau);
  fp.eta = uniform(rng, 0.0, 1.0) < 0.2 ? floor : floor + uniform(rng, 0.0, 3.0);
  fp.sign = uniform(rng, 0.0, 1.0) < 0.5 ? EprSign::plus : EprSign::minus;
  return fp;
}

Mat2 random_local_symplectic(Rng& rng) {
  return squeezer_matrix(std::exp(uniform(rng, -1.5, 1.5))) *
         rotation_matrix(uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

TwoModeCM random_bona_fide_cm(Rng& rng) {
  const double nu1 = 1.0 + std::exponential_distribution<double>(0.5)(rng);
  const double nu2 = uniform(rng, 0.0, 1.0) < 0.2 ? 1.0 : 1.0 + std::exponential_distribution<double>(0.5)(rng);
  Mat4 williamson = Eigen::Vector4d(nu1, nu1, nu2, nu2).asDiagonal();

  const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
  Mat4 beam_splitter;
  beam_splitter << std::cos(theta) * Mat2::Identity(), std::sin(theta) * Mat2::Identity(),
      -std::sin(theta) * Mat2::Identity(), std::cos(theta) * Mat2::Identity();

  const double s = uniform(rng, 0.0, 1.5);
  const Mat2 z = Eigen::Vector2d(1.0, -1.0).asDiagonal();
  Mat4 squeezer;
  squeezer << std::cosh(s) * Mat2::Identity(), std::sinh(s) * z, std::sinh(s) * z,
      std::cosh(s) * Mat2::Identity();

  const Mat4 sym = block_diag(random_local_symplectic(rng), random_local_symplectic(rng)) *
                   squeezer * beam_splitter *
                   block_diag(random_local_symplectic(rng), random_local_symplectic(rng));
  const Mat4 v = sym * williamson * sym.transpose();
  return TwoModeCM(0.5 * (v + v.transpose()));
}

}  // namespace gdiscord::testing
