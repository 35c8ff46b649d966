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

#include "gdiscord/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gdiscord/entropy.hpp"
#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

constexpr double kLabelTolerance = 1e-12;

}  // namespace

GaussianChannel::GaussianChannel(double tau, double eta) : tau_(tau), eta_(eta) {
  if (!std::isfinite(tau) || !std::isfinite(eta)) {
    throw InvalidChannelParams("channel parameters must be finite");
  }
  const double floor = std::abs(1.0 - tau);
  if (eta < floor - kChannelTolerance * std::max(1.0, std::abs(tau))) {
    throw InvalidChannelParams("channel noise eta=" + std::to_string(eta) +
                               " below |1 - tau|=" + std::to_string(floor));
  }
}

Mat2 GaussianChannel::K() const {
  const double s = std::sqrt(std::abs(tau_));
  return Eigen::Vector2d(s, tau_ < 0.0 ? -s : s).asDiagonal();
}

Mat2 GaussianChannel::N() const { return eta_ * Mat2::Identity(); }

bool GaussianChannel::is_quantum_limited(double tol) const {
  return std::abs(eta_ - std::abs(1.0 - tau_)) <= tol * std::max(1.0, std::abs(tau_));
}

Mat2 GaussianChannel::apply(const Mat2& v) const {
  const Mat2 k = K();
  return k * v * k.transpose() + N();
}

const char* to_string(CanonicalForm f) {
  switch (f) {
    case CanonicalForm::A1:
      return "A1";
    case CanonicalForm::A2:
      return "A2";
    case CanonicalForm::B1:
      return "B1";
    case CanonicalForm::B2_identity:
      return "B2_identity";
    case CanonicalForm::B2_additive:
      return "B2_additive";
    case CanonicalForm::C_lossy:
      return "C_lossy";
    case CanonicalForm::C_amplifier:
      return "C_amplifier";
    case CanonicalForm::D:
      return "D";
  }
  return "unknown";
}

ChannelClassification classify(const GaussianChannel& ch) {
  const double tau = ch.tau();
  const double eta = ch.eta();
  ChannelClassification out;
  auto set_omega = [&out](double omega) {
    out.omega = omega;
    out.n_bar = 0.5 * (omega - 1.0);
  };

  if (std::abs(tau) <= kLabelTolerance) {
    out.label = CanonicalForm::A1;
    set_omega(eta);
  } else if (std::abs(tau - 1.0) <= kLabelTolerance) {
    out.label = eta <= kLabelTolerance ? CanonicalForm::B2_identity
                                       : CanonicalForm::B2_additive;
  } else if (tau < 0.0) {
    out.label = CanonicalForm::D;
    set_omega(eta / (1.0 - tau));
  } else if (tau < 1.0) {
    out.label = CanonicalForm::C_lossy;
    set_omega(eta / (1.0 - tau));
  } else {
    out.label = CanonicalForm::C_amplifier;
    set_omega(eta / (tau - 1.0));
  }
  return out;
}

std::pair<Mat2, Mat2> pathological_form_matrices(CanonicalForm label,
                                                 double n_bar) {
  if (!(n_bar >= 0.0)) {
    throw DomainError("mean photon number must be >= 0");
  }
  switch (label) {
    case CanonicalForm::A2:
      return {Eigen::Vector2d(1.0, 0.0).asDiagonal(),
              (2.0 * n_bar + 1.0) * Mat2::Identity()};
    case CanonicalForm::B1:
      return {Mat2::Identity(), Eigen::Vector2d(0.0, 1.0).asDiagonal()};
    default:
      throw DomainError(std::string("no pathological matrices for form ") +
                        to_string(label));
  }
}

TwoModeCM apply_to_mode_A(const GaussianChannel& ch, const TwoModeCM& v) {
  const Mat2 k = ch.K();
  const Mat2 a = k * v.A() * k.transpose() + ch.N();
  const Mat2 c = k * v.C();
  return TwoModeCM::from_blocks(a, v.B(), c);
}

double min_output_entropy(const GaussianChannel& ch) {
  return h(std::abs(ch.tau()) + ch.eta());
}

}  // namespace gdiscord
