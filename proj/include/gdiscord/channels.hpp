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

#ifndef GDISCORD_CHANNELS_HPP
#define GDISCORD_CHANNELS_HPP

#include <optional>
#include <utility>

#include "gdiscord/symplectic.hpp"

namespace gdiscord {

/// Slack on the quantum-limited boundary eta = |1 - tau|, relative to
/// max(1, |tau|).
inline constexpr double kChannelTolerance = 1e-12;

/// Single-mode Gaussian channel with real transmissivity tau (any sign) and
/// added noise eta >= |1 - tau|. Acts on a CM as V -> K V K^T + N with
/// K = sqrt|tau| diag(1, sign tau) and N = eta I.
///
/// tau < 0 covers the conjugate-amplifier form D, tau = 0 the depolarizing
/// form A1, 0 < tau < 1 lossy, tau = 1 additive noise, tau > 1 amplifier.
class GaussianChannel {
 public:
  /// Throws InvalidChannelParams when eta < |1 - tau| beyond tolerance or
  /// either value is non-finite.
  GaussianChannel(double tau, double eta);

  double tau() const { return tau_; }
  double eta() const { return eta_; }

  Mat2 K() const;
  Mat2 N() const;

  /// True on the quantum-limited boundary eta = |1 - tau|.
  bool is_quantum_limited(double tol = 1e-12) const;

  /// Single-mode action V -> K V K^T + N.
  Mat2 apply(const Mat2& v) const;

 private:
  double tau_;
  double eta_;
};

enum class CanonicalForm {
  A1,
  A2,
  B1,
  B2_identity,
  B2_additive,
  C_lossy,
  C_amplifier,
  D,
};

const char* to_string(CanonicalForm f);

struct ChannelClassification {
  CanonicalForm label = CanonicalForm::B2_identity;
  /// Thermal variance of the environment, omega = 2 n_bar + 1.
  std::optional<double> omega;
  std::optional<double> n_bar;
};

/// Canonical-form label of an extended channel. tau within 1e-12 of 0 or 1 is
/// treated as exactly 0 or 1.
ChannelClassification classify(const GaussianChannel& ch);

/// Channel matrices (K, N) of the phase-sensitive forms A2 and B1. Throws
/// DomainError for any other label or n_bar < 0.
std::pair<Mat2, Mat2> pathological_form_matrices(CanonicalForm label,
                                                 double n_bar = 0.0);

/// (K (+) I) V (K^T (+) I) + (N (+) 0).
TwoModeCM apply_to_mode_A(const GaussianChannel& ch, const TwoModeCM& v);

/// Output entropy in bits for a coherent-state input, h(|tau| + eta). This is
/// the minimum over all inputs for every extended channel.
double min_output_entropy(const GaussianChannel& ch);

}  // namespace gdiscord

#endif  // GDISCORD_CHANNELS_HPP
