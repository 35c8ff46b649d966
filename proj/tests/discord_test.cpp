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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gdiscord/channels.hpp"
#include "gdiscord/entropy.hpp"
#include "gdiscord/errors.hpp"
#include "gdiscord/family.hpp"
#include "oracles.hpp"
#include "random_states.hpp"
#include "reference_values.hpp"

namespace gdiscord {
namespace {

namespace ref = reference;
const double kSqrt6 = std::sqrt(6.0);
const double kInf = std::numeric_limits<double>::infinity();

TEST(Entropy, KnownValues) {
  EXPECT_EQ(h(1.0), 0.0);
  EXPECT_NEAR(h(1.5), ref::kH1_5, 1e-14);
  EXPECT_NEAR(h(2.0), ref::kH2, 1e-14);
  EXPECT_NEAR(h(3.0), 2.0, 1e-14);
  EXPECT_NEAR(h(4.0), ref::kH4, 1e-14);
  EXPECT_NEAR(h(5.0), 3.0 * std::log2(3.0) - 2.0, 1e-14);
  EXPECT_NEAR(h(5.0), ref::kH5, 1e-14);
  EXPECT_NEAR(h(10.0), ref::kH10, 1e-14);
}

TEST(Entropy, MatchesFockSum) {
  for (double x : {1.0, 1.0 + 1e-6, 1.5, 2.0, 3.0, 5.0, 10.0, 57.0}) {
    EXPECT_NEAR(h(x), oracle::thermal_entropy_fock(x), 1e-9) << x;
  }
}

TEST(Entropy, ClampAndDomain) {
  EXPECT_EQ(h(1.0 - 5e-10), 0.0);
  EXPECT_THROW(h(1.0 - 1e-8), DomainError);
  EXPECT_THROW(h(std::nan("")), DomainError);
}

TEST(Entropy, StrictlyIncreasing) {
  double prev = h(1.0);
  for (double x = 1.01; x < 50.0; x *= 1.07) {
    const double cur = h(x);
    ASSERT_GT(cur, prev);
    prev = cur;
  }
}

TEST(Entropy, TwoModeExamples) {
  EXPECT_NEAR(entropy_two_mode(epr_cm(3.0)), 0.0, 1e-9);
  EXPECT_NEAR(entropy_two_mode(embed_normal_form({3, 2, 0, 0})), h(3) + h(2), 1e-12);
  EXPECT_NEAR(entropy_two_mode(embed_normal_form({5, 2, kSqrt6, -kSqrt6})), ref::kH4, 1e-9);
  EXPECT_THROW(entropy_two_mode(embed_normal_form({2, 2, 2, -2})), ValidationError);
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(mutual_information(embed_normal_form({3, 2, 0, 0})), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(epr_cm(2.0)), 2.0 * ref::kH2, 1e-9);
  EXPECT_NEAR(mutual_information(embed_normal_form({5, 2, kSqrt6, -kSqrt6})),
              ref::kMutualInfoSqueezedThermal, 1e-9);
}

TEST(ConditionalEntropy, ProductStateIgnoresMeasurement) {
  const TwoModeCM v = embed_normal_form({3, 2, 0, 0});
  for (double u : {0.0, 0.1, 1.0, 7.0, kInf}) {
    EXPECT_NEAR(conditional_entropy_measured(v, GaussianMeasurement(u, 0.4)), h(3), 1e-12);
  }
}

TEST(ConditionalEntropy, HeterodyneExamples) {
  EXPECT_NEAR(conditional_entropy_measured(embed_normal_form({5, 2, kSqrt6, -kSqrt6}),
                                           GaussianMeasurement::heterodyne()),
              2.0, 1e-9);
  EXPECT_NEAR(conditional_entropy_measured(epr_cm(4.0), GaussianMeasurement::heterodyne()), 0.0,
              1e-9);
}

TEST(Minimizer, SqueezedThermalPicksHeterodyne) {
  const auto m = minimize_conditional_entropy(embed_normal_form({5, 2, kSqrt6, -kSqrt6}));
  EXPECT_NEAR(m.s_min, 2.0, 1e-9);
  EXPECT_NEAR(m.measurement.u(), 1.0, 1e-4);
}

TEST(Minimizer, ProductState) {
  const auto m = minimize_conditional_entropy(embed_normal_form({3, 2, 0, 0}));
  EXPECT_NEAR(m.s_min, h(3), 1e-12);
}

TEST(Minimizer, FamilyStateReachesMatchedBound) {
  const FamilyParams fp{2.0, 2.0, 1.0, 1.0, EprSign::plus};
  const auto m = minimize_conditional_entropy(embed_normal_form(family_cm_from_params(fp)));
  EXPECT_NEAR(m.s_min, ref::kH2, 1e-8);
  EXPECT_TRUE(std::isinf(matched_measurement_u(fp)));
}

TEST(Minimizer, Deterministic) {
  const TwoModeCM v = embed_normal_form({3, 2, 1.4, 0.3});
  const auto m1 = minimize_conditional_entropy(v);
  const auto m2 = minimize_conditional_entropy(v);
  EXPECT_EQ(m1.s_min, m2.s_min);
  EXPECT_EQ(m1.measurement.u(), m2.measurement.u());
  EXPECT_EQ(m1.measurement.phi(), m2.measurement.phi());
}

TEST(ClosedForm, Examples) {
  EXPECT_NEAR(gaussian_discord_closed_form({2, 1, 2, 1, EprSign::plus}).discord,
              ref::kDiscordSqueezedThermal, 1e-9);
  for (double b : {1.5, 2.0, 4.0}) {
    EXPECT_NEAR(gaussian_discord_closed_form({b, 1, 1, 0, EprSign::plus}).discord, h(b), 1e-9);
  }
  EXPECT_NEAR(gaussian_discord_closed_form({2, 1, 0, 3.0, EprSign::plus}).discord, 0.0, 1e-12);
}

TEST(ClosedForm, ReportIdentities) {
  testing::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const DiscordReport r = gaussian_discord_closed_form(testing::random_family_params(rng));
    ASSERT_NEAR(r.mutual_info, r.s_a + r.s_b - r.s_ab, 1e-9);
    ASSERT_NEAR(r.discord, r.s_min_cond - (r.s_ab - r.s_b), 1e-9);
    ASSERT_NEAR(r.discord, r.mutual_info - r.classical_corr, 1e-9);
    ASSERT_GE(r.discord, -1e-6);
    ASSERT_GE(r.classical_corr, -1e-6);
    ASSERT_EQ(r.method, DiscordMethod::closed_form);
    ASSERT_FALSE(r.witness.has_value());
  }
}

TEST(Numeric, Examples) {
  EXPECT_NEAR(gaussian_discord_numeric(embed_normal_form({3, 2, 0, 0})).discord, 0.0, 1e-6);
  const DiscordReport st = gaussian_discord_numeric(embed_normal_form({5, 2, kSqrt6, -kSqrt6}));
  EXPECT_NEAR(st.discord, 0.950067, 1e-6);
  EXPECT_NEAR(st.discord, ref::kDiscordSqueezedThermal, 1e-9);
  ASSERT_TRUE(st.witness.has_value());
  EXPECT_EQ(st.method, DiscordMethod::numeric_scan);

  const DiscordReport v2211 = gaussian_discord_numeric(embed_normal_form({2, 2, 1, 1}));
  EXPECT_NEAR(v2211.discord, ref::kDiscordV2211, 1e-9);
  EXPECT_NEAR(v2211.discord, h(2) - h(1) - h(3) + h(5.0 / 3.0), 1e-9);
}

TEST(Numeric, RejectsNonBonaFide) {
  EXPECT_THROW(gaussian_discord_numeric(embed_normal_form({2, 2, 2, -2})), ValidationError);
}

TEST(Numeric, InvariantUnderLocalSymplectic) {
  const TwoModeCM v = embed_normal_form({3, 2, 1.4, 0.3});
  const TwoModeCM w = apply_local(v, squeezer_matrix(2.3) * rotation_matrix(0.4), Mat2::Identity());
  const DiscordReport rv = gaussian_discord_numeric(v);
  const DiscordReport rw = gaussian_discord_numeric(w);
  EXPECT_NEAR(rv.s_a, rw.s_a, 1e-9);
  EXPECT_NEAR(rv.s_ab, rw.s_ab, 1e-9);
  EXPECT_NEAR(rv.discord, rw.discord, 1e-8);
}

TEST(Numeric, AgreesWithClosedFormOnFamily) {
  testing::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const FamilyParams fp = testing::random_family_params(rng);
    const double closed = gaussian_discord_closed_form(fp).discord;
    const double numeric = gaussian_discord_numeric(embed_normal_form(family_cm_from_params(fp))).discord;
    ASSERT_NEAR(closed, numeric, 1e-6);
  }
}

TEST(Numeric, NonNegativeOnGenericStates) {
  testing::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const DiscordReport r = gaussian_discord_numeric(testing::random_bona_fide_cm(rng));
    ASSERT_GE(r.discord, -1e-6);
    ASSERT_GE(r.classical_corr, -1e-6);
  }
}

TEST(DiscordMethodName, Strings) {
  EXPECT_STREQ(to_string(DiscordMethod::closed_form), "closed_form");
  EXPECT_STREQ(to_string(DiscordMethod::numeric_scan), "numeric_scan");
}

}  // namespace
}  // namespace gdiscord
