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

#include "gdiscord/family.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gdiscord/discord.hpp"
#include "gdiscord/entropy.hpp"
#include "gdiscord/errors.hpp"
#include "oracles.hpp"
#include "random_states.hpp"
#include "reference_values.hpp"

namespace gdiscord {
namespace {

namespace ref = reference;
const double kSqrt6 = std::sqrt(6.0);

TEST(DecomposeSqueezedThermal, Examples) {
  const GaussianChannel ch = decompose_squeezed_thermal(5, 2, kSqrt6);
  EXPECT_NEAR(ch.tau(), 2.0, 1e-12);
  EXPECT_NEAR(ch.eta(), 1.0, 1e-12);

  const GaussianChannel prod = decompose_squeezed_thermal(3.5, 2, 0.0);
  EXPECT_EQ(prod.tau(), 0.0);
  EXPECT_EQ(prod.eta(), 3.5);

  const GaussianChannel id = decompose_squeezed_thermal(3, 3, std::sqrt(8.0));
  EXPECT_NEAR(id.tau(), 1.0, 1e-12);
  EXPECT_NEAR(id.eta(), 0.0, 1e-12);
}

TEST(DecomposeSqueezedThermal, Errors) {
  EXPECT_THROW(decompose_squeezed_thermal(2, 2, 2.0), NotSqueezedThermalForm);
  EXPECT_THROW(decompose_squeezed_thermal(2, 1, 0.5), DomainError);
  EXPECT_THROW(decompose_squeezed_thermal(0.5, 2, 0.0), NotSqueezedThermalForm);
}

TEST(DecomposeSqueezedThermal, RoundTripThroughChannel) {
  testing::Rng rng(41);
  for (int i = 0; i < 2000; ++i) {
    const NormalFormCM nf = testing::random_squeezed_thermal(rng);
    const GaussianChannel ch = decompose_squeezed_thermal(nf.a, nf.b, nf.c);
    ASSERT_GE(ch.eta(), std::abs(1.0 - ch.tau()));
    const TwoModeCM v = apply_to_mode_A(ch, epr_cm(nf.b, nf.c < 0 ? EprSign::minus : EprSign::plus));
    ASSERT_LE(normal_form_residual(v, nf), 1e-9);
  }
}

TEST(FamilyForward, Examples) {
  const NormalFormCM st = family_cm_from_params({2, 1, 2, 1, EprSign::plus});
  EXPECT_NEAR(st.a, 5, 1e-14);
  EXPECT_NEAR(st.c, kSqrt6, 1e-14);
  EXPECT_NEAR(st.cp, -kSqrt6, 1e-14);

  const NormalFormCM neg = family_cm_from_params({2, 1, -1.0 / 3.0, 4.0 / 3.0, EprSign::plus});
  EXPECT_NEAR(neg.a, 2, 1e-14);
  EXPECT_NEAR(neg.c, 1, 1e-14);
  EXPECT_NEAR(neg.cp, 1, 1e-14);

  const FamilyParams fp{2, 2, 1, 1, EprSign::plus};
  const NormalFormCM gen = family_cm_from_params(fp);
  EXPECT_NEAR(gen.a, ref::kFamilyA, 1e-14);
  EXPECT_NEAR(gen.c, ref::kFamilyC, 1e-14);
  EXPECT_NEAR(gen.cp, ref::kFamilyCp, 1e-14);
  EXPECT_NEAR(gen.c * gen.cp, -3.0, 1e-13);
  EXPECT_NEAR(fp.xi(), ref::kFamilyXi, 1e-14);
}

TEST(FamilyForward, SignFlipsBothCorrelations) {
  const NormalFormCM p = family_cm_from_params({3, 1.7, 0.6, 0.9, EprSign::plus});
  const NormalFormCM m = family_cm_from_params({3, 1.7, 0.6, 0.9, EprSign::minus});
  EXPECT_EQ(p.a, m.a);
  EXPECT_EQ(p.c, -m.c);
  EXPECT_EQ(p.cp, -m.cp);
}

TEST(FamilyForward, Validation) {
  EXPECT_THROW(family_cm_from_params({2, 3, 1, 1, EprSign::plus}), DomainError);
  EXPECT_THROW(family_cm_from_params({2, 1, 0.5, 0.1, EprSign::plus}), InvalidChannelParams);
  EXPECT_THROW(family_cm_from_params({0.5, 1, 1, 0, EprSign::plus}), DomainError);
}

TEST(FamilyForward, MatrixRouteAgrees) {
  testing::Rng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const FamilyParams fp = testing::random_family_params(rng);
    const NormalFormCM nf = family_cm_from_params(fp);
    ASSERT_LE(normal_form_residual(family_cm_via_channels(fp), nf), 1e-9 * std::max(1.0, nf.a));
  }
}

TEST(FamilyForward, CorrelationProductIdentity) {
  testing::Rng rng(43);
  for (int i = 0; i < 2000; ++i) {
    const FamilyParams fp = testing::random_family_params(rng);
    const NormalFormCM nf = family_cm_from_params(fp);
    const double expect = -(fp.tau < 0 ? -1.0 : 1.0) * std::abs(fp.tau) * (fp.b * fp.b - 1.0);
    ASSERT_NEAR(nf.c * nf.cp, expect, 1e-9 * std::max(1.0, std::abs(expect)));
    ASSERT_TRUE(validate_bona_fide(embed_normal_form(nf)).bona_fide);
  }
}

TEST(EtaFromA, Examples) {
  EXPECT_NEAR(eta_from_a(5, 1, 2, 2), 1.0, 1e-12);
  EXPECT_NEAR(eta_from_a(3, 1, 1, 3), 0.0, 1e-12);
  EXPECT_NEAR(eta_from_a(2, 1, -1.0 / 3.0, 2), 4.0 / 3.0, 1e-12);
}

TEST(EtaFromA, InvertsForward) {
  testing::Rng rng(44);
  for (int i = 0; i < 2000; ++i) {
    const FamilyParams fp = testing::random_family_params(rng);
    const NormalFormCM nf = family_cm_from_params(fp);
    ASSERT_NEAR(eta_from_a(nf.a, fp.r, fp.tau, fp.b), fp.eta, 1e-9 * std::max(1.0, fp.eta));
  }
}

TEST(EtaFromA, SymmetricInR) {
  EXPECT_NEAR(eta_from_a(3, 1.5, 0.7, 2), eta_from_a(3, 1.0 / 1.5, 0.7, 2), 1e-13);
}

TEST(TauBounds, Examples) {
  const TauInterval t = tau_bounds(2, 2, 1);
  EXPECT_NEAR(t.tau_min, -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(t.tau_max, 1.0, 1e-12);
  const TauInterval d = tau_bounds(1, 1, 1);
  EXPECT_NEAR(d.tau_min, 0.0, 1e-12);
  EXPECT_NEAR(d.tau_max, 0.0, 1e-12);
}

TEST(TauBounds, EndpointsAreQuantumLimited) {
  for (double a : {1.5, 2.0, 3.0, 6.0}) {
    for (double b : {1.5, 2.0, 4.0}) {
      for (double r : {1.0 / b * 1.01, 1.0, std::sqrt(b), b * 0.99}) {
        const TauInterval t = tau_bounds(a, b, r);
        for (double tau : {t.tau_min, t.tau_max}) {
          EXPECT_NEAR(eta_from_a(a, r, tau, b), std::abs(1.0 - tau), 1e-9)
              << a << " " << b << " " << r << " " << tau;
        }
      }
    }
  }
}

TEST(TauBounds, MatchScanOracle) {
  for (double a : {1.5, 2.0, 3.0, 6.0}) {
    for (double b : {1.5, 2.0, 4.0}) {
      for (double r : {1.0 / b * 1.01, 1.0, std::sqrt(b), b * 0.99}) {
        const TauInterval t = tau_bounds(a, b, r);
        const auto scan = oracle::tau_bounds_scan(a, b, r);
        ASSERT_TRUE(scan.has_value());
        EXPECT_NEAR(t.tau_min, scan->tau_min, 2e-4) << a << " " << b << " " << r;
        EXPECT_NEAR(t.tau_max, scan->tau_max, 2e-4) << a << " " << b << " " << r;
      }
    }
  }
}

TEST(MatchedMeasurement, Endpoints) {
  EXPECT_EQ(matched_measurement_u({2, 0.5, 1, 1, EprSign::plus}), 0.0);
  EXPECT_TRUE(std::isinf(matched_measurement_u({2, 2, 1, 1, EprSign::plus})));
  EXPECT_DOUBLE_EQ(matched_measurement_u({2, 1, 1, 1, EprSign::plus}), 1.0);
}

TEST(MatchedMeasurement, ReachesMinimumOutputEntropy) {
  testing::Rng rng(45);
  for (int i = 0; i < 1000; ++i) {
    const FamilyParams fp = testing::random_family_params(rng);
    const TwoModeCM v = embed_normal_form(family_cm_from_params(fp));
    const double s = conditional_entropy_measured(v, GaussianMeasurement(matched_measurement_u(fp), 0.0));
    ASSERT_NEAR(s, h(std::abs(fp.tau) + fp.eta), 1e-8);
  }
}

TEST(Membership, Examples) {
  const FamilyParams st = membership({5, 2, kSqrt6, -kSqrt6});
  EXPECT_NEAR(st.r, 1, 1e-12);
  EXPECT_NEAR(st.tau, 2, 1e-12);
  EXPECT_NEAR(st.eta, 1, 1e-12);
  EXPECT_EQ(st.sign, EprSign::plus);

  const FamilyParams neg = membership({2, 2, 1, 1});
  EXPECT_NEAR(neg.r, 1, 1e-9);
  EXPECT_NEAR(neg.tau, -1.0 / 3.0, 1e-12);
  EXPECT_NEAR(neg.eta, 4.0 / 3.0, 1e-9);

  const FamilyParams prod = membership({3, 2, 0, 0});
  EXPECT_EQ(prod.tau, 0.0);
  EXPECT_EQ(prod.eta, 3.0);
}

TEST(Membership, AxisStatesAreOutside) {
  EXPECT_THROW(membership({2, 2, 1, 0}), OutOfFamily);
  EXPECT_THROW(membership({2, 2, 0, -0.5}), OutOfFamily);
}

TEST(Membership, DecidedBySearchAgreesWithGridOracle) {
  const NormalFormCM nf{2, 2, 1, -0.5};
  const auto grid = oracle::membership_grid(nf);
  bool found = false;
  try {
    const FamilyParams fp = membership(nf);
    found = true;
    EXPECT_LE(forward_error(fp, nf), 1e-9);
  } catch (const OutOfFamily&) {
  }
  ASSERT_TRUE(grid.has_value());
  // The grid oracle finds a witness to within its resolution iff one exists.
  EXPECT_EQ(found, grid->error < 1e-2) << "grid error " << grid->error;
}

TEST(Membership, RoundTrip) {
  testing::Rng rng(46);
  for (int i = 0; i < 3000; ++i) {
    const FamilyParams fp = testing::random_family_params(rng);
    const NormalFormCM nf = family_cm_from_params(fp);
    const FamilyParams back = membership(nf);
    ASSERT_LE(forward_error(back, nf), 1e-9) << fp.b << " " << fp.r << " " << fp.tau << " " << fp.eta;
  }
}

TEST(Membership, OutsideStatesAreRejectedConsistently) {
  testing::Rng rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const NormalFormCM nf{1.0 + 3.0 * unit(rng), 1.5 + 2.0 * unit(rng), 0.0, 0.0};
    NormalFormCM probe = nf;
    probe.c = (2.0 * unit(rng) - 1.0) * std::sqrt(nf.a * nf.b);
    probe.cp = (2.0 * unit(rng) - 1.0) * std::sqrt(nf.a * nf.b);
    if (!validate_bona_fide(embed_normal_form(probe))) continue;
    ++checked;
    const auto grid = oracle::membership_grid(probe, 5e-3);
    try {
      const FamilyParams fp = membership(probe);
      EXPECT_LE(forward_error(fp, probe), 1e-9 * std::max(1.0, probe.a));
    } catch (const OutOfFamily&) {
      ASSERT_TRUE(grid.has_value());
      EXPECT_GT(grid->error, 1e-3) << probe.a << " " << probe.b << " " << probe.c << " " << probe.cp;
    }
  }
  EXPECT_GT(checked, 5);
}

}  // namespace
}  // namespace gdiscord
