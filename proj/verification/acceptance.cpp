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

#include "acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "gdiscord/channels.hpp"
#include "gdiscord/discord.hpp"
#include "gdiscord/entropy.hpp"
#include "gdiscord/errors.hpp"
#include "gdiscord/family.hpp"
#include "gdiscord/io.hpp"
#include "gdiscord/remote_prep.hpp"
#include "gdiscord/sampler.hpp"
#include "gdiscord/symplectic.hpp"
#include "oracles.hpp"
#include "random_states.hpp"

namespace gdiscord::verify {

namespace {

using testing::Rng;

std::string sci(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

template <typename F>
CheckResult timed(std::string id, std::string name, F&& body) {
  CheckResult r;
  r.id = std::move(id);
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<NormalFormCM> squeezed_thermal_batch(std::uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<NormalFormCM> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(testing::random_squeezed_thermal(rng));
  return out;
}

FamilyParams squeezed_thermal_params(const NormalFormCM& nf) {
  const GaussianChannel ch = decompose_squeezed_thermal(nf.a, nf.b, nf.c);
  return {nf.b, 1.0, ch.tau(), ch.eta(), nf.c < 0.0 ? EprSign::minus : EprSign::plus};
}

// ---------------------------------------------------------------------------
// Acceptance criteria.

CheckResult criterion_closed_vs_numeric(const VerifyOptions& opts) {
  return timed("AC1", "closed-form vs numeric discord on 1000 squeezed thermal states",
               [&](CheckResult& r) {
    const auto states = squeezed_thermal_batch(opts.seed, 1000);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& nf : states) {
      const double closed = gaussian_discord_closed_form(squeezed_thermal_params(nf)).discord;
      const double numeric = gaussian_discord_numeric(embed_normal_form(nf)).discord;
      worst = std::max(worst, std::abs(closed - numeric));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = worst <= 1e-6 && secs <= 60.0;
    r.detail = "max |D_closed - D_numeric| = " + sci(worst) + " (tol 1e-6), runtime " +
               format_number(secs) + " s (limit 60 s)";
  });
}

CheckResult criterion_heterodyne_optimal(const VerifyOptions& opts) {
  return timed("AC2", "heterodyne optimality on the same 1000 states", [&](CheckResult& r) {
    const auto states = squeezed_thermal_batch(opts.seed, 1000);
    double worst_closed = 0.0;
    double worst_het = -1.0;
    for (const auto& nf : states) {
      const TwoModeCM v = embed_normal_form(nf);
      const FamilyParams fp = squeezed_thermal_params(nf);
      const auto min = minimize_conditional_entropy(v);
      const double expected = h(fp.tau + fp.eta);
      const double het = conditional_entropy_measured(v, GaussianMeasurement::heterodyne());
      worst_closed = std::max(worst_closed, std::abs(min.s_min - expected));
      worst_het = std::max(worst_het, het - min.s_min);
    }
    r.passed = worst_closed <= 1e-6 && worst_het <= 1e-8;
    r.detail = "max |S_min - h(tau+eta)| = " + sci(worst_closed) +
               " (tol 1e-6), max S(u=1) - S_min = " + sci(worst_het) + " (tol 1e-8)";
  });
}

CheckResult criterion_worked_number(const VerifyOptions&) {
  return timed("AC3", "worked number D(V(5,2,sqrt6,-sqrt6)) = 0.950067", [](CheckResult& r) {
    const double c = std::sqrt(6.0);
    const NormalFormCM nf{5.0, 2.0, c, -c};
    const double closed = gaussian_discord_closed_form(membership(nf)).discord;
    const double numeric = gaussian_discord_numeric(embed_normal_form(nf)).discord;
    const double err = std::max(std::abs(closed - 0.950067), std::abs(numeric - 0.950067));
    r.passed = err <= 1e-6;
    r.detail = "closed " + format_number(closed) + ", numeric " + format_number(numeric) +
               ", max deviation " + sci(err) + " (tol 1e-6)";
  });
}

CheckResult criterion_round_trips(const VerifyOptions& opts) {
  return timed("AC4", "decomposition round trips (1e4 + 1e4)", [&](CheckResult& r) {
    Rng rng(opts.seed + 4);
    double worst_st = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const NormalFormCM nf = testing::random_squeezed_thermal(rng);
      const GaussianChannel ch = decompose_squeezed_thermal(nf.a, nf.b, nf.c);
      const TwoModeCM rebuilt =
          apply_to_mode_A(ch, epr_cm(nf.b, nf.c < 0.0 ? EprSign::minus : EprSign::plus));
      worst_st = std::max(worst_st, normal_form_residual(rebuilt, nf));
    }
    double worst_fam = 0.0;
    int out_of_family = 0;
    for (int i = 0; i < 10000; ++i) {
      const FamilyParams fp = testing::random_family_params(rng);
      const NormalFormCM nf = family_cm_from_params(fp);
      try {
        const FamilyParams back = membership(nf);
        worst_fam = std::max(worst_fam, forward_error(back, nf));
      } catch (const OutOfFamily&) {
        ++out_of_family;
      }
    }
    r.passed = worst_st <= 1e-9 && worst_fam <= 1e-9 && out_of_family == 0;
    r.detail = "squeezed thermal max CM error " + sci(worst_st) + ", family forward error " +
               sci(worst_fam) + ", witnesses missed " + std::to_string(out_of_family) +
               " (tol 1e-9)";
  });
}

// Largest t with V(a, b, t, s t) bona fide.
double bisector_extent(double a, double b, double s) {
  double lo = 0.0;
  double hi = std::sqrt(a * b);
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (validate_bona_fide(embed_normal_form({a, b, mid, s * mid}))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

struct PanelStats {
  std::size_t unphysical = 0;
  std::size_t redraws = 0;
  std::array<int, 2> empty_segments{};  // {c' = c, c' = -c}
  double occupancy = 0.0;
};

PanelStats sample_panel(double a, double b, const VerifyOptions& opts) {
  constexpr int kSegments = 10;
  constexpr double kNear = 1e-3;
  const SampleResult res = sample_family({a, b, 500000, opts.seed, opts.threads});
  PanelStats st;
  st.redraws = res.redraws;
  std::array<std::array<bool, kSegments>, 2> hit{};
  const std::array<double, 2> extent{bisector_extent(a, b, 1.0), bisector_extent(a, b, -1.0)};
  for (const auto& p : res.points) {
    const auto spec = oracle::symplectic_spectrum_eigen(embed_normal_form({a, b, p.c, p.cp}).matrix());
    if (spec.nu_minus < 1.0 - kBonaFideTolerance) ++st.unphysical;
    if (std::abs(std::abs(p.c) - std::abs(p.cp)) > kNear) continue;
    for (int k = 0; k < 2; ++k) {
      const bool same_side = k == 0 ? p.c * p.cp >= 0.0 : p.c * p.cp <= 0.0;
      if (!same_side || extent[k] <= 0.0) continue;
      const double t = (p.c + extent[k]) / (2.0 * extent[k]);
      const int seg = std::clamp(static_cast<int>(t * kSegments), 0, kSegments - 1);
      hit[k][seg] = true;
    }
  }
  for (int k = 0; k < 2; ++k) {
    st.empty_segments[k] = static_cast<int>(std::count(hit[k].begin(), hit[k].end(), false));
  }
  st.occupancy = occupancy_fraction(occupancy_grid(res.points, a, b, 200));
  return st;
}

CheckResult criterion_coverage(const VerifyOptions& opts) {
  return timed("AC5", "family sampling coverage (a=2; b=2 and b=4; 5e5 points each)",
               [&](CheckResult& r) {
    const PanelStats p2 = sample_panel(2.0, 2.0, opts);
    const PanelStats p4 = sample_panel(2.0, 4.0, opts);
    const bool bona_fide = p2.unphysical == 0 && p4.unphysical == 0;
    const bool bisectors = p2.empty_segments == std::array<int, 2>{0, 0} &&
                           p4.empty_segments == std::array<int, 2>{0, 0};
    const bool growth = p4.occupancy > p2.occupancy;
    r.passed = bona_fide && bisectors && growth;
    std::ostringstream os;
    os << "unphysical " << p2.unphysical << "/" << p4.unphysical << ", empty bisector segments (of 10) b=2: "
       << p2.empty_segments[0] << "+" << p2.empty_segments[1] << " b=4: " << p4.empty_segments[0]
       << "+" << p4.empty_segments[1] << ", occupancy b=2 " << format_number(p2.occupancy)
       << " < b=4 " << format_number(p4.occupancy) << ", redraws " << p2.redraws << "/"
       << p4.redraws;
    r.detail = os.str();
  });
}

CheckResult criterion_entropy_oracle(const VerifyOptions& opts) {
  return timed("AC6", "entropy vs Fock sum; spectrum vs eigen-oracle on 1e4 CMs",
               [&](CheckResult& r) {
    double worst_h = 0.0;
    for (double x : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
      worst_h = std::max(worst_h, std::abs(h(x) - oracle::thermal_entropy_fock(x)));
    }
    Rng rng(opts.seed + 6);
    double worst_nu = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const TwoModeCM v = testing::random_bona_fide_cm(rng);
      const auto fast = symplectic_spectrum(v);
      const auto ref = oracle::symplectic_spectrum_eigen(v.matrix());
      worst_nu = std::max({worst_nu, std::abs(fast.nu_minus - ref.nu_minus) / std::max(1.0, ref.nu_minus),
                           std::abs(fast.nu_plus - ref.nu_plus) / std::max(1.0, ref.nu_plus)});
    }
    r.passed = worst_h <= 1e-9 && worst_nu <= 1e-9;
    r.detail = "max |h - Fock| = " + sci(worst_h) + ", max spectrum deviation " + sci(worst_nu) +
               " (tol 1e-9)";
  });
}

CheckResult criterion_remote_prep(const VerifyOptions& opts) {
  return timed("AC7", "remote-preparation identities", [&](CheckResult& r) {
    Rng rng(opts.seed + 7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_ltv = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const TwoModeCM v = testing::random_bona_fide_cm(rng);
      const GaussianMeasurement m(std::exp(6.0 * unit(rng) - 3.0), std::numbers::pi * unit(rng));
      const Mat2 c = v.C();
      const Mat2 rebuilt = conditional_cm(v, m) + c * m.outcome_precision(v.B()) * c.transpose();
      const double scale = std::max(1.0, v.A().cwiseAbs().maxCoeff());
      worst_ltv = std::max(worst_ltv, (rebuilt - v.A()).cwiseAbs().maxCoeff() / scale);
    }

    double worst_mod = 0.0;
    double worst_end = 0.0;
    bool exact_range = true;
    for (double mu : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
      for (EprSign s : {EprSign::plus, EprSign::minus}) {
        const TwoModeCM epr = epr_cm(mu, s);
        const Mat2 l = conditional_mean_map(epr, GaussianMeasurement::heterodyne());
        const Mat2 spread = l * ((mu + 1.0) * Mat2::Identity()) * l.transpose();
        worst_mod = std::max(worst_mod, (spread - (mu - 1.0) * Mat2::Identity()).cwiseAbs().maxCoeff());

        const Mat2 q_hom = conditional_cm(epr, GaussianMeasurement(0.0, 0.0));
        const Mat2 p_hom = conditional_cm(epr, GaussianMeasurement(std::numeric_limits<double>::infinity(), 0.0));
        const Mat2 expect_q = Eigen::Vector2d(1.0 / mu, mu).asDiagonal();
        const Mat2 expect_p = Eigen::Vector2d(mu, 1.0 / mu).asDiagonal();
        worst_end = std::max({worst_end, (q_hom - expect_q).cwiseAbs().maxCoeff(),
                              (p_hom - expect_p).cwiseAbs().maxCoeff()});
      }
      exact_range = exact_range && epr_squeezing_range(mu, 0.0) == 1.0 / mu &&
                    epr_squeezing_range(mu, std::numeric_limits<double>::infinity()) == mu;
    }
    r.passed = worst_ltv <= 1e-12 && worst_mod <= 1e-12 && worst_end <= 1e-12 && exact_range;
    r.detail = "law of total variance " + sci(worst_ltv) + ", coherent modulation CM " +
               sci(worst_mod) + ", homodyne endpoints " + sci(worst_end) +
               " (tol 1e-12), r(0)=1/mu and r(inf)=mu exact: " + (exact_range ? "yes" : "no");
  });
}

CheckResult criterion_classification(const VerifyOptions&) {
  return timed("AC8", "channel classification table", [](CheckResult& r) {
    struct Row {
      double tau;
      double eta;
      CanonicalForm label;
      double omega;  // NaN when undefined
    };
    const double none = std::numeric_limits<double>::quiet_NaN();
    const std::array<Row, 7> table{{
        {1.0, 0.0, CanonicalForm::B2_identity, none},
        {0.5, 0.6, CanonicalForm::C_lossy, 1.2},
        {-1.0, 2.0, CanonicalForm::D, 1.0},
        {0.0, 1.5, CanonicalForm::A1, 1.5},
        {1.0, 0.7, CanonicalForm::B2_additive, none},
        {2.0, 1.0, CanonicalForm::C_amplifier, 1.0},
        {0.3, 0.7, CanonicalForm::C_lossy, 1.0},
    }};
    int failures = 0;
    std::string first_failure;
    for (const Row& row : table) {
      const auto c = classify(GaussianChannel(row.tau, row.eta));
      bool ok = c.label == row.label;
      if (!std::isnan(row.omega)) ok = ok && c.omega && std::abs(*c.omega - row.omega) <= 1e-12;
      if (!ok) {
        ++failures;
        if (first_failure.empty()) first_failure = "tau=" + format_number(row.tau);
      }
    }
    int boundary_rejected = 0;
    for (double tau : {-3.0, -1.0, -1.0 / 3.0, 0.0, 0.25, 1.0 / 3.0, 0.9, 1.0, 1.7, 4.0}) {
      try {
        GaussianChannel ch(tau, std::abs(1.0 - tau));
        if (!ch.is_quantum_limited()) ++boundary_rejected;
      } catch (const InvalidChannelParams&) {
        ++boundary_rejected;
      }
    }
    const auto [k_a2, n_a2] = pathological_form_matrices(CanonicalForm::A2, 0.0);
    const auto [k_b1, n_b1] = pathological_form_matrices(CanonicalForm::B1);
    const bool pathological = k_a2 == Mat2(Eigen::Vector2d(1.0, 0.0).asDiagonal()) &&
                              n_a2 == Mat2::Identity() && k_b1 == Mat2::Identity() &&
                              n_b1 == Mat2(Eigen::Vector2d(0.0, 1.0).asDiagonal());
    r.passed = failures == 0 && boundary_rejected == 0 && pathological;
    r.detail = std::to_string(7 - failures) + "/7 labels correct" +
               (first_failure.empty() ? "" : " (first failure " + first_failure + ")") +
               ", quantum-limited boundary rejected " + std::to_string(boundary_rejected) +
               "/10, A2/B1 matrices " + (pathological ? "ok" : "wrong");
  });
}

std::string sample_csv(unsigned threads) {
  std::ostringstream os;
  write_samples_csv(os, sample_family({2.0, 2.0, 500000, 42, threads}));
  return os.str();
}

CheckResult criterion_determinism(const VerifyOptions& opts) {
  return timed("AC9", "sampler determinism (seed 42, 5e5 rows)", [&](CheckResult& r) {
    const unsigned many = std::max(4u, opts.threads);
    const std::string first = sample_csv(1);
    const std::string second = sample_csv(1);
    const std::string parallel = sample_csv(many);
    r.passed = first == second && first == parallel && !first.empty();
    r.detail = "repeat run identical: " + std::string(first == second ? "yes" : "no") +
               ", 1 vs " + std::to_string(many) + " threads identical: " +
               (first == parallel ? "yes" : "no") + ", " + std::to_string(first.size()) + " bytes";
  });
}

// ---------------------------------------------------------------------------
// Module invariants.

CheckResult invariant_det_identity(const VerifyOptions& opts) {
  return timed("P1", "det V(a,b,c,c') = (ab - c^2)(ab - c'^2)", [&](CheckResult& r) {
    Rng rng(opts.seed + 101);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const NormalFormCM nf = family_cm_from_params(testing::random_family_params(rng));
      const double expect = (nf.a * nf.b - nf.c * nf.c) * (nf.a * nf.b - nf.cp * nf.cp);
      const double got = embed_normal_form(nf).matrix().determinant();
      worst = std::max(worst, std::abs(got - expect) / std::max(1.0, std::abs(expect)));
    }
    r.passed = worst <= 1e-9;
    r.detail = "max relative error " + sci(worst);
  });
}

CheckResult invariant_local_invariance(const VerifyOptions& opts) {
  return timed("P2", "spectrum and discord inputs invariant under local symplectics",
               [&](CheckResult& r) {
    Rng rng(opts.seed + 102);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const TwoModeCM v = testing::random_bona_fide_cm(rng);
      const TwoModeCM w = apply_local(v, testing::random_local_symplectic(rng),
                                      testing::random_local_symplectic(rng));
      const auto s1 = symplectic_spectrum(v);
      const auto s2 = symplectic_spectrum(w);
      worst = std::max({worst, std::abs(s1.nu_minus - s2.nu_minus) / s1.nu_plus,
                        std::abs(s1.nu_plus - s2.nu_plus) / s1.nu_plus});
    }
    r.passed = worst <= 1e-9;
    r.detail = "max relative spectrum change " + sci(worst);
  });
}

CheckResult invariant_channel_composition(const VerifyOptions& opts) {
  return timed("P3", "quantum-limited lossy channels compose multiplicatively",
               [&](CheckResult& r) {
    Rng rng(opts.seed + 103);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    bool preserved = true;
    for (int i = 0; i < 1000; ++i) {
      const TwoModeCM v = testing::random_bona_fide_cm(rng);
      const double t1 = unit(rng);
      const double t2 = unit(rng);
      const TwoModeCM two = apply_to_mode_A(GaussianChannel(t1, 1.0 - t1),
                                            apply_to_mode_A(GaussianChannel(t2, 1.0 - t2), v));
      const TwoModeCM one = apply_to_mode_A(GaussianChannel(t1 * t2, 1.0 - t1 * t2), v);
      worst = std::max(worst, (two.matrix() - one.matrix()).cwiseAbs().maxCoeff() /
                                  std::max(1.0, v.matrix().cwiseAbs().maxCoeff()));
      const double tau = 8.0 * unit(rng) - 4.0;
      const GaussianChannel ch(tau, std::abs(1.0 - tau) + 2.0 * unit(rng));
      preserved = preserved && validate_bona_fide(apply_to_mode_A(ch, v)).bona_fide;
    }
    r.passed = worst <= 1e-12 && preserved;
    r.detail = "composition error " + sci(worst) + ", bona fide preserved: " + (preserved ? "yes" : "no");
  });
}

CheckResult invariant_family_identities(const VerifyOptions& opts) {
  return timed("P4", "family: c c' identity, eta inversion, formulas vs channel matrices",
               [&](CheckResult& r) {
    Rng rng(opts.seed + 104);
    double worst_cc = 0.0;
    double worst_eta = 0.0;
    double worst_route = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const FamilyParams fp = testing::random_family_params(rng);
      const NormalFormCM nf = family_cm_from_params(fp);
      const double expect = -(fp.tau < 0 ? -1.0 : 1.0) * std::abs(fp.tau) * (fp.b * fp.b - 1.0);
      worst_cc = std::max(worst_cc, std::abs(nf.c * nf.cp - expect) / std::max(1.0, std::abs(expect)));
      worst_eta = std::max(worst_eta, std::abs(eta_from_a(nf.a, fp.r, fp.tau, fp.b) - fp.eta));
      worst_route = std::max(worst_route, normal_form_residual(family_cm_via_channels(fp), nf) /
                                              std::max(1.0, nf.a));
    }
    r.passed = worst_cc <= 1e-9 && worst_eta <= 1e-9 && worst_route <= 1e-9;
    r.detail = "c c' " + sci(worst_cc) + ", eta round trip " + sci(worst_eta) +
               ", closed formulas vs matrices " + sci(worst_route);
  });
}

CheckResult invariant_matched_measurement(const VerifyOptions& opts) {
  return timed("P5", "matched measurement reaches h(|tau| + eta)", [&](CheckResult& r) {
    Rng rng(opts.seed + 105);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const FamilyParams fp = testing::random_family_params(rng);
      const TwoModeCM v = embed_normal_form(family_cm_from_params(fp));
      const double s = conditional_entropy_measured(v, GaussianMeasurement(matched_measurement_u(fp), 0.0));
      worst = std::max(worst, std::abs(s - min_output_entropy(fp.channel())));
    }
    r.passed = worst <= 1e-8;
    r.detail = "max deviation " + sci(worst);
  });
}

CheckResult invariant_family_discord(const VerifyOptions& opts) {
  return timed("P6", "closed form vs numeric discord on 1000 family states", [&](CheckResult& r) {
    Rng rng(opts.seed + 106);
    double worst = 0.0;
    double min_discord = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const FamilyParams fp = testing::random_family_params(rng);
      const auto closed = gaussian_discord_closed_form(fp);
      const auto numeric = gaussian_discord_numeric(embed_normal_form(family_cm_from_params(fp)));
      worst = std::max(worst, std::abs(closed.discord - numeric.discord));
      min_discord = std::min({min_discord, numeric.discord, numeric.classical_corr});
    }
    r.passed = worst <= 1e-6 && min_discord >= -1e-6;
    r.detail = "max |D_closed - D_numeric| " + sci(worst) + ", min(discord, classical) " + sci(min_discord);
  });
}

CheckResult invariant_schur_oracle(const VerifyOptions& opts) {
  return timed("P7", "conditional CM matches full-matrix Schur complement", [&](CheckResult& r) {
    Rng rng(opts.seed + 107);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const TwoModeCM v = testing::random_bona_fide_cm(rng);
      const GaussianMeasurement m(std::exp(4.0 * unit(rng) - 2.0), std::numbers::pi * unit(rng));
      const Mat2 ref = oracle::schur_conditional_cm(v.matrix(), m.seed_cm());
      worst = std::max(worst, (conditional_cm(v, m) - ref).cwiseAbs().maxCoeff() /
                                  std::max(1.0, v.matrix().cwiseAbs().maxCoeff()));
    }
    r.passed = worst <= 1e-12;
    r.detail = "max relative deviation " + sci(worst);
  });
}

}  // namespace

CheckResult run_criterion(int number, const VerifyOptions& opts) {
  switch (number) {
    case 1:
      return criterion_closed_vs_numeric(opts);
    case 2:
      return criterion_heterodyne_optimal(opts);
    case 3:
      return criterion_worked_number(opts);
    case 4:
      return criterion_round_trips(opts);
    case 5:
      return criterion_coverage(opts);
    case 6:
      return criterion_entropy_oracle(opts);
    case 7:
      return criterion_remote_prep(opts);
    case 8:
      return criterion_classification(opts);
    case 9:
      return criterion_determinism(opts);
    default:
      throw DomainError("no acceptance criterion " + std::to_string(number));
  }
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (int i = 1; i <= 9; ++i) out.push_back(run_criterion(i, opts));
  return out;
}

std::vector<CheckResult> run_invariants(const VerifyOptions& opts) {
  return {invariant_det_identity(opts),       invariant_local_invariance(opts),
          invariant_channel_composition(opts), invariant_family_identities(opts),
          invariant_matched_measurement(opts), invariant_family_discord(opts),
          invariant_schur_oracle(opts)};
}

void print_result(std::ostream& os, const CheckResult& r) {
  os << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << std::fixed
     << std::setprecision(2) << r.seconds << "s): " << r.detail << "\n";
  os.unsetf(std::ios_base::floatfield);
}

}  // namespace gdiscord::verify
