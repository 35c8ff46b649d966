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

#include "gdiscord/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <string>
#include <thread>

#include "gdiscord/errors.hpp"

namespace gdiscord {

namespace {

constexpr int kMaxConsecutiveRedraws = 1000;

std::mt19937_64 chunk_generator(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

std::optional<SamplePoint> draw(double a, double b, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = 1.0 / b + (b - 1.0 / b) * unit(gen);
  const double t = unit(gen);
  const EprSign sign = unit(gen) < 0.5 ? EprSign::plus : EprSign::minus;

  const TauInterval bounds = tau_bounds(a, b, r);
  const double tau = bounds.tau_min + (bounds.tau_max - bounds.tau_min) * t;
  double eta = 0.0;
  try {
    eta = eta_from_a(a, r, tau, b);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  if (eta < std::abs(1.0 - tau)) {
    if (eta < std::abs(1.0 - tau) - 1e-9 * std::max(1.0, std::abs(tau))) return std::nullopt;
    eta = std::abs(1.0 - tau);
  }

  const FamilyParams fp{b, r, tau, eta, sign};
  NormalFormCM nf;
  try {
    nf = family_cm_from_params(fp);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!std::isfinite(nf.c) || !std::isfinite(nf.cp)) return std::nullopt;
  if (!validate_bona_fide(embed_normal_form({a, b, nf.c, nf.cp}))) return std::nullopt;
  return SamplePoint{a, b, nf.c, nf.cp, true, fp};
}

}  // namespace

SampleResult sample_family(const SampleOptions& opts) {
  if (!(opts.a >= 1.0) || !(opts.b >= 1.0)) {
    throw DomainError("sample_family: a and b must be >= 1");
  }
  if (opts.n == 0) throw DomainError("sample_family: n must be >= 1");

  const std::size_t chunks = (opts.n + kSampleChunkSize - 1) / kSampleChunkSize;
  SampleResult out;
  out.points.resize(opts.n);
  std::vector<std::size_t> redraws(chunks, 0);
  std::vector<std::string> failures(chunks);

  auto run_chunk = [&](std::size_t chunk) {
    auto gen = chunk_generator(opts.seed, chunk);
    const std::size_t begin = chunk * kSampleChunkSize;
    const std::size_t end = std::min(opts.n, begin + kSampleChunkSize);
    for (std::size_t i = begin; i < end; ++i) {
      int misses = 0;
      for (;;) {
        if (auto p = draw(opts.a, opts.b, gen)) {
          out.points[i] = *p;
          break;
        }
        ++redraws[chunk];
        if (++misses >= kMaxConsecutiveRedraws) {
          failures[chunk] = "sampler: no admissible draw for a=" + std::to_string(opts.a) +
                            " b=" + std::to_string(opts.b);
          return;
        }
      }
    }
  };

  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, chunks));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < chunks; c = next++) run_chunk(c);
      });
    }
  }

  for (std::size_t c = 0; c < chunks; ++c) {
    if (!failures[c].empty()) throw NumericalFailure(failures[c]);
    out.redraws += redraws[c];
  }
  return out;
}

double OccupancyGrid::cell_center(std::size_t i) const {
  const double width = 2.0 * extent / static_cast<double>(bins);
  return -extent + (static_cast<double>(i) + 0.5) * width;
}

OccupancyGrid occupancy_grid(const std::vector<SamplePoint>& points, double a, double b,
                             std::size_t bins) {
  if (bins == 0) throw DomainError("occupancy grid needs at least one bin");
  OccupancyGrid g;
  g.a = a;
  g.b = b;
  g.extent = std::sqrt(a * b);
  g.bins = bins;
  g.counts.assign(bins, std::vector<std::uint64_t>(bins, 0));
  const double scale = static_cast<double>(bins) / (2.0 * g.extent);
  auto index = [&](double x) -> std::optional<std::size_t> {
    const double f = std::floor((x + g.extent) * scale);
    if (f < 0.0 || f >= static_cast<double>(bins)) return std::nullopt;
    return static_cast<std::size_t>(f);
  };
  for (const auto& p : points) {
    const auto i = index(p.c);
    const auto j = index(p.cp);
    if (i && j) ++g.counts[*i][*j];
  }
  return g;
}

double occupancy_fraction(const OccupancyGrid& grid) {
  std::size_t physical = 0;
  std::size_t occupied = 0;
  for (std::size_t i = 0; i < grid.bins; ++i) {
    for (std::size_t j = 0; j < grid.bins; ++j) {
      const NormalFormCM nf{grid.a, grid.b, grid.cell_center(i), grid.cell_center(j)};
      if (!validate_bona_fide(embed_normal_form(nf))) continue;
      ++physical;
      if (grid.counts[i][j] > 0) ++occupied;
    }
  }
  return physical == 0 ? 0.0 : static_cast<double>(occupied) / static_cast<double>(physical);
}

}  // namespace gdiscord
