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

#ifndef GDISCORD_SAMPLER_HPP
#define GDISCORD_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gdiscord/family.hpp"

namespace gdiscord {

/// One point of the correlation plane (c, c') at fixed (a, b).
struct SamplePoint {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  double cp = 0.0;
  bool member = false;
  std::optional<FamilyParams> params;
};

struct SampleOptions {
  double a = 1.0;
  double b = 1.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SampleResult {
  std::vector<SamplePoint> points;
  /// Draws rejected (non-physical after rounding) and redrawn.
  std::size_t redraws = 0;
};

/// Draws used per independently seeded chunk.
inline constexpr std::size_t kSampleChunkSize = 8192;

/// Family members at fixed (a, b): r uniform on [1/b, b], tau uniform on
/// tau_bounds(a, b, r), eta from eta_from_a, EPR sign uniform on {+1, -1}.
///
/// Work is split in chunks of kSampleChunkSize draws; chunk i draws from a
/// generator seeded with (seed, i), so the output depends only on
/// (a, b, n, seed) and not on the thread count. Throws DomainError for
/// a, b < 1 or n = 0.
SampleResult sample_family(const SampleOptions& opts);

/// Counts on a bins x bins grid covering [-extent, extent]^2 in (c, c'),
/// extent = sqrt(a b) (positivity bounds |c|, |c'| by it). counts[i][j]
/// is the cell with c in column i and c' in row j.
struct OccupancyGrid {
  double a = 1.0;
  double b = 1.0;
  double extent = 1.0;
  std::size_t bins = 0;
  std::vector<std::vector<std::uint64_t>> counts;

  double cell_center(std::size_t i) const;
};

OccupancyGrid occupancy_grid(const std::vector<SamplePoint>& points, double a, double b,
                             std::size_t bins = 200);

/// Fraction of physical cells (bona fide at the cell centre) holding at least
/// one sample.
double occupancy_fraction(const OccupancyGrid& grid);

}  // namespace gdiscord

#endif  // GDISCORD_SAMPLER_HPP
