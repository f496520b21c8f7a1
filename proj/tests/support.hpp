#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gaptrack/core.hpp"
#include "gaptrack/rng.hpp"

// Independent oracles for the property tests. These restate definitions
// from scratch (linear scans, exhaustive enumeration) and deliberately
// share no logic with the library implementations they check.

namespace testsupport {

using namespace gaptrack;

// Literal restatement of support: for every offset, try every wheel, and
// search the pillar list linearly.
inline core::CoverageReport naive_coverage(const core::Instance& instance,
                                           const core::TrackLayout& track) {
  core::CoverageReport report;
  const std::int64_t offsets = instance.offset_count();
  for (std::int64_t k = 0; k < offsets; ++k) {
    bool hit = false;
    for (const std::int64_t w : instance.car.wheels) {
      for (const std::int64_t p : track.pillars) {
        if (p == k + w) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) report.failing_offsets.push_back(k);
  }
  report.failure_count = static_cast<std::int64_t>(report.failing_offsets.size());
  report.supported = report.failing_offsets.empty();
  return report;
}

// Exhaustive minimum: try all 2^l pillar subsets. Usable for l <= 20.
inline std::int64_t brute_force_min_cover(const core::Instance& instance) {
  const std::int64_t l = instance.track_length;
  const std::int64_t offsets = instance.offset_count();
  std::vector<std::uint32_t> offset_mask(static_cast<std::size_t>(offsets), 0);
  for (std::int64_t k = 0; k < offsets; ++k) {
    for (const std::int64_t w : instance.car.wheels) {
      offset_mask[static_cast<std::size_t>(k)] |= std::uint32_t{1}
                                                  << (k + w - 1);
    }
  }
  std::int64_t best = l;  // the full track always covers
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << l); ++mask) {
    if (std::popcount(mask) >= best) continue;
    bool covers = true;
    for (std::int64_t k = 0; k < offsets; ++k) {
      if (!(mask & offset_mask[static_cast<std::size_t>(k)])) {
        covers = false;
        break;
      }
    }
    if (covers) best = std::popcount(mask);
  }
  return best;
}

// Exact E[Y] by enumerating all 2^(2n) cars, the empty one included.
inline double brute_force_expected_y(std::int64_t n,
                                     const core::TrackLayout& track) {
  const std::int64_t f = 2 * n;
  const std::int64_t offsets = f + 1;
  std::vector<char> pillar(static_cast<std::size_t>(track.track_length) + 1, 0);
  for (const std::int64_t p : track.pillars) pillar[static_cast<std::size_t>(p)] = 1;

  // Bit w-1 of offset_mask[k] is set when position k+w holds a pillar.
  std::vector<std::uint64_t> offset_mask(static_cast<std::size_t>(offsets), 0);
  for (std::int64_t k = 0; k < offsets; ++k) {
    for (std::int64_t w = 1; w <= f; ++w) {
      if (pillar[static_cast<std::size_t>(k + w)]) {
        offset_mask[static_cast<std::size_t>(k)] |= std::uint64_t{1} << (w - 1);
      }
    }
  }

  double total = 0;
  const std::uint64_t cars = std::uint64_t{1} << f;
  for (std::uint64_t car = 0; car < cars; ++car) {
    std::int64_t y = 0;
    for (std::int64_t k = 0; k < offsets; ++k) {
      if ((car & offset_mask[static_cast<std::size_t>(k)]) == 0) ++y;
    }
    total += static_cast<double>(y);
  }
  return total / static_cast<double>(cars);
}

// Uniform-ish random instance within the given caps.
inline core::Instance random_instance(rng::Stream& stream, std::int64_t max_n,
                                      std::int64_t max_l) {
  const std::int64_t l =
      1 + static_cast<std::int64_t>(stream.below(static_cast<std::uint64_t>(max_l)));
  const std::int64_t f =
      1 + static_cast<std::int64_t>(stream.below(static_cast<std::uint64_t>(l)));
  const std::int64_t n =
      1 + static_cast<std::int64_t>(
              stream.below(static_cast<std::uint64_t>(std::min(max_n, f))));
  return core::Instance{
      .car = core::make_wheel_config(
          f, rng::sample_distinct_sorted(stream, n, 1, f)),
      .track_length = l,
  };
}

// Random pillar subset, possibly empty.
inline core::TrackLayout random_track(rng::Stream& stream, std::int64_t l) {
  std::vector<std::int64_t> pillars;
  for (std::int64_t j = 1; j <= l; ++j) {
    if (stream.chance(0.5)) pillars.push_back(j);
  }
  return core::make_track_layout(l, std::move(pillars));
}

}  // namespace testsupport
