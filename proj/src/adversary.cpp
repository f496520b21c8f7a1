#include "gaptrack/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "gaptrack/oracle.hpp"
#include "gaptrack/rng.hpp"

namespace gaptrack::adversary {
namespace {

constexpr std::uint64_t kTagCar = 0x63617200;    // sweep car draws
constexpr std::uint64_t kTagTrial = 0x74726900;  // concentration car draws

// One p=1/2 draw over {1..2n}; may be empty.
std::vector<std::int64_t> raw_draw(std::int64_t n, std::uint64_t seed,
                                   std::uint64_t attempt) {
  std::vector<std::int64_t> wheels;
  for (std::int64_t j = 1; j <= 2 * n; ++j) {
    if (rng::chance(rng::mix(seed, attempt, static_cast<std::uint64_t>(j)),
                    0.5)) {
      wheels.push_back(j);
    }
  }
  return wheels;
}

double median_of_sorted(const std::vector<std::int64_t>& sizes) {
  const std::size_t m = sizes.size();
  if (m % 2 == 1) return static_cast<double>(sizes[m / 2]);
  return (static_cast<double>(sizes[m / 2 - 1]) +
          static_cast<double>(sizes[m / 2])) /
         2.0;
}

}  // namespace

AdversarySetup make_setup(std::int64_t n) {
  if (n < 1) throw ValidationError("n must be positive");
  return AdversarySetup{
      .n = n,
      .quarter_length = 2 * n,
      .track_length = 4 * n,
      .wheel_probability = 0.5,
  };
}

SampleDetail sample_car_detail(std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("n must be positive");
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::vector<std::int64_t> wheels = raw_draw(n, seed, attempt);
    if (!wheels.empty()) {
      return SampleDetail{
          .car = core::make_wheel_config(2 * n, std::move(wheels)),
          .resamples = static_cast<std::int64_t>(attempt),
      };
    }
  }
}

core::WheelConfig sample_car(std::int64_t n, std::uint64_t seed) {
  return sample_car_detail(n, seed).car;
}

double expected_y_exact(const AdversarySetup& setup,
                        const core::TrackLayout& track) {
  if (track.track_length != setup.track_length) {
    throw ValidationError("track length mismatch");
  }
  for (const std::int64_t t : track.pillars) {
    if (t < 1 || t > setup.track_length) {
      throw ValidationError("pillar out of range");
    }
  }
  const std::int64_t f = setup.quarter_length;
  double total = 0;
  for (std::int64_t k = 0; k <= f; ++k) {
    std::int64_t reachable = 0;
    for (const std::int64_t t : track.pillars) {
      const std::int64_t w = t - k;
      if (w >= 1 && w <= f) ++reachable;
    }
    total += std::ldexp(1.0, static_cast<int>(-reachable));
  }
  return total;
}

double mcdiarmid_tail(double s, std::int64_t m) {
  return std::min(1.0, 2.0 * std::exp(-2.0 * s * s / static_cast<double>(m)));
}

ConcentrationReport concentration_trial(const AdversarySetup& setup,
                                        const core::TrackLayout& track,
                                        std::int64_t trials,
                                        std::uint64_t seed,
                                        const std::vector<double>& s_grid) {
  if (trials < 1) throw ValidationError("trials must be positive");
  const double exact_mean = expected_y_exact(setup, track);
  const double r = static_cast<double>(track.pillar_count());
  const std::int64_t offsets = setup.track_length - setup.quarter_length + 1;

  std::vector<std::int64_t> exceed(s_grid.size(), 0);
  double sum_y = 0;
  double sum_y2 = 0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::vector<std::int64_t> wheels =
        raw_draw(setup.n, rng::mix(seed, kTagTrial), static_cast<std::uint64_t>(trial));
    std::int64_t y = 0;
    if (wheels.empty()) {
      y = offsets;  // a wheelless car falls at every offset
    } else {
      core::Instance instance{
          .car = core::make_wheel_config(setup.quarter_length, std::move(wheels)),
          .track_length = setup.track_length,
      };
      y = core::coverage(instance, track).failure_count;
    }
    sum_y += static_cast<double>(y);
    sum_y2 += static_cast<double>(y) * static_cast<double>(y);
    const double deviation = std::abs(static_cast<double>(y) - exact_mean);
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
      if (deviation > r * s_grid[i]) ++exceed[i];
    }
  }

  ConcentrationReport report;
  report.trials = trials;
  report.exact_mean = exact_mean;
  report.empirical_mean = sum_y / static_cast<double>(trials);
  report.empirical_stddev = std::sqrt(std::max(
      0.0, sum_y2 / static_cast<double>(trials) -
               report.empirical_mean * report.empirical_mean));
  report.lipschitz_r = r;
  report.deviation_table.reserve(s_grid.size());
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    report.deviation_table.push_back(DeviationRow{
        .s = s_grid[i],
        .empirical_frequency =
            static_cast<double>(exceed[i]) / static_cast<double>(trials),
        .mcdiarmid_bound = mcdiarmid_tail(s_grid[i], 2 * setup.n),
    });
  }
  return report;
}

LowerBoundReport lowerbound_sweep(const std::vector<std::int64_t>& n_list,
                                  std::int64_t trials_per_n,
                                  std::uint64_t seed) {
  if (trials_per_n < 1) throw ValidationError("trials must be positive");
  std::vector<std::int64_t> ns = n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  LowerBoundReport report;
  for (const std::int64_t n : ns) {
    if (n < 1) throw ValidationError("n must be positive");
    const AdversarySetup setup = make_setup(n);

    LowerBoundRow row;
    row.n = n;
    row.trials = trials_per_n;

    std::vector<std::int64_t> sizes;
    sizes.reserve(static_cast<std::size_t>(trials_per_n));
    for (std::uint64_t attempt = 0;
         static_cast<std::int64_t>(sizes.size()) < trials_per_n; ++attempt) {
      const core::WheelConfig car =
          sample_car(n, rng::mix(seed, kTagCar, static_cast<std::uint64_t>(n),
                                 attempt));
      if (car.wheel_count() < n) {
        ++row.discarded_small_cars;
        continue;
      }
      const core::Instance instance{.car = car,
                                    .track_length = setup.track_length};
      const oracle::OracleResult solved = oracle::min_track_exact(instance);
      if (solved.node_limit_reached) ++row.capped_trials;
      const std::int64_t size = solved.track ? solved.track->pillar_count() : 0;
      sizes.push_back(size);
      row.per_trial.emplace_back(car.wheel_count(), size);
    }

    std::sort(sizes.begin(), sizes.end());
    row.median_min_track = median_of_sorted(sizes);
    double sum = 0;
    for (const std::int64_t s : sizes) sum += static_cast<double>(s);
    row.mean_min_track = sum / static_cast<double>(sizes.size());
    row.max_min_track = sizes.back();
    row.sizes = std::move(sizes);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gaptrack::adversary
