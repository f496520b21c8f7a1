#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gaptrack/core.hpp"

namespace gaptrack::adversary {

using gaptrack::ValidationError;

// The lower-bound regime: cars drawn on {1..2n} with wheel probability 1/2,
// tracks living on a length-4n stretch, so there are exactly 2n+1 offsets.
struct AdversarySetup {
  std::int64_t n = 0;
  std::int64_t quarter_length = 0;  // 2n
  std::int64_t track_length = 0;    // 4n
  double wheel_probability = 0.5;
};

AdversarySetup make_setup(std::int64_t n);

struct SampleDetail {
  core::WheelConfig car;
  std::int64_t resamples = 0;  // empty draws replaced with derived seeds
};

// Draws each position of {1..2n} independently with probability 1/2.
// An empty draw is resampled deterministically; the count is recorded.
SampleDetail sample_car_detail(std::int64_t n, std::uint64_t seed);
core::WheelConfig sample_car(std::int64_t n, std::uint64_t seed);

// Exact E[Y] over the car distribution: sum over offsets k of
// 2^-|(T-k) ∩ {1..2n}|. Positions of T outside the car's reach at offset k
// can never hold a wheel, hence the in-range intersection.
double expected_y_exact(const AdversarySetup& setup,
                        const core::TrackLayout& track);

// min(1, 2 exp(-2 S^2 / m)), the bounded-differences tail.
double mcdiarmid_tail(double s, std::int64_t m);

struct DeviationRow {
  double s = 0;
  double empirical_frequency = 0;
  double mcdiarmid_bound = 0;
};

struct ConcentrationReport {
  std::int64_t trials = 0;
  double exact_mean = 0;
  double empirical_mean = 0;
  double empirical_stddev = 0;  // population stddev of the sampled Y values
  double lipschitz_r = 0;       // |T|
  std::vector<DeviationRow> deviation_table;
};

// Samples `trials` cars, measures Y per car, and tabulates how often
// |Y - exact_mean| exceeds R*S for each S against the McDiarmid tail at
// m = 2n. Deterministic in seed.
ConcentrationReport concentration_trial(const AdversarySetup& setup,
                                        const core::TrackLayout& track,
                                        std::int64_t trials,
                                        std::uint64_t seed,
                                        const std::vector<double>& s_grid);

struct LowerBoundRow {
  std::int64_t n = 0;
  std::int64_t trials = 0;
  double median_min_track = 0;
  double mean_min_track = 0;
  std::int64_t max_min_track = 0;
  std::int64_t discarded_small_cars = 0;
  std::int64_t capped_trials = 0;       // exact solves that hit the node limit
  std::vector<std::int64_t> sizes;      // per-trial minimum sizes, sorted
  // (wheel count, minimum size) per qualifying trial in sample order. The
  // counting floor ceil((2n+1)/wheel_count) is per-car: qualifying only
  // bounds |C| from below, so cars with more than n wheels can legitimately
  // need as few as 2 pillars.
  std::vector<std::pair<std::int64_t, std::int64_t>> per_trial;
};

struct LowerBoundReport {
  std::vector<LowerBoundRow> rows;  // sorted by n
};

// For each n, collects trials_per_n cars with |C| >= n (counting discards),
// solves each exactly on a length-4n track, and aggregates the minimum
// sizes. Trial randomness depends only on (seed, n, attempt index).
LowerBoundReport lowerbound_sweep(const std::vector<std::int64_t>& n_list,
                                  std::int64_t trials_per_n,
                                  std::uint64_t seed);

}  // namespace gaptrack::adversary
