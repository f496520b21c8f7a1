#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "gaptrack/core.hpp"

// The five track-construction algorithms. Each returns a track that the
// verifier accepts, together with build statistics. Seeded builders are pure
// functions of (instance, seed); build_even and build_conditional take no
// seed at all.

namespace gaptrack::builders {

enum class Algorithm {
  even,
  random_alterations,
  conditional,
  lll_fixit,
  minhash,
};

std::string_view algorithm_name(Algorithm algorithm);

struct BuildOutcome {
  core::TrackLayout track;
  Algorithm algorithm = Algorithm::even;
  std::int64_t pillar_count = 0;
  std::int64_t alteration_count = 0;  // pillars added by fix-up passes
  std::int64_t phase_count = 0;       // resampling phases (lll_fixit only)
  std::optional<std::uint64_t> seed;  // absent for deterministic builders
  double install_probability = 0.0;   // the p used, 0 where inapplicable
};

// min(1, ln(n)/n): the per-position install probability the random and
// conditional builders work with. Zero at n = 1.
double base_install_probability(std::int64_t wheel_count);

// min(1, (1 + 2 ln n)/n): the boosted probability the fix-it builder needs
// so each failure event has probability at most 1/(e n^2).
double lll_install_probability(std::int64_t wheel_count);

// Evenly spaced car {g, 2g, .., ng} with f = n*g, plus pillar blocks of
// length g repeating with period max(1, (n-2)*g + 2). The only builder that
// chooses its own car.
std::pair<core::WheelConfig, BuildOutcome> build_even(std::int64_t wheel_count,
                                                      std::int64_t spacing,
                                                      std::int64_t track_length);

// Install each position independently with probability ln(n)/n, then patch
// every offset that still falls through with one pillar at k + max(C).
BuildOutcome build_random_alterations(const core::Instance& instance,
                                      std::uint64_t seed);

// Derandomization of build_random_alterations by the method of conditional
// probabilities: decide positions 1..l in order, each time picking the value
// whose conditional expected final track size is smaller (ties keep the
// position empty), then patch residual failures. Deterministic; the final
// count is at most ceil(l * (1 + ln n)/n).
BuildOutcome build_conditional(const core::Instance& instance);

// Moser-Tardos fix-it: sample all positions with probability
// (1 + 2 ln n)/n, then repeatedly resample the pillar positions of the
// smallest failing offset until none fails. phase_count reports the number
// of resampling rounds.
BuildOutcome build_lll_fixit(const core::Instance& instance,
                             std::uint64_t seed);

// Min-hash sampling: give every position a pseudorandom 64-bit rank and keep,
// for each offset, the candidate position of minimum rank (ties to the
// smaller position). Supported by construction.
BuildOutcome build_minhash(const core::Instance& instance, std::uint64_t seed);

}  // namespace gaptrack::builders
