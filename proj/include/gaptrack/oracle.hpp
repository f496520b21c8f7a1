#pragma once

#include <cstdint>
#include <optional>

#include "gaptrack/core.hpp"

// Minimum-track solvers. Offsets form the universe, pillars the candidate
// sets; min_track_exact certifies a minimum-cardinality supporting track by
// branch and bound and min_track_greedy gives the classical greedy cover.
// Desk-scale tools: the exact search is exponential in the worst case.

namespace gaptrack::oracle {

inline constexpr std::int64_t kDefaultNodeLimit = 10'000'000;

struct OracleResult {
  // Best supporting track found, if any was admissible.
  std::optional<core::TrackLayout> track;
  // True only when an exhausted search certified `track` as minimum.
  bool optimal = false;
  std::int64_t explored_nodes = 0;
  std::optional<std::int64_t> size_cap;
  // Search stopped at node_limit; results are best-found, not certificates.
  // Distinguishes "ran out of budget" from a certified "no track within
  // size_cap" (track absent, node_limit_reached false).
  bool node_limit_reached = false;
};

// Certified minimum supporting track, or absent when size_cap rules every
// track out. Branches on the uncovered offset with the fewest candidate
// pillars, prunes with ceil(remaining / max_cover) and the greedy upper
// bound, and memoizes visited uncovered-sets.
OracleResult min_track_exact(const core::Instance& instance,
                             std::optional<std::int64_t> size_cap = std::nullopt,
                             std::int64_t node_limit = kDefaultNodeLimit);

// Greedy cover: repeatedly take the pillar supporting the most uncovered
// offsets, ties to the smaller position. Never marked optimal.
OracleResult min_track_greedy(const core::Instance& instance);

}  // namespace gaptrack::oracle
