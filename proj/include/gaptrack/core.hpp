#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Domain model for gapped train tracks.
//
// A car quarter of length f feet carries wheels at distinct integer offsets
// C from its rear. A track of length l feet is a set of 1-foot pillars T at
// integer positions in {1..l}. The car sits at integer offsets
// k in {0..l-f}; it is supported at k when (C + k) intersects T. Everything
// else in the project treats `coverage` below as ground truth.

namespace gaptrack {

// Raised for any input that violates a domain invariant. Messages are
// stable and distinct per failure mode; the CLI surfaces them verbatim.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation exceeds a hard resource cap (e.g. the
// resampling-phase cap). Not expected in normal use.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace core {

// Wheel offsets within one quarter of the car.
struct WheelConfig {
  std::int64_t quarter_length = 0;     // f, feet
  std::vector<std::int64_t> wheels;    // strictly increasing, within [1, f]

  std::int64_t wheel_count() const {
    return static_cast<std::int64_t>(wheels.size());
  }
  std::int64_t max_wheel() const { return wheels.back(); }
};

// A quarter paired with the track length it must be supported on.
struct Instance {
  WheelConfig car;
  std::int64_t track_length = 0;  // l, feet; l >= f

  // Valid car offsets are exactly {0 .. l - f}.
  std::int64_t offset_count() const {
    return track_length - car.quarter_length + 1;
  }
};

// Installed pillar positions.
struct TrackLayout {
  std::int64_t track_length = 0;
  std::vector<std::int64_t> pillars;  // strictly increasing, within [1, l]

  std::int64_t pillar_count() const {
    return static_cast<std::int64_t>(pillars.size());
  }
};

// Verdict of the exact verifier. supported <=> failure_count == 0.
struct CoverageReport {
  bool supported = false;
  std::vector<std::int64_t> failing_offsets;  // sorted, within {0..l-f}
  std::int64_t failure_count = 0;
};

// Checked constructors. Each rejects a malformed value with a distinct
// ValidationError message.
WheelConfig make_wheel_config(std::int64_t quarter_length,
                              std::vector<std::int64_t> wheels);
TrackLayout make_track_layout(std::int64_t track_length,
                              std::vector<std::int64_t> pillars);
Instance validate_instance(WheelConfig car, std::int64_t track_length);

// The exact verifier: failing_offsets = { k : (C + k) ∩ T = ∅ }.
// O(offset_count * n). Throws if the track was built for another length.
CoverageReport coverage(const Instance& instance, const TrackLayout& track);

// Offsets a single pillar supports: { k : pillar ∈ C + k }, ascending.
// This is the incidence structure the builders and the oracle share.
std::vector<std::int64_t> pillar_cover_set(const Instance& instance,
                                           std::int64_t pillar);

}  // namespace core
}  // namespace gaptrack
