#include "gaptrack/core.hpp"

#include <algorithm>

#include "gaptrack/rng.hpp"

namespace gaptrack {

namespace rng {

std::vector<std::int64_t> sample_distinct_sorted(Stream& stream,
                                                 std::int64_t count,
                                                 std::int64_t lo,
                                                 std::int64_t hi) {
  const std::int64_t range = hi - lo + 1;
  if (count < 0 || count > range) {
    throw ValidationError("sample count exceeds range");
  }
  // Partial Fisher-Yates over [lo, hi].
  std::vector<std::int64_t> pool(static_cast<std::size_t>(range));
  for (std::int64_t i = 0; i < range; ++i) pool[i] = lo + i;
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t j =
        i + static_cast<std::int64_t>(stream.below(static_cast<std::uint64_t>(range - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace rng

namespace core {

WheelConfig make_wheel_config(std::int64_t quarter_length,
                              std::vector<std::int64_t> wheels) {
  if (quarter_length < 1) {
    throw ValidationError("quarter length must be positive");
  }
  if (wheels.empty()) {
    throw ValidationError("empty wheel set");
  }
  for (std::size_t i = 0; i < wheels.size(); ++i) {
    if (wheels[i] < 1 || wheels[i] > quarter_length) {
      throw ValidationError("wheel out of range");
    }
    if (i > 0) {
      if (wheels[i] == wheels[i - 1]) throw ValidationError("duplicate wheel");
      if (wheels[i] < wheels[i - 1]) throw ValidationError("wheels not sorted");
    }
  }
  return WheelConfig{quarter_length, std::move(wheels)};
}

TrackLayout make_track_layout(std::int64_t track_length,
                              std::vector<std::int64_t> pillars) {
  if (track_length < 1) {
    throw ValidationError("track length must be positive");
  }
  for (std::size_t i = 0; i < pillars.size(); ++i) {
    if (pillars[i] < 1 || pillars[i] > track_length) {
      throw ValidationError("pillar out of range");
    }
    if (i > 0) {
      if (pillars[i] == pillars[i - 1]) throw ValidationError("duplicate pillar");
      if (pillars[i] < pillars[i - 1]) throw ValidationError("pillars not sorted");
    }
  }
  return TrackLayout{track_length, std::move(pillars)};
}

Instance validate_instance(WheelConfig car, std::int64_t track_length) {
  // Re-check the car so raw aggregate-initialized inputs are caught too.
  WheelConfig checked = make_wheel_config(car.quarter_length, std::move(car.wheels));
  if (track_length < checked.quarter_length) {
    throw ValidationError("track shorter than quarter");
  }
  return Instance{std::move(checked), track_length};
}

CoverageReport coverage(const Instance& instance, const TrackLayout& track) {
  if (track.track_length != instance.track_length) {
    throw ValidationError("track length mismatch");
  }
  const std::int64_t l = instance.track_length;
  std::vector<char> installed(static_cast<std::size_t>(l) + 1, 0);
  for (const std::int64_t p : track.pillars) installed[p] = 1;

  CoverageReport report;
  const auto& wheels = instance.car.wheels;
  const std::int64_t offsets = instance.offset_count();
  for (std::int64_t k = 0; k < offsets; ++k) {
    bool hit = false;
    for (const std::int64_t w : wheels) {
      if (installed[k + w]) {
        hit = true;
        break;
      }
    }
    if (!hit) report.failing_offsets.push_back(k);
  }
  report.failure_count = static_cast<std::int64_t>(report.failing_offsets.size());
  report.supported = report.failure_count == 0;
  return report;
}

std::vector<std::int64_t> pillar_cover_set(const Instance& instance,
                                           std::int64_t pillar) {
  if (pillar < 1 || pillar > instance.track_length) {
    throw ValidationError("pillar out of range");
  }
  const std::int64_t max_offset = instance.track_length - instance.car.quarter_length;
  std::vector<std::int64_t> covered;
  const auto& wheels = instance.car.wheels;
  // Wheels ascending yields offsets descending; emit ascending.
  for (auto it = wheels.rbegin(); it != wheels.rend(); ++it) {
    const std::int64_t k = pillar - *it;
    if (k >= 0 && k <= max_offset) covered.push_back(k);
  }
  return covered;
}

}  // namespace core
}  // namespace gaptrack
