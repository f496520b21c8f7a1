#include "gaptrack/render.hpp"

namespace gaptrack::render {

std::string render_ascii(const core::TrackLayout& track) {
  std::string line(static_cast<std::size_t>(track.track_length), '.');
  for (const std::int64_t pillar : track.pillars) {
    line[static_cast<std::size_t>(pillar - 1)] = '#';
  }
  return line;
}

std::string render_ascii(const core::TrackLayout& track,
                         const core::Instance& instance, std::int64_t offset) {
  core::validate_instance(instance.car, instance.track_length);
  if (instance.track_length != track.track_length) {
    throw ValidationError("track length mismatch");
  }
  if (offset < 0 || offset > instance.track_length - instance.car.quarter_length) {
    throw ValidationError("offset out of range");
  }
  const std::string pillars = render_ascii(track);
  std::string wheels(static_cast<std::size_t>(track.track_length), ' ');
  for (const std::int64_t w : instance.car.wheels) {
    const std::size_t at = static_cast<std::size_t>(offset + w - 1);
    wheels[at] = pillars[at] == '#' ? 'W' : 'w';
  }
  while (!wheels.empty() && wheels.back() == ' ') wheels.pop_back();
  return pillars + '\n' + wheels;
}

}  // namespace gaptrack::render
