#pragma once

#include <cstdint>
#include <string>

#include "gaptrack/core.hpp"

namespace gaptrack::render {

// One character per foot: '#' pillar, '.' gap.
std::string render_ascii(const core::TrackLayout& track);

// Adds a second line marking the car's wheels at the given offset:
// 'W' where a wheel rests on a pillar, 'w' where it hangs over a gap.
std::string render_ascii(const core::TrackLayout& track,
                         const core::Instance& instance, std::int64_t offset);

}  // namespace gaptrack::render
