#pragma once

#include <string>
#include <vector>

#include "gaptrack/adversary.hpp"
#include "gaptrack/bench.hpp"
#include "gaptrack/core.hpp"

namespace gaptrack::interface {

using gaptrack::ValidationError;

// Canonical single-line JSON; decode(encode(x)) == x and
// encode(decode(encode(x))) == encode(x).
std::string encode_car(const core::WheelConfig& car);
core::WheelConfig decode_car(const std::string& text);

std::string encode_track(const core::TrackLayout& track);
core::TrackLayout decode_track(const std::string& text);

// { "instance_family": name, "n_list": [...], "length_multiplier": k,
//   "seeds": m, "algorithms": [names], "base_seed": u }
bench::BenchConfig decode_bench_config(const std::string& text);

// CSV with '.' decimals, LF endings, %.6f reals.
std::string encode_bench_csv(const std::vector<bench::BenchRow>& rows);
std::string encode_lowerbound_csv(const adversary::LowerBoundReport& report);

}  // namespace gaptrack::interface
