#include "gaptrack/serialize.hpp"

#include <cstdio>
#include <initializer_list>
#include <string>

#include <json.hpp>

namespace gaptrack::interface {
namespace {

using nlohmann::json;

json parse_object(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed json: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("schema violation: expected an object");
  }
  return doc;
}

void check_keys(const json& doc, std::initializer_list<const char*> allowed) {
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ValidationError("unknown key: " + item.key());
  }
}

const json& require_key(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ValidationError(std::string("missing key: ") + key);
  }
  return doc.at(key);
}

std::int64_t require_int(const json& doc, const char* key) {
  const json& value = require_key(doc, key);
  if (!value.is_number_integer()) {
    throw ValidationError(std::string("schema violation: ") + key +
                          " must be an integer");
  }
  return value.get<std::int64_t>();
}

std::uint64_t require_uint(const json& doc, const char* key) {
  const json& value = require_key(doc, key);
  if (value.is_number_unsigned()) return value.get<std::uint64_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  throw ValidationError(std::string("schema violation: ") + key +
                        " must be a nonnegative integer");
}

std::vector<std::int64_t> require_int_array(const json& doc, const char* key) {
  const json& value = require_key(doc, key);
  if (!value.is_array()) {
    throw ValidationError(std::string("schema violation: ") + key +
                          " must be an array");
  }
  std::vector<std::int64_t> items;
  items.reserve(value.size());
  for (const json& element : value) {
    if (!element.is_number_integer()) {
      throw ValidationError(std::string("schema violation: ") + key +
                            " must contain integers");
    }
    items.push_back(element.get<std::int64_t>());
  }
  return items;
}

std::string join_ints(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string fmt6(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

}  // namespace

std::string encode_car(const core::WheelConfig& car) {
  return "{\"quarter_length\":" + std::to_string(car.quarter_length) +
         ",\"wheels\":[" + join_ints(car.wheels) + "]}";
}

core::WheelConfig decode_car(const std::string& text) {
  const json doc = parse_object(text);
  check_keys(doc, {"quarter_length", "wheels"});
  const std::int64_t quarter = require_int(doc, "quarter_length");
  return core::make_wheel_config(quarter, require_int_array(doc, "wheels"));
}

std::string encode_track(const core::TrackLayout& track) {
  return "{\"track_length\":" + std::to_string(track.track_length) +
         ",\"pillars\":[" + join_ints(track.pillars) + "]}";
}

core::TrackLayout decode_track(const std::string& text) {
  const json doc = parse_object(text);
  check_keys(doc, {"track_length", "pillars"});
  const std::int64_t length = require_int(doc, "track_length");
  return core::make_track_layout(length, require_int_array(doc, "pillars"));
}

bench::BenchConfig decode_bench_config(const std::string& text) {
  const json doc = parse_object(text);
  check_keys(doc, {"instance_family", "n_list", "length_multiplier", "seeds",
                   "algorithms", "base_seed"});

  const json& family = require_key(doc, "instance_family");
  if (!family.is_string()) {
    throw ValidationError("schema violation: instance_family must be a string");
  }
  bench::BenchConfig config;
  bool found = false;
  for (const bench::Family candidate :
       {bench::Family::even_spaced, bench::Family::geometric,
        bench::Family::uniform_random, bench::Family::adversarial_sampled}) {
    if (family.get<std::string>() == bench::family_name(candidate)) {
      config.family = candidate;
      found = true;
      break;
    }
  }
  if (!found) {
    throw ValidationError("unknown instance family: " +
                          family.get<std::string>());
  }

  config.n_list = require_int_array(doc, "n_list");
  config.length_multiplier = require_int(doc, "length_multiplier");
  config.seeds = require_int(doc, "seeds");
  config.base_seed = require_uint(doc, "base_seed");

  const json& algos = require_key(doc, "algorithms");
  if (!algos.is_array()) {
    throw ValidationError("schema violation: algorithms must be an array");
  }
  for (const json& name : algos) {
    if (!name.is_string()) {
      throw ValidationError("schema violation: algorithms must contain strings");
    }
    bool known = false;
    for (const bench::BenchAlgo candidate :
         {bench::BenchAlgo::even, bench::BenchAlgo::random_alterations,
          bench::BenchAlgo::conditional, bench::BenchAlgo::lll_fixit,
          bench::BenchAlgo::minhash, bench::BenchAlgo::greedy_oracle}) {
      if (name.get<std::string>() == bench::bench_algo_name(candidate)) {
        config.algorithms.push_back(candidate);
        known = true;
        break;
      }
    }
    if (!known) {
      throw ValidationError("unknown algorithm: " + name.get<std::string>());
    }
  }
  return config;
}

std::string encode_bench_csv(const std::vector<bench::BenchRow>& rows) {
  std::string out =
      "algorithm,family,n,f,l,trials,mean_pillars,stddev_pillars,mean_phases,"
      "mean_alterations,mean_runtime_ms,bound_ratio\n";
  for (const bench::BenchRow& row : rows) {
    out += bench::bench_algo_name(row.algorithm);
    out += ',';
    out += bench::family_name(row.family);
    out += ',';
    out += std::to_string(row.n) + ',' + std::to_string(row.f) + ',' +
           std::to_string(row.l) + ',' + std::to_string(row.trials) + ',';
    out += fmt6(row.mean_pillars) + ',' + fmt6(row.stddev_pillars) + ',' +
           fmt6(row.mean_phases) + ',' + fmt6(row.mean_alterations) + ',' +
           fmt6(row.mean_runtime_ms) + ',' + fmt6(row.bound_ratio) + '\n';
  }
  return out;
}

std::string encode_lowerbound_csv(const adversary::LowerBoundReport& report) {
  std::string out =
      "n,trials,median_min_track,mean_min_track,max_min_track,"
      "discarded_small_cars\n";
  for (const adversary::LowerBoundRow& row : report.rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.trials) + ',' +
           fmt6(row.median_min_track) + ',' + fmt6(row.mean_min_track) + ',' +
           std::to_string(row.max_min_track) + ',' +
           std::to_string(row.discarded_small_cars) + '\n';
  }
  return out;
}

}  // namespace gaptrack::interface
