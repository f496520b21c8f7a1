#include "gaptrack/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gaptrack/adversary.hpp"
#include "gaptrack/bench.hpp"
#include "gaptrack/builders.hpp"
#include "gaptrack/core.hpp"
#include "gaptrack/oracle.hpp"
#include "gaptrack/serialize.hpp"

namespace gaptrack::interface {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << text;
  out.flush();
  if (!out) throw ValidationError("cannot write file: " + path);
}

std::vector<std::int64_t> parse_n_list(const std::string& text) {
  std::vector<std::int64_t> ns;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const long long value = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      ns.push_back(value);
    } catch (const std::exception&) {
      throw ValidationError("invalid n list entry: " + item);
    }
  }
  if (ns.empty()) throw ValidationError("n list must not be empty");
  return ns;
}

bool evenly_spaced(const core::WheelConfig& car, std::int64_t spacing) {
  if (car.quarter_length != spacing * car.wheel_count()) return false;
  for (std::size_t i = 0; i < car.wheels.size(); ++i) {
    if (car.wheels[i] != spacing * static_cast<std::int64_t>(i + 1)) {
      return false;
    }
  }
  return true;
}

int run_build(const std::string& algo, const std::string& car_path,
              std::int64_t length, std::uint64_t seed,
              const std::string& out_path, std::ostream& out) {
  const core::WheelConfig car = decode_car(read_file(car_path));
  const core::Instance instance{.car = car, .track_length = length};

  builders::BuildOutcome outcome;
  if (algo == "even") {
    const std::int64_t spacing = car.wheels.front();
    if (!evenly_spaced(car, spacing)) {
      throw ValidationError("even builder requires evenly spaced wheels");
    }
    outcome = builders::build_even(car.wheel_count(), spacing, length).second;
  } else if (algo == "random") {
    outcome = builders::build_random_alterations(instance, seed);
  } else if (algo == "derand") {
    outcome = builders::build_conditional(instance);
  } else if (algo == "lll") {
    outcome = builders::build_lll_fixit(instance, seed);
  } else {
    outcome = builders::build_minhash(instance, seed);
  }

  write_file(out_path, encode_track(outcome.track) + "\n");
  out << "algorithm=" << builders::algorithm_name(outcome.algorithm)
      << " length=" << outcome.track.track_length
      << " pillars=" << outcome.pillar_count
      << " alterations=" << outcome.alteration_count
      << " phases=" << outcome.phase_count;
  if (outcome.seed) out << " seed=" << *outcome.seed;
  out << "\n";
  return 0;
}

int run_verify(const std::string& car_path, const std::string& track_path,
               std::ostream& out) {
  const core::WheelConfig car = decode_car(read_file(car_path));
  const core::TrackLayout track = decode_track(read_file(track_path));
  const core::Instance instance{.car = car,
                                .track_length = track.track_length};
  const core::CoverageReport report = core::coverage(instance, track);
  if (report.supported) {
    out << "supported Y=0\n";
    return 0;
  }
  out << "unsupported Y=" << report.failure_count << "\n";
  out << "failing offsets:";
  for (std::size_t i = 0; i < report.failing_offsets.size() && i < 10; ++i) {
    out << ' ' << report.failing_offsets[i];
  }
  out << "\n";
  return 2;
}

int run_oracle(const std::string& car_path, std::int64_t length, bool exact,
               std::optional<std::int64_t> cap, std::int64_t node_limit,
               const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  const core::WheelConfig car = decode_car(read_file(car_path));
  const core::Instance instance{.car = car, .track_length = length};

  if (!exact) {
    const oracle::OracleResult result = oracle::min_track_greedy(instance);
    out << "greedy size=" << result.track->pillar_count() << "\n";
    if (!out_path.empty()) {
      write_file(out_path, encode_track(*result.track) + "\n");
    }
    return 0;
  }

  const oracle::OracleResult result =
      oracle::min_track_exact(instance, cap, node_limit);
  if (result.node_limit_reached) {
    err << "error: node limit reached after " << result.explored_nodes
        << " nodes";
    if (result.track) {
      err << "; best found size=" << result.track->pillar_count()
          << " (not certified)";
    }
    err << "\n";
    return 1;
  }
  if (!result.track) {
    out << "no track within size cap " << *cap << " (explored "
        << result.explored_nodes << " nodes)\n";
    return 0;
  }
  out << "exact minimum=" << result.track->pillar_count()
      << " explored_nodes=" << result.explored_nodes << "\n";
  if (!out_path.empty()) {
    write_file(out_path, encode_track(*result.track) + "\n");
  }
  return 0;
}

int run_lowerbound(const std::string& n_list, std::int64_t trials,
                   std::uint64_t seed, std::ostream& out, std::ostream& err) {
  const adversary::LowerBoundReport report =
      adversary::lowerbound_sweep(parse_n_list(n_list), trials, seed);
  out << encode_lowerbound_csv(report);
  for (const adversary::LowerBoundRow& row : report.rows) {
    if (row.capped_trials > 0) {
      err << "warning: n=" << row.n << ": " << row.capped_trials
          << " trials hit the node limit\n";
    }
  }
  return 0;
}

int run_bench_cmd(const std::string& config_path, const std::string& out_path,
                  std::optional<std::uint64_t> seed, int jobs, bool timing,
                  std::ostream& err) {
  bench::BenchConfig config = decode_bench_config(read_file(config_path));
  if (seed) config.base_seed = *seed;
  const bench::BenchOptions options{.jobs = jobs, .measure_runtime = timing};
  const bench::BenchReport report = bench::run_bench(config, options);
  write_file(out_path, encode_bench_csv(report.rows));
  for (const bench::CellIssue& issue : report.issues) {
    err << "warning: cell family=" << bench::family_name(issue.family)
        << " n=" << issue.n
        << " algorithm=" << bench::bench_algo_name(issue.algorithm) << ": "
        << issue.message << "\n";
  }
  return 0;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"gapped train track construction and analysis"};
  app.name("gaptrack");
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "construct a supporting track");
  std::string build_algo;
  build->add_option("--algo", build_algo, "even|random|derand|lll|minhash")
      ->required()
      ->check(CLI::IsMember({"even", "random", "derand", "lll", "minhash"}));
  std::string build_car;
  build->add_option("--car", build_car, "car file")->required();
  std::int64_t build_length = 0;
  build->add_option("--length", build_length, "track length")
      ->required()
      ->check(CLI::PositiveNumber);
  std::uint64_t build_seed = 0;
  build->add_option("--seed", build_seed, "64-bit unsigned seed");
  std::string build_out;
  build->add_option("--out", build_out, "track file to write")->required();

  auto* verify = app.add_subcommand("verify", "check a track supports a car");
  std::string verify_car;
  verify->add_option("--car", verify_car, "car file")->required();
  std::string verify_track;
  verify->add_option("--track", verify_track, "track file")->required();
  std::uint64_t verify_seed = 0;
  verify->add_option("--seed", verify_seed, "accepted for uniformity");

  auto* oracle_cmd = app.add_subcommand("oracle", "minimum track solvers");
  std::string oracle_car;
  oracle_cmd->add_option("--car", oracle_car, "car file")->required();
  std::int64_t oracle_length = 0;
  oracle_cmd->add_option("--length", oracle_length, "track length")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* exact_flag = oracle_cmd->add_flag("--exact", "exact branch and bound");
  auto* greedy_flag = oracle_cmd->add_flag("--greedy", "greedy cover");
  exact_flag->excludes(greedy_flag);
  std::int64_t oracle_cap = 0;
  auto* cap_opt = oracle_cmd->add_option("--cap", oracle_cap, "size cap")
                      ->check(CLI::PositiveNumber);
  cap_opt->needs(exact_flag);
  std::int64_t oracle_node_limit = oracle::kDefaultNodeLimit;
  oracle_cmd->add_option("--node-limit", oracle_node_limit, "explored node cap")
      ->check(CLI::PositiveNumber);
  std::string oracle_out;
  oracle_cmd->add_option("--out", oracle_out, "track file to write");
  std::uint64_t oracle_seed = 0;
  oracle_cmd->add_option("--seed", oracle_seed, "accepted for uniformity");

  auto* lowerbound = app.add_subcommand("lowerbound", "minimum-size sweep");
  std::string lb_n_list;
  lowerbound->add_option("--n-list", lb_n_list, "comma-separated n values")
      ->required();
  std::int64_t lb_trials = 0;
  lowerbound->add_option("--trials", lb_trials, "qualifying cars per n")
      ->required()
      ->check(CLI::PositiveNumber);
  std::uint64_t lb_seed = 0;
  lowerbound->add_option("--seed", lb_seed, "64-bit unsigned seed")->required();

  auto* bench_cmd = app.add_subcommand("bench", "run the benchmark harness");
  std::string bench_config;
  bench_cmd->add_option("--config", bench_config, "config file")->required();
  std::string bench_out;
  bench_cmd->add_option("--out", bench_out, "CSV file to write")->required();
  int bench_jobs = 1;
  bench_cmd->add_option("--jobs", bench_jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  bool bench_timing = false;
  bench_cmd->add_flag("--timing", bench_timing, "measure per-trial runtime");
  std::uint64_t bench_seed = 0;
  auto* bench_seed_opt =
      bench_cmd->add_option("--seed", bench_seed, "override config base_seed");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gaptrack");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*build) {
      return run_build(build_algo, build_car, build_length, build_seed,
                       build_out, out);
    }
    if (*verify) return run_verify(verify_car, verify_track, out);
    if (*oracle_cmd) {
      if (!*exact_flag && !*greedy_flag) {
        throw ValidationError("oracle requires --exact or --greedy");
      }
      return run_oracle(oracle_car, oracle_length, bool(*exact_flag),
                        *cap_opt ? std::optional<std::int64_t>(oracle_cap)
                                 : std::nullopt,
                        oracle_node_limit, oracle_out, out, err);
    }
    if (*lowerbound) return run_lowerbound(lb_n_list, lb_trials, lb_seed, out, err);
    if (*bench_cmd) {
      return run_bench_cmd(bench_config, bench_out,
                           *bench_seed_opt
                               ? std::optional<std::uint64_t>(bench_seed)
                               : std::nullopt,
                           bench_jobs, bench_timing, err);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace gaptrack::interface
