#include "gaptrack/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "gaptrack/adversary.hpp"
#include "gaptrack/oracle.hpp"
#include "gaptrack/rng.hpp"

namespace gaptrack::bench {
namespace {

constexpr std::uint64_t kTagInstance = 0x696e7374;
constexpr std::int64_t kMaxLength = std::int64_t{1} << 24;

struct CellInstance {
  std::optional<core::Instance> instance = std::nullopt;
  std::string error = {};
};

// One instance per (family, n); the trial seeds never touch instance
// generation, so every algorithm in the cell sees the same car.
CellInstance make_instance(Family family, std::int64_t n,
                           std::int64_t multiplier, std::uint64_t base_seed) {
  const std::uint64_t iseed =
      rng::mix(base_seed, kTagInstance, static_cast<std::uint64_t>(family),
               static_cast<std::uint64_t>(n));
  std::int64_t f = 0;
  std::vector<std::int64_t> wheels;
  switch (family) {
    case Family::even_spaced:
      f = 2 * n;
      for (std::int64_t i = 1; i <= n; ++i) wheels.push_back(2 * i);
      break;
    case Family::geometric: {
      if (n > 40) return {.error = "track length too large"};
      std::int64_t w = 1;
      for (std::int64_t i = 0; i < n; ++i) {
        wheels.push_back(w);
        if (i + 1 < n) w *= 2;
      }
      f = std::max(2 * n, wheels.back());
      break;
    }
    case Family::uniform_random: {
      f = 2 * n;
      rng::Stream stream(iseed);
      wheels = rng::sample_distinct_sorted(stream, n, 1, f);
      break;
    }
    case Family::adversarial_sampled: {
      f = 2 * n;
      core::WheelConfig car = adversary::sample_car(n, iseed);
      wheels = car.wheels;
      break;
    }
  }
  if (f > kMaxLength / multiplier) return {.error = "track length too large"};
  CellInstance cell;
  cell.instance = core::Instance{
      .car = core::make_wheel_config(f, std::move(wheels)),
      .track_length = multiplier * f,
  };
  return cell;
}

struct Task {
  std::size_t instance_index = 0;
  BenchAlgo algo = BenchAlgo::even;
  std::uint64_t seed = 0;
};

struct TrialOut {
  std::int64_t pillars = 0;
  std::int64_t phases = 0;
  std::int64_t alterations = 0;
  double runtime_ms = 0;
  std::string error = {};
};

TrialOut run_trial(const core::Instance& instance, BenchAlgo algo,
                   std::uint64_t seed, bool timing) {
  TrialOut out;
  const auto start = std::chrono::steady_clock::now();
  switch (algo) {
    case BenchAlgo::even: {
      auto [car, outcome] = builders::build_even(
          instance.car.wheel_count(), 2, instance.track_length);
      out.pillars = outcome.pillar_count;
      break;
    }
    case BenchAlgo::random_alterations: {
      const auto outcome = builders::build_random_alterations(instance, seed);
      out.pillars = outcome.pillar_count;
      out.alterations = outcome.alteration_count;
      break;
    }
    case BenchAlgo::conditional: {
      const auto outcome = builders::build_conditional(instance);
      out.pillars = outcome.pillar_count;
      out.alterations = outcome.alteration_count;
      break;
    }
    case BenchAlgo::lll_fixit: {
      const auto outcome = builders::build_lll_fixit(instance, seed);
      out.pillars = outcome.pillar_count;
      out.phases = outcome.phase_count;
      break;
    }
    case BenchAlgo::minhash: {
      const auto outcome = builders::build_minhash(instance, seed);
      out.pillars = outcome.pillar_count;
      break;
    }
    case BenchAlgo::greedy_oracle: {
      const auto result = oracle::min_track_greedy(instance);
      if (!core::coverage(instance, *result.track).supported) {
        throw std::logic_error("greedy track failed coverage");
      }
      out.pillars = result.track->pillar_count();
      break;
    }
  }
  if (timing) {
    out.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return out;
}

}  // namespace

const char* family_name(Family family) {
  switch (family) {
    case Family::even_spaced: return "even_spaced";
    case Family::geometric: return "geometric";
    case Family::uniform_random: return "uniform_random";
    case Family::adversarial_sampled: return "adversarial_sampled";
  }
  return "unknown";
}

const char* bench_algo_name(BenchAlgo algo) {
  switch (algo) {
    case BenchAlgo::even: return "even";
    case BenchAlgo::random_alterations: return "random_alterations";
    case BenchAlgo::conditional: return "conditional";
    case BenchAlgo::lll_fixit: return "lll_fixit";
    case BenchAlgo::minhash: return "minhash";
    case BenchAlgo::greedy_oracle: return "greedy_oracle";
  }
  return "unknown";
}

BenchReport run_bench(const BenchConfig& config, const BenchOptions& options) {
  if (config.n_list.empty()) throw ValidationError("n list must not be empty");
  if (config.length_multiplier < 1) {
    throw ValidationError("length multiplier must be positive");
  }
  if (config.seeds < 1) throw ValidationError("seeds must be positive");
  if (config.algorithms.empty()) {
    throw ValidationError("algorithm list must not be empty");
  }

  std::vector<std::int64_t> ns = config.n_list;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  for (const std::int64_t n : ns) {
    if (n < 1) throw ValidationError("n must be positive");
  }
  std::vector<BenchAlgo> algos = config.algorithms;
  std::sort(algos.begin(), algos.end());
  algos.erase(std::unique(algos.begin(), algos.end()), algos.end());

  BenchReport report;

  std::vector<CellInstance> instances;
  instances.reserve(ns.size());
  for (const std::int64_t n : ns) {
    instances.push_back(make_instance(config.family, n,
                                      config.length_multiplier,
                                      config.base_seed));
  }

  // Flatten runnable (cell, trial) pairs; skipped cells become issues now so
  // output order stays canonical.
  struct Cell {
    std::size_t instance_index;
    std::int64_t n;
    BenchAlgo algo;
    std::size_t first_task;
  };
  std::vector<Cell> cells;
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (const BenchAlgo algo : algos) {
      if (!instances[i].instance) {
        report.issues.push_back(
            CellIssue{config.family, ns[i], algo, instances[i].error});
        continue;
      }
      if (algo == BenchAlgo::even && config.family != Family::even_spaced) {
        report.issues.push_back(CellIssue{
            config.family, ns[i], algo,
            "even builder requires the even_spaced family"});
        continue;
      }
      cells.push_back(Cell{i, ns[i], algo, tasks.size()});
      for (std::int64_t trial = 0; trial < config.seeds; ++trial) {
        tasks.push_back(Task{
            i, algo,
            rng::mix(config.base_seed, static_cast<std::uint64_t>(config.family),
                     static_cast<std::uint64_t>(ns[i]),
                     static_cast<std::uint64_t>(algo),
                     static_cast<std::uint64_t>(trial)),
        });
      }
    }
  }

  std::vector<TrialOut> results(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      try {
        results[i] = run_trial(*instances[task.instance_index].instance,
                               task.algo, task.seed, options.measure_runtime);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  for (const Cell& cell : cells) {
    const core::Instance& instance = *instances[cell.instance_index].instance;
    std::string error = {};
    double sum_pillars = 0;
    double sum_squares = 0;
    double sum_phases = 0;
    double sum_alterations = 0;
    double sum_runtime = 0;
    for (std::int64_t trial = 0; trial < config.seeds; ++trial) {
      const TrialOut& out = results[cell.first_task + static_cast<std::size_t>(trial)];
      if (!out.error.empty()) {
        error = out.error;
        break;
      }
      const double pillars = static_cast<double>(out.pillars);
      sum_pillars += pillars;
      sum_squares += pillars * pillars;
      sum_phases += static_cast<double>(out.phases);
      sum_alterations += static_cast<double>(out.alterations);
      sum_runtime += out.runtime_ms;
    }
    if (!error.empty()) {
      report.issues.push_back(
          CellIssue{config.family, cell.n, cell.algo, error});
      continue;
    }
    const double trials = static_cast<double>(config.seeds);
    BenchRow row;
    row.algorithm = cell.algo;
    row.family = config.family;
    row.n = cell.n;
    row.f = instance.car.quarter_length;
    row.l = instance.track_length;
    row.trials = config.seeds;
    row.mean_pillars = sum_pillars / trials;
    row.stddev_pillars = std::sqrt(
        std::max(0.0, sum_squares / trials - row.mean_pillars * row.mean_pillars));
    row.mean_phases = sum_phases / trials;
    row.mean_alterations = sum_alterations / trials;
    row.mean_runtime_ms = sum_runtime / trials;
    const double n = static_cast<double>(cell.n);
    const double bound =
        static_cast<double>(row.l) * (1.0 + std::log(n)) / n;
    row.bound_ratio = row.mean_pillars / bound;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gaptrack::bench
