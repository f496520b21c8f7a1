#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaptrack/builders.hpp"
#include "gaptrack/core.hpp"

namespace gaptrack::bench {

using gaptrack::ValidationError;

enum class Family {
  even_spaced,
  geometric,
  uniform_random,
  adversarial_sampled,
};

enum class BenchAlgo {
  even,
  random_alterations,
  conditional,
  lll_fixit,
  minhash,
  greedy_oracle,
};

const char* family_name(Family family);
const char* bench_algo_name(BenchAlgo algo);

struct BenchConfig {
  Family family = Family::uniform_random;
  std::vector<std::int64_t> n_list;
  std::int64_t length_multiplier = 0;  // l / f
  std::int64_t seeds = 0;              // trials per cell
  std::vector<BenchAlgo> algorithms;
  std::uint64_t base_seed = 0;
};

struct BenchRow {
  BenchAlgo algorithm = BenchAlgo::even;
  Family family = Family::even_spaced;
  std::int64_t n = 0;
  std::int64_t f = 0;
  std::int64_t l = 0;
  std::int64_t trials = 0;
  double mean_pillars = 0;
  double stddev_pillars = 0;
  double mean_phases = 0;
  double mean_alterations = 0;
  double mean_runtime_ms = 0;
  double bound_ratio = 0;  // mean_pillars / (l(1+ln n)/n)
};

struct CellIssue {
  Family family = Family::even_spaced;
  std::int64_t n = 0;
  BenchAlgo algorithm = BenchAlgo::even;
  std::string message;
};

struct BenchReport {
  std::vector<BenchRow> rows;      // sorted by (family, n, algorithm)
  std::vector<CellIssue> issues;   // cells that produced no row
};

struct BenchOptions {
  int jobs = 1;
  // Runtime measurement breaks byte-identical output, so it is opt-in;
  // when off the runtime column is exactly zero.
  bool measure_runtime = false;
};

// Runs `seeds` trials for every (n, algorithm) cell of the configured
// family. One instance per (family, n); trial seeds depend only on
// (base_seed, family, n, algorithm, trial index), so results are identical
// for any job count.
BenchReport run_bench(const BenchConfig& config,
                      const BenchOptions& options = {});

}  // namespace gaptrack::bench
