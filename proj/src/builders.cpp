#include "gaptrack/builders.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "gaptrack/rng.hpp"

namespace gaptrack::builders {
namespace {

// Draws are tagged with a phase word so the initial sample and every
// resampling round read disjoint parts of the stream.
constexpr std::uint64_t kSamplePhase = 0;

// Safety cap on fix-it resampling rounds.
constexpr std::int64_t kPhaseCap = 10'000'000;

std::vector<std::int64_t> collect_pillars(const std::vector<char>& installed) {
  std::vector<std::int64_t> pillars;
  for (std::size_t j = 1; j < installed.size(); ++j) {
    if (installed[j]) pillars.push_back(static_cast<std::int64_t>(j));
  }
  return pillars;
}

// Scan offsets in increasing order; plant one pillar at k + max(C) for each
// offset that still falls through. Earlier patches count toward later
// offsets. Returns the number of pillars added.
std::int64_t alteration_pass(const core::Instance& instance,
                             std::vector<char>& installed) {
  const auto& wheels = instance.car.wheels;
  const std::int64_t rescue = instance.car.max_wheel();
  const std::int64_t offsets = instance.offset_count();
  std::int64_t added = 0;
  for (std::int64_t k = 0; k < offsets; ++k) {
    bool hit = false;
    for (const std::int64_t w : wheels) {
      if (installed[k + w]) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      installed[k + rescue] = 1;
      ++added;
    }
  }
  return added;
}

void require_supported(const core::Instance& instance,
                       const core::TrackLayout& track) {
  if (!core::coverage(instance, track).supported) {
    throw std::logic_error("builder produced an unsupported track");
  }
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::even: return "even";
    case Algorithm::random_alterations: return "random_alterations";
    case Algorithm::conditional: return "conditional";
    case Algorithm::lll_fixit: return "lll_fixit";
    case Algorithm::minhash: return "minhash";
  }
  return "unknown";
}

double base_install_probability(std::int64_t wheel_count) {
  const double n = static_cast<double>(wheel_count);
  return std::min(1.0, std::log(n) / n);
}

double lll_install_probability(std::int64_t wheel_count) {
  const double n = static_cast<double>(wheel_count);
  return std::min(1.0, (1.0 + 2.0 * std::log(n)) / n);
}

std::pair<core::WheelConfig, BuildOutcome> build_even(std::int64_t wheel_count,
                                                      std::int64_t spacing,
                                                      std::int64_t track_length) {
  if (wheel_count < 1) throw ValidationError("wheel count must be positive");
  if (spacing < 1) throw ValidationError("spacing must be positive");
  if (track_length < wheel_count * spacing) {
    throw ValidationError("track shorter than quarter");
  }

  std::vector<std::int64_t> wheels(static_cast<std::size_t>(wheel_count));
  for (std::int64_t i = 0; i < wheel_count; ++i) wheels[i] = (i + 1) * spacing;
  core::WheelConfig car =
      core::make_wheel_config(wheel_count * spacing, std::move(wheels));
  core::Instance instance = core::validate_instance(car, track_length);

  // A block starting at s supports offsets s-ng .. s-1, so blocks of length
  // g at this period leave no offset uncovered.
  const std::int64_t period =
      std::max<std::int64_t>(1, (wheel_count - 2) * spacing + 2);
  std::vector<std::int64_t> pillars;
  std::int64_t last = 0;
  for (std::int64_t start = 1; start <= track_length; start += period) {
    const std::int64_t end = std::min(start + spacing - 1, track_length);
    for (std::int64_t j = std::max(start, last + 1); j <= end; ++j) {
      pillars.push_back(j);
      last = j;
    }
  }

  BuildOutcome outcome;
  outcome.track = core::make_track_layout(track_length, std::move(pillars));
  outcome.algorithm = Algorithm::even;
  outcome.pillar_count = outcome.track.pillar_count();
  require_supported(instance, outcome.track);
  return {std::move(car), std::move(outcome)};
}

BuildOutcome build_random_alterations(const core::Instance& instance,
                                      std::uint64_t seed) {
  core::validate_instance(instance.car, instance.track_length);
  const std::int64_t l = instance.track_length;
  const double q = base_install_probability(instance.car.wheel_count());

  std::vector<char> installed(static_cast<std::size_t>(l) + 1, 0);
  for (std::int64_t j = 1; j <= l; ++j) {
    installed[j] = rng::chance(rng::mix(seed, kSamplePhase, j), q);
  }
  const std::int64_t altered = alteration_pass(instance, installed);

  BuildOutcome outcome;
  outcome.track = core::make_track_layout(l, collect_pillars(installed));
  outcome.algorithm = Algorithm::random_alterations;
  outcome.pillar_count = outcome.track.pillar_count();
  outcome.alteration_count = altered;
  outcome.seed = seed;
  outcome.install_probability = q;
  require_supported(instance, outcome.track);
  return outcome;
}

BuildOutcome build_conditional(const core::Instance& instance) {
  core::validate_instance(instance.car, instance.track_length);
  const std::int64_t l = instance.track_length;
  const std::int64_t n = instance.car.wheel_count();
  const std::int64_t offsets = instance.offset_count();
  const auto& wheels = instance.car.wheels;
  const double q = base_install_probability(n);

  // Conditional fall probability of offset k is (1-q)^u[k] while k is
  // uncovered, where u[k] counts its still-undecided pillar positions.
  // Integer counts plus a fixed power table keep every step exact enough to
  // replay identically anywhere.
  std::vector<double> fall_probability(static_cast<std::size_t>(n) + 1);
  fall_probability[0] = 1.0;
  for (std::int64_t u = 1; u <= n; ++u) {
    fall_probability[u] = fall_probability[u - 1] * (1.0 - q);
  }

  std::vector<std::int64_t> undecided(static_cast<std::size_t>(offsets), n);
  std::vector<char> covered(static_cast<std::size_t>(offsets), 0);
  std::vector<char> installed(static_cast<std::size_t>(l) + 1, 0);

  // Install position t iff it lowers the conditional expectation, i.e. iff
  // the fall mass it would erase exceeds 1 - q. Ties stay empty.
  constexpr double kTieTolerance = 0x1p-40;
  std::vector<std::int64_t> touched;
  touched.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 1; t <= l; ++t) {
    touched.clear();
    double erased = 0.0;
    for (auto it = wheels.rbegin(); it != wheels.rend(); ++it) {
      const std::int64_t k = t - *it;
      if (k < 0 || k >= offsets) continue;
      touched.push_back(k);
      if (!covered[k]) erased += fall_probability[undecided[k]];
    }
    const double keep_cost = 1.0 - q;
    const bool tie = std::fabs(erased - keep_cost) <=
                     kTieTolerance * std::max(std::fabs(erased), keep_cost);
    const bool install = !tie && erased > keep_cost;
    if (install) {
      installed[t] = 1;
      for (const std::int64_t k : touched) covered[k] = 1;
    }
    for (const std::int64_t k : touched) --undecided[k];
  }

  const std::int64_t altered = alteration_pass(instance, installed);

  BuildOutcome outcome;
  outcome.track = core::make_track_layout(l, collect_pillars(installed));
  outcome.algorithm = Algorithm::conditional;
  outcome.pillar_count = outcome.track.pillar_count();
  outcome.alteration_count = altered;
  outcome.install_probability = q;
  require_supported(instance, outcome.track);
  return outcome;
}

BuildOutcome build_lll_fixit(const core::Instance& instance,
                             std::uint64_t seed) {
  core::validate_instance(instance.car, instance.track_length);
  const std::int64_t l = instance.track_length;
  const std::int64_t offsets = instance.offset_count();
  const auto& wheels = instance.car.wheels;
  const double p = lll_install_probability(instance.car.wheel_count());

  std::vector<char> installed(static_cast<std::size_t>(l) + 1, 0);
  for (std::int64_t j = 1; j <= l; ++j) {
    installed[j] = rng::chance(rng::mix(seed, kSamplePhase, j), p);
  }

  // supporting[k] = |(C + k) ∩ T|; failing offsets are those at zero.
  std::vector<std::int64_t> supporting(static_cast<std::size_t>(offsets), 0);
  std::set<std::int64_t> failing;
  for (std::int64_t k = 0; k < offsets; ++k) {
    for (const std::int64_t w : wheels) supporting[k] += installed[k + w];
    if (supporting[k] == 0) failing.insert(k);
  }

  const std::int64_t max_offset = offsets - 1;
  std::int64_t phase = 0;
  while (!failing.empty()) {
    if (phase >= kPhaseCap) {
      throw ResourceLimitError("fix-it phase cap exceeded");
    }
    ++phase;
    const std::int64_t event = *failing.begin();
    for (const std::int64_t w : wheels) {
      const std::int64_t j = event + w;
      const char fresh = rng::chance(rng::mix(seed, static_cast<std::uint64_t>(phase), j), p);
      if (fresh == installed[j]) continue;
      installed[j] = fresh;
      const std::int64_t delta = fresh ? 1 : -1;
      // Offsets whose candidate set contains j.
      for (auto it = wheels.rbegin(); it != wheels.rend(); ++it) {
        const std::int64_t k = j - *it;
        if (k < 0 || k > max_offset) continue;
        supporting[k] += delta;
        if (supporting[k] == 0) {
          failing.insert(k);
        } else if (delta == 1 && supporting[k] == 1) {
          failing.erase(k);
        }
      }
    }
  }

  BuildOutcome outcome;
  outcome.track = core::make_track_layout(l, collect_pillars(installed));
  outcome.algorithm = Algorithm::lll_fixit;
  outcome.pillar_count = outcome.track.pillar_count();
  outcome.phase_count = phase;
  outcome.seed = seed;
  outcome.install_probability = p;
  require_supported(instance, outcome.track);
  return outcome;
}

BuildOutcome build_minhash(const core::Instance& instance,
                           std::uint64_t seed) {
  core::validate_instance(instance.car, instance.track_length);
  const std::int64_t l = instance.track_length;
  const std::int64_t offsets = instance.offset_count();
  const auto& wheels = instance.car.wheels;

  std::vector<char> installed(static_cast<std::size_t>(l) + 1, 0);
  for (std::int64_t k = 0; k < offsets; ++k) {
    std::int64_t best_position = 0;
    std::uint64_t best_rank = 0;
    for (const std::int64_t w : wheels) {
      const std::int64_t j = k + w;
      const std::uint64_t rank = rng::mix(seed, j);
      // Strict comparison keeps the smaller position on equal ranks.
      if (best_position == 0 || rank < best_rank) {
        best_position = j;
        best_rank = rank;
      }
    }
    installed[best_position] = 1;
  }

  BuildOutcome outcome;
  outcome.track = core::make_track_layout(l, collect_pillars(installed));
  outcome.algorithm = Algorithm::minhash;
  outcome.pillar_count = outcome.track.pillar_count();
  outcome.seed = seed;
  require_supported(instance, outcome.track);
  return outcome;
}

}  // namespace gaptrack::builders
