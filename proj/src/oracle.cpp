#include "gaptrack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <unordered_map>
#include <vector>

#include "gaptrack/rng.hpp"

namespace gaptrack::oracle {
namespace {

using Word = std::uint64_t;

std::int64_t popcount(const std::vector<Word>& bits) {
  std::int64_t total = 0;
  for (const Word w : bits) total += std::popcount(w);
  return total;
}

std::int64_t intersection_size(const std::vector<Word>& a,
                               const std::vector<Word>& b) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

bool is_subset(const std::vector<Word>& a, const std::vector<Word>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

struct BitsHash {
  std::size_t operator()(const std::vector<Word>& bits) const {
    std::uint64_t h = 0x8f2d1c3b5a7e9604ull;
    for (const Word w : bits) h = rng::mix(h, w);
    return static_cast<std::size_t>(h);
  }
};

struct Candidate {
  std::int64_t position = 0;
  std::vector<Word> cover;
  std::int64_t cover_size = 0;
};

// Candidate pillars with nonempty cover sets, dominance-filtered: a pillar
// whose cover is contained in another's cannot be needed in a minimum track.
std::vector<Candidate> build_candidates(const core::Instance& instance) {
  const std::int64_t offsets = instance.offset_count();
  const std::size_t words = static_cast<std::size_t>((offsets + 63) / 64);
  const auto& wheels = instance.car.wheels;

  std::vector<Candidate> raw;
  for (std::int64_t j = 1; j <= instance.track_length; ++j) {
    Candidate c;
    c.position = j;
    c.cover.assign(words, 0);
    for (const std::int64_t w : wheels) {
      const std::int64_t k = j - w;
      if (k >= 0 && k < offsets) {
        c.cover[static_cast<std::size_t>(k) / 64] |= Word{1} << (k % 64);
      }
    }
    c.cover_size = popcount(c.cover);
    if (c.cover_size > 0) raw.push_back(std::move(c));
  }

  if (raw.size() <= 2048) {
    // Largest covers first; on equal covers the earlier (smaller) position
    // survives.
    std::stable_sort(raw.begin(), raw.end(), [](const Candidate& a, const Candidate& b) {
      return a.cover_size > b.cover_size;
    });
    std::vector<Candidate> kept;
    for (auto& c : raw) {
      bool dominated = false;
      for (const auto& k : kept) {
        if (c.cover_size <= k.cover_size && is_subset(c.cover, k.cover)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(std::move(c));
    }
    raw = std::move(kept);
  }
  std::sort(raw.begin(), raw.end(), [](const Candidate& a, const Candidate& b) {
    return a.position < b.position;
  });
  return raw;
}

// Greedy cover over an explicit candidate list. Returns chosen positions.
std::vector<std::int64_t> greedy_positions(const std::vector<Candidate>& cands,
                                           std::int64_t offsets) {
  const std::size_t words = static_cast<std::size_t>((offsets + 63) / 64);
  std::vector<Word> uncovered(words, 0);
  for (std::int64_t k = 0; k < offsets; ++k) {
    uncovered[static_cast<std::size_t>(k) / 64] |= Word{1} << (k % 64);
  }
  std::int64_t remaining = offsets;

  std::vector<std::int64_t> chosen;
  while (remaining > 0) {
    std::int64_t best = -1;
    std::int64_t best_gain = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      const std::int64_t gain = intersection_size(cands[i].cover, uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<std::int64_t>(i);
      }
    }
    if (best < 0) break;  // unreachable: every offset has a candidate
    chosen.push_back(cands[static_cast<std::size_t>(best)].position);
    for (std::size_t w = 0; w < words; ++w) {
      uncovered[w] &= ~cands[static_cast<std::size_t>(best)].cover[w];
    }
    remaining = popcount(uncovered);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct Searcher {
  const std::vector<Candidate>& cands;
  const std::vector<std::vector<std::int32_t>>& offset_cands;
  std::int64_t offsets;
  std::int64_t node_limit;
  std::int64_t prune_cap;  // solutions must be < min(best_size, prune_cap)

  std::int64_t nodes = 0;
  bool aborted = false;
  std::int64_t best_size = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> best_positions = {};
  std::vector<std::int64_t> chosen = {};
  std::unordered_map<std::vector<Word>, std::int64_t, BitsHash> seen = {};

  static constexpr std::size_t kMemoCap = 4'000'000;

  void run(std::vector<Word> uncovered, std::int64_t uncovered_count) {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    if (uncovered_count == 0) {
      if (static_cast<std::int64_t>(chosen.size()) < best_size) {
        best_size = static_cast<std::int64_t>(chosen.size());
        best_positions = chosen;
        std::sort(best_positions.begin(), best_positions.end());
      }
      return;
    }
    const std::int64_t depth = static_cast<std::int64_t>(chosen.size());
    const std::int64_t limit = std::min(best_size, prune_cap);

    // Revisiting an uncovered-set at no smaller depth cannot improve on the
    // earlier expansion.
    auto memo = seen.find(uncovered);
    if (memo != seen.end() && memo->second <= depth) return;
    if (memo != seen.end()) {
      memo->second = depth;
    } else if (seen.size() < kMemoCap) {
      seen.emplace(uncovered, depth);
    }

    // Lower bound: no remaining pillar supports more than max_gain uncovered
    // offsets, so at least ceil(uncovered / max_gain) more are needed.
    std::int64_t max_gain = 0;
    for (const auto& c : cands) {
      max_gain = std::max(max_gain, intersection_size(c.cover, uncovered));
    }
    if (max_gain == 0) return;
    const std::int64_t bound = depth + (uncovered_count + max_gain - 1) / max_gain;
    if (bound >= limit) return;

    // Branch on the uncovered offset with the fewest candidate pillars.
    std::int64_t branch_offset = -1;
    std::size_t branch_width = std::numeric_limits<std::size_t>::max();
    for (std::int64_t k = 0; k < offsets; ++k) {
      if (!(uncovered[static_cast<std::size_t>(k) / 64] >> (k % 64) & 1)) continue;
      const std::size_t width = offset_cands[static_cast<std::size_t>(k)].size();
      if (width < branch_width) {
        branch_width = width;
        branch_offset = k;
        if (width == 1) break;
      }
    }

    const auto& options = offset_cands[static_cast<std::size_t>(branch_offset)];
    std::vector<std::pair<std::int64_t, std::int32_t>> order;  // (-gain, id)
    order.reserve(options.size());
    for (const std::int32_t id : options) {
      order.emplace_back(-intersection_size(cands[static_cast<std::size_t>(id)].cover, uncovered), id);
    }
    std::sort(order.begin(), order.end());

    std::vector<Word> child(uncovered.size());
    for (const auto& [neg_gain, id] : order) {
      const auto& cand = cands[static_cast<std::size_t>(id)];
      for (std::size_t w = 0; w < uncovered.size(); ++w) {
        child[w] = uncovered[w] & ~cand.cover[w];
      }
      chosen.push_back(cand.position);
      run(child, uncovered_count + neg_gain);
      chosen.pop_back();
      if (aborted) return;
    }
  }
};

}  // namespace

OracleResult min_track_exact(const core::Instance& instance,
                             std::optional<std::int64_t> size_cap,
                             std::int64_t node_limit) {
  core::validate_instance(instance.car, instance.track_length);
  if (size_cap && *size_cap < 1) {
    throw ValidationError("size cap must be positive");
  }
  if (node_limit < 1) {
    throw ValidationError("node limit must be positive");
  }

  const std::int64_t offsets = instance.offset_count();
  const std::vector<Candidate> cands = build_candidates(instance);

  std::vector<std::vector<std::int32_t>> offset_cands(
      static_cast<std::size_t>(offsets));
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::int64_t k = 0; k < offsets; ++k) {
      if (cands[i].cover[static_cast<std::size_t>(k) / 64] >> (k % 64) & 1) {
        offset_cands[static_cast<std::size_t>(k)].push_back(
            static_cast<std::int32_t>(i));
      }
    }
  }

  Searcher searcher{
      .cands = cands,
      .offset_cands = offset_cands,
      .offsets = offsets,
      .node_limit = node_limit,
      .prune_cap = size_cap ? *size_cap + 1
                            : std::numeric_limits<std::int64_t>::max(),
  };
  searcher.best_positions = greedy_positions(cands, offsets);
  searcher.best_size = static_cast<std::int64_t>(searcher.best_positions.size());

  std::vector<Word> universe(static_cast<std::size_t>((offsets + 63) / 64), 0);
  for (std::int64_t k = 0; k < offsets; ++k) {
    universe[static_cast<std::size_t>(k) / 64] |= Word{1} << (k % 64);
  }
  searcher.run(std::move(universe), offsets);

  OracleResult result;
  result.size_cap = size_cap;
  result.explored_nodes = searcher.nodes;
  result.node_limit_reached = searcher.aborted;
  const bool admissible = !size_cap || searcher.best_size <= *size_cap;
  if (admissible) {
    result.track = core::make_track_layout(instance.track_length,
                                           searcher.best_positions);
    result.optimal = !searcher.aborted;
  }
  return result;
}

OracleResult min_track_greedy(const core::Instance& instance) {
  core::validate_instance(instance.car, instance.track_length);
  const std::int64_t l = instance.track_length;
  const std::int64_t offsets = instance.offset_count();
  const auto& wheels = instance.car.wheels;

  // gain[j] = number of currently uncovered offsets pillar j would support;
  // kept incrementally as offsets become covered.
  std::vector<std::int64_t> gain(static_cast<std::size_t>(l) + 1, 0);
  for (std::int64_t j = 1; j <= l; ++j) {
    for (const std::int64_t w : wheels) {
      const std::int64_t k = j - w;
      if (k >= 0 && k < offsets) ++gain[j];
    }
  }
  std::vector<char> covered(static_cast<std::size_t>(offsets), 0);
  std::int64_t remaining = offsets;

  std::vector<std::int64_t> chosen;
  while (remaining > 0) {
    std::int64_t best = 0;
    std::int64_t best_gain = 0;
    for (std::int64_t j = 1; j <= l; ++j) {
      if (gain[j] > best_gain) {
        best_gain = gain[j];
        best = j;
      }
    }
    chosen.push_back(best);
    for (auto it = wheels.rbegin(); it != wheels.rend(); ++it) {
      const std::int64_t k = best - *it;
      if (k < 0 || k >= offsets || covered[k]) continue;
      covered[k] = 1;
      --remaining;
      for (const std::int64_t w : wheels) --gain[k + w];
    }
  }
  std::sort(chosen.begin(), chosen.end());

  OracleResult result;
  result.track = core::make_track_layout(l, std::move(chosen));
  result.optimal = false;
  return result;
}

}  // namespace gaptrack::oracle
