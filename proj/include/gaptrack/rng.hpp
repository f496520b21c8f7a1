#pragma once

#include <cstdint>
#include <vector>

// Deterministic randomness for the whole project.
//
// Every random decision is a pure function of (seed, context words...) pushed
// through the splitmix64 finalizer. There is no global state and no
// sequential dependence between draws, so builders replay bit-identically
// regardless of evaluation order or thread count.

namespace gaptrack::rng {

// splitmix64 output function (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a ^ mix64(b));
}

template <class... Rest>
constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b,
                            Rest... rest) noexcept {
  return mix(mix(a, b), static_cast<std::uint64_t>(rest)...);
}

// True with probability `p`, judged against a single 64-bit word.
inline bool chance(std::uint64_t word, double p) noexcept {
  if (p <= 0.0) return false;
  const double scaled = p * 0x1p64;
  if (scaled >= 0x1p64) return true;
  return word < static_cast<std::uint64_t>(scaled);
}

// Counter-based stream for the rare places that want a sequence of draws
// rather than per-position words (instance generation, tests).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return mix(seed_, counter_++); }

  bool chance(double p) { return rng::chance(next(), p); }

  // Unbiased integer in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= reject) return r % bound;
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Sorted sample of `count` distinct integers from [lo, hi].
std::vector<std::int64_t> sample_distinct_sorted(Stream& stream,
                                                 std::int64_t count,
                                                 std::int64_t lo,
                                                 std::int64_t hi);

}  // namespace gaptrack::rng
