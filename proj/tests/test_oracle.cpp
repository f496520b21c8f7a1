#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaptrack/oracle.hpp"
#include "support.hpp"

using namespace gaptrack;

namespace {

core::Instance make(std::int64_t f, std::vector<std::int64_t> wheels,
                    std::int64_t l) {
  return core::validate_instance(core::make_wheel_config(f, std::move(wheels)),
                                 l);
}

}  // namespace

TEST_CASE("exact minimum matches the worked examples") {
  SUBCASE("C={1,2}, f=2, l=4") {
    const auto result = oracle::min_track_exact(make(2, {1, 2}, 4));
    REQUIRE(result.track.has_value());
    CHECK(result.track->pillar_count() == 2);
    CHECK(result.optimal);
    CHECK_FALSE(result.node_limit_reached);
    CHECK(core::coverage(make(2, {1, 2}, 4), *result.track).supported);
  }
  SUBCASE("C={1,3}, f=4, l=8 needs three pillars") {
    const auto result = oracle::min_track_exact(make(4, {1, 3}, 8));
    REQUIRE(result.track.has_value());
    CHECK(result.track->pillar_count() == 3);
    CHECK(result.optimal);
  }
  SUBCASE("wheels everywhere, f=4, l=8 needs two") {
    const auto result = oracle::min_track_exact(make(4, {1, 2, 3, 4}, 8));
    REQUIRE(result.track.has_value());
    CHECK(result.track->pillar_count() == 2);
  }
}

TEST_CASE("exact equals the exhaustive-subset minimum") {
  rng::Stream stream(0x6f7261);
  for (int trial = 0; trial < 150; ++trial) {
    const auto instance = testsupport::random_instance(stream, 6, 14);
    const std::int64_t expect = testsupport::brute_force_min_cover(instance);
    const auto result = oracle::min_track_exact(instance);
    REQUIRE(result.track.has_value());
    REQUIRE(result.optimal);
    REQUIRE(result.track->pillar_count() == expect);
    REQUIRE(core::coverage(instance, *result.track).supported);

    const std::int64_t offsets = instance.offset_count();
    const std::int64_t n = instance.car.wheel_count();
    REQUIRE(result.track->pillar_count() >= (offsets + n - 1) / n);
  }
}

TEST_CASE("size cap distinguishes absent from capped") {
  const auto instance = make(4, {1, 3}, 8);  // true minimum is 3

  SUBCASE("cap below the minimum certifies absence") {
    const auto result = oracle::min_track_exact(instance, 2);
    CHECK_FALSE(result.track.has_value());
    CHECK_FALSE(result.node_limit_reached);
    CHECK(result.size_cap == 2);
  }
  SUBCASE("cap at the minimum returns it") {
    const auto result = oracle::min_track_exact(instance, 3);
    REQUIRE(result.track.has_value());
    CHECK(result.track->pillar_count() == 3);
    CHECK(result.optimal);
  }
  SUBCASE("cap must be positive") {
    CHECK_THROWS_WITH_AS(oracle::min_track_exact(instance, 0),
                         "size cap must be positive", ValidationError);
  }
}

TEST_CASE("node limit aborts are flagged, never silently wrong") {
  const auto instance = make(8, {1, 4, 6, 8}, 32);
  const auto result = oracle::min_track_exact(instance, std::nullopt, 2);
  CHECK(result.node_limit_reached);
  CHECK_FALSE(result.optimal);
  REQUIRE(result.track.has_value());  // greedy fallback still supports
  CHECK(core::coverage(instance, *result.track).supported);

  const auto full = oracle::min_track_exact(instance);
  CHECK_FALSE(full.node_limit_reached);
  CHECK(full.optimal);
  CHECK(full.track->pillar_count() <= result.track->pillar_count());
}

TEST_CASE("greedy follows most-coverage with ties to the smaller position") {
  const auto instance = make(2, {1, 2}, 4);
  const auto result = oracle::min_track_greedy(instance);
  REQUIRE(result.track.has_value());
  // Pillar 2 covers offsets {0,1}; pillars 3 and 4 then tie at one uncovered
  // offset each, so the smaller position wins.
  CHECK(result.track->pillars == std::vector<std::int64_t>{2, 3});
  CHECK(result.track->pillar_count() == 2);
  CHECK_FALSE(result.optimal);
}

TEST_CASE("greedy on a single-wheel car returns every offset position") {
  const auto instance = make(1, {1}, 5);
  const auto result = oracle::min_track_greedy(instance);
  CHECK(result.track->pillars == std::vector<std::int64_t>{1, 2, 3, 4, 5});
}

TEST_CASE("greedy is never better than exact and obeys the ln bound") {
  rng::Stream stream(0x67726565);
  for (int trial = 0; trial < 120; ++trial) {
    const auto instance = testsupport::random_instance(stream, 6, 14);
    const auto exact = oracle::min_track_exact(instance);
    const auto greedy = oracle::min_track_greedy(instance);
    REQUIRE(greedy.track.has_value());
    REQUIRE(core::coverage(instance, *greedy.track).supported);
    REQUIRE(greedy.track->pillar_count() >= exact.track->pillar_count());

    const double universe = static_cast<double>(instance.offset_count());
    REQUIRE(static_cast<double>(greedy.track->pillar_count()) <=
            (1.0 + std::log(universe)) *
                static_cast<double>(exact.track->pillar_count()) + 1e-9);
  }
}

TEST_CASE("oracle validates its inputs") {
  CHECK_THROWS_WITH_AS(
      oracle::min_track_exact(core::Instance{{2, {1, 2}}, 1}),
      "track shorter than quarter", ValidationError);
  CHECK_THROWS_WITH_AS(
      oracle::min_track_exact(make(2, {1, 2}, 4), std::nullopt, 0),
      "node limit must be positive", ValidationError);
}
