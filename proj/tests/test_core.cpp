#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gaptrack/core.hpp"
#include "support.hpp"

using namespace gaptrack;

namespace {

core::Instance small_instance() {
  return core::validate_instance(core::make_wheel_config(2, {1, 2}), 4);
}

}  // namespace

TEST_CASE("wheel config rejects invariant violations") {
  CHECK_THROWS_WITH_AS(core::make_wheel_config(2, {}), "empty wheel set",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_wheel_config(2, {1, 3}), "wheel out of range",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_wheel_config(2, {0, 1}), "wheel out of range",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_wheel_config(3, {2, 1}), "wheels not sorted",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_wheel_config(3, {1, 1}), "duplicate wheel",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_wheel_config(0, {1}),
                       "quarter length must be positive", ValidationError);

  const core::WheelConfig car = core::make_wheel_config(2, {1, 2});
  CHECK(car.wheel_count() == 2);
  CHECK(car.max_wheel() == 2);
}

TEST_CASE("track layout rejects invariant violations") {
  CHECK_THROWS_WITH_AS(core::make_track_layout(4, {5}), "pillar out of range",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_track_layout(4, {0}), "pillar out of range",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_track_layout(4, {2, 2}), "duplicate pillar",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_track_layout(4, {3, 2}), "pillars not sorted",
                       ValidationError);
  CHECK_THROWS_WITH_AS(core::make_track_layout(0, {}),
                       "track length must be positive", ValidationError);
  CHECK(core::make_track_layout(4, {}).pillar_count() == 0);
}

TEST_CASE("instance validation") {
  const core::Instance instance = small_instance();
  CHECK(instance.offset_count() == 3);
  CHECK_THROWS_WITH_AS(
      core::validate_instance(core::make_wheel_config(2, {1, 2}), 1),
      "track shorter than quarter", ValidationError);
  CHECK_THROWS_WITH_AS(core::validate_instance({2, {}}, 4), "empty wheel set",
                       ValidationError);
}

TEST_CASE("coverage matches the worked examples") {
  const core::Instance instance = small_instance();

  SUBCASE("T={2,4} supports every offset") {
    const auto report =
        core::coverage(instance, core::make_track_layout(4, {2, 4}));
    CHECK(report.supported);
    CHECK(report.failure_count == 0);
    CHECK(report.failing_offsets.empty());
  }
  SUBCASE("T={3} drops offset 0 only") {
    const auto report =
        core::coverage(instance, core::make_track_layout(4, {3}));
    CHECK_FALSE(report.supported);
    CHECK(report.failure_count == 1);
    CHECK(report.failing_offsets == std::vector<std::int64_t>{0});
  }
  SUBCASE("full track always supports") {
    const auto report =
        core::coverage(instance, core::make_track_layout(4, {1, 2, 3, 4}));
    CHECK(report.supported);
  }
  SUBCASE("empty track fails at every offset") {
    const auto report =
        core::coverage(instance, core::make_track_layout(4, {}));
    CHECK(report.failure_count == instance.offset_count());
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_WITH_AS(
        core::coverage(instance, core::make_track_layout(5, {2})),
        "track length mismatch", ValidationError);
  }
}

TEST_CASE("pillar cover sets") {
  const core::Instance instance = small_instance();
  CHECK(core::pillar_cover_set(instance, 2) ==
        std::vector<std::int64_t>{0, 1});
  CHECK(core::pillar_cover_set(instance, 4) == std::vector<std::int64_t>{2});
  CHECK_THROWS_WITH_AS(core::pillar_cover_set(instance, 5),
                       "pillar out of range", ValidationError);
  CHECK_THROWS_WITH_AS(core::pillar_cover_set(instance, 0),
                       "pillar out of range", ValidationError);

  const core::Instance single =
      core::validate_instance(core::make_wheel_config(1, {1}), 6);
  for (std::int64_t p = 1; p <= 6; ++p) {
    CHECK(core::pillar_cover_set(single, p) ==
          std::vector<std::int64_t>{p - 1});
  }
}

TEST_CASE("coverage equals the naive double loop") {
  rng::Stream stream(0x636f7265);
  for (int trial = 0; trial < 300; ++trial) {
    const auto instance = testsupport::random_instance(stream, 6, 24);
    const auto track = testsupport::random_track(stream, instance.track_length);
    const auto expect = testsupport::naive_coverage(instance, track);
    const auto got = core::coverage(instance, track);
    REQUIRE(got.supported == expect.supported);
    REQUIRE(got.failure_count == expect.failure_count);
    REQUIRE(got.failing_offsets == expect.failing_offsets);
  }
}

TEST_CASE("cover-set duality: k in cover(p) iff p in C+k") {
  rng::Stream stream(0x6475616c);
  for (int trial = 0; trial < 40; ++trial) {
    const auto instance = testsupport::random_instance(stream, 5, 16);
    const std::int64_t offsets = instance.offset_count();
    for (std::int64_t p = 1; p <= instance.track_length; ++p) {
      const auto cover = core::pillar_cover_set(instance, p);
      const std::set<std::int64_t> in_cover(cover.begin(), cover.end());
      for (std::int64_t k = 0; k < offsets; ++k) {
        bool member = false;
        for (const std::int64_t w : instance.car.wheels) {
          if (k + w == p) member = true;
        }
        REQUIRE(in_cover.count(k) == static_cast<std::size_t>(member));
      }
      REQUIRE(cover.size() <= instance.car.wheels.size());
    }
  }
}

TEST_CASE("adding a pillar never increases the failure count") {
  rng::Stream stream(0x6d6f6e6f);
  for (int trial = 0; trial < 150; ++trial) {
    const auto instance = testsupport::random_instance(stream, 6, 20);
    const auto track = testsupport::random_track(stream, instance.track_length);
    const std::int64_t before =
        core::coverage(instance, track).failure_count;

    std::vector<std::int64_t> grown = track.pillars;
    const std::int64_t extra =
        1 + static_cast<std::int64_t>(stream.below(
                static_cast<std::uint64_t>(instance.track_length)));
    if (std::find(grown.begin(), grown.end(), extra) != grown.end()) continue;
    grown.push_back(extra);
    std::sort(grown.begin(), grown.end());
    const std::int64_t after =
        core::coverage(instance,
                       core::make_track_layout(instance.track_length, grown))
            .failure_count;
    REQUIRE(after <= before);
  }
}

TEST_CASE("supported tracks meet the counting lower bound") {
  rng::Stream stream(0x626f756e);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto instance = testsupport::random_instance(stream, 6, 18);
    const auto track = testsupport::random_track(stream, instance.track_length);
    if (!core::coverage(instance, track).supported) continue;
    ++checked;
    const std::int64_t offsets = instance.offset_count();
    const std::int64_t n = instance.car.wheel_count();
    REQUIRE(track.pillar_count() >= (offsets + n - 1) / n);
  }
  CHECK(checked > 50);  // the property must actually get exercised
}
