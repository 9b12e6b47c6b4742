#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orbicoh/builtins.hpp"
#include "orbicoh/error.hpp"
#include "orbicoh/fan.hpp"

using namespace orbicoh;

namespace {

Fan transformed(const Fan& f, const IntMatrix& u) {
  std::vector<IntVector> rays;
  for (const auto& r : f.rays()) rays.push_back(u * r);
  return Fan(f.dimension(), rays, f.max_cones());
}

Fan drop_cone(const Fan& f, std::size_t k) {
  auto cones = f.max_cones();
  cones.erase(cones.begin() + static_cast<long>(k));
  return Fan(f.dimension(), f.rays(), cones);
}

}  // namespace

TEST(Fan, ConstructorValidates) {
  EXPECT_THROW(Fan(2, {make_vector({2, 0}), make_vector({0, 1})}, {{0, 1}}), Error);
  EXPECT_THROW(Fan(2, {make_vector({1, 0}), make_vector({1, 0})}, {{0, 1}}), Error);
  EXPECT_THROW(Fan(2, {make_vector({1, 0}), make_vector({-1, 0})}, {{0, 1}}), Error);
  EXPECT_THROW(Fan(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})}, {{0, 1}}), Error);
  EXPECT_THROW(Fan(2, {make_vector({1, 0}), make_vector({0, 1})}, {{0, 1, 1}}), Error);
}

TEST(Completeness, CounterexampleFamily) {
  for (long d = 1; d <= 7; ++d) {
    auto report = completeness_check(counterexample_fan(d).fan, 2000, static_cast<std::uint64_t>(d));
    EXPECT_TRUE(report.passed()) << d;
    EXPECT_EQ(report.trials, 2000u);
    EXPECT_EQ(report.walls.counts.size(), 15u);
  }
}

TEST(Completeness, FibrationFan) {
  for (long a = 1; a <= 5; ++a) EXPECT_TRUE(completeness_check(fibration_fan(a).fan, 2000, 1).passed());
}

TEST(Completeness, MissingConeFails) {
  auto f = drop_cone(counterexample_fan(2).fan, 4);
  auto report = completeness_check(f, 2000, 3);
  EXPECT_FALSE(report.walls.ok());
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.walls.bad_walls().empty());
}

TEST(Completeness, SamplingCatchesOverlapWithGoodWalls) {
  // Two full turns around the origin in the plane: rays at the eight
  // compass points, cones wound twice. Every wall is shared by exactly two
  // cones, but every direction is covered twice.
  std::vector<IntVector> rays{make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 0}),
                              make_vector({0, -1}), make_vector({1, 1}), make_vector({-1, 1}),
                              make_vector({-1, -1}), make_vector({1, -1})};
  // Angular order 0,4,1,5,2,6,3,7; first lap uses even steps, second odd.
  std::vector<std::vector<int>> cones{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  Fan f(2, rays, cones);
  auto report = completeness_check(f, 200, 4);
  EXPECT_TRUE(report.walls.ok());
  EXPECT_FALSE(report.passed());
  ASSERT_TRUE(report.counterexample.has_value());
  EXPECT_EQ(report.containing_cones, 2u);
}

TEST(Completeness, DeterministicAndUnimodularInvariant) {
  oracle::Rng rng(7);
  auto f = counterexample_fan(3).fan;
  auto a = completeness_check(f, 500, 99);
  auto b = completeness_check(f, 500, 99);
  EXPECT_EQ(a.resampled, b.resampled);
  for (int trial = 0; trial < 5; ++trial)
    EXPECT_TRUE(completeness_check(transformed(f, oracle::random_unimodular(rng, 3)), 500, 5).passed());
}

TEST(FanToPair, CounterexampleDual) {
  for (long d = 1; d <= 4; ++d) {
    auto fan = counterexample_fan(d).fan;
    auto pair = fan_to_pair(fan);
    EXPECT_EQ(pair.poset.facet_count(), 7);
    EXPECT_EQ(pair.poset.vertex_count(), 10u);
    EXPECT_EQ(classify(pair.poset), PosetClass::Other);
    EXPECT_TRUE(validate(pair.poset, pair.v).ok());
    EXPECT_TRUE(pair.flags.face_acyclic);
  }
}

TEST(FanToPair, FibrationDualIsTriangularPrism) {
  auto pair = fan_to_pair(fibration_fan(2).fan);
  EXPECT_EQ(pair.poset.facet_count(), 5);
  EXPECT_EQ(pair.poset.vertex_count(), 6u);
  EXPECT_EQ(classify(pair.poset), PosetClass::Prism);
}

TEST(FanToPair, ProjectivePlane) {
  Fan f(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
  auto pair = fan_to_pair(f);
  EXPECT_EQ(classify(pair.poset), PosetClass::Simplex);
  EXPECT_EQ(pair.poset.size(), 7u);
}

TEST(FanToPair, IncompleteFanRejected) {
  try {
    fan_to_pair(drop_cone(fibration_fan(1).fan, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteFan);
  }
}

TEST(FanToPair, DualitySanityUnderRandomBases) {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = transformed(counterexample_fan(1 + trial % 4).fan, oracle::random_unimodular(rng, 3));
    auto pair = fan_to_pair(f);
    EXPECT_TRUE(pair.poset.is_nice());
    EXPECT_TRUE(validate(pair.poset, pair.v).ok());
    EXPECT_EQ(pair.poset.vertex_count(), f.max_cones().size());
    EXPECT_EQ(static_cast<std::size_t>(pair.poset.facet_count()), f.rays().size());
  }
}

TEST(DeltaCokernels, Examples) {
  for (long a = 1; a <= 5; ++a) {
    auto [top, next] = delta_cokernels(fibration_fan(a).fan);
    EXPECT_TRUE(top.is_trivial());
    EXPECT_TRUE(next.is_trivial());
  }
  for (long d = 1; d <= 7; ++d) {
    auto [top, next] = delta_cokernels(counterexample_fan(d).fan);
    EXPECT_TRUE(top.is_trivial());
    EXPECT_TRUE(next.is_trivial());
  }
  auto s = simplex3_example();
  auto [top, next] = ray_delta_cokernels(3, s.v.vectors());
  EXPECT_EQ(top, FinAbGroup::cyclic(2));
  EXPECT_TRUE(next.is_trivial());
}

TEST(DeltaCokernels, IncompleteFan) {
  EXPECT_THROW(delta_cokernels(drop_cone(counterexample_fan(2).fan, 0)), Error);
}

TEST(DeltaCokernels, SignFlipsDoNotMatter) {
  oracle::Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<IntVector> rays;
    for (int k = 0; k < 4; ++k) rays.push_back(oracle::random_primitive(rng, 3, 3));
    auto base = ray_delta_cokernels(3, rays);
    for (auto& r : rays)
      if (oracle::uniform(rng, 0, 1))
        for (auto& x : r) x = -x;
    EXPECT_EQ(ray_delta_cokernels(3, rays), base);
  }
}

TEST(Relations, CounterexampleIdentities) {
  for (long d = 1; d <= 9; ++d) {
    const auto r = counterexample_fan(d).fan.rays();
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(Integer(d * r[3][k]), r[0][k] + r[1][k] + d * r[5][k]);
      EXPECT_EQ(Integer(-d * r[5][k]), 2 * r[0][k] + r[1][k] + r[2][k]);
    }
  }
}

TEST(Builtins, ParameterChecks) {
  EXPECT_THROW(weighted_triangle(0), Error);
  EXPECT_THROW(counterexample_fan(0), Error);
  EXPECT_THROW(fibration_fan(-1), Error);
  EXPECT_THROW(fibration_fiber(0), Error);
}

TEST(Builtins, FibrationFiber) {
  for (long a = 1; a <= 10; ++a) {
    auto fiber = fibration_fiber(a);
    auto r = full_report_low_dim(fiber.poset, fiber.v, AssumptionFlags::defaults_for(fiber.poset));
    EXPECT_EQ(r.group(3), FinAbGroup::cyclic(a));
  }
}
