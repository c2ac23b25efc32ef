#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lens/errors.hpp"
#include "lens/lift.hpp"

using namespace lens;

TEST(UnitTangentLift, CircleTurnsOnce) {
  const auto lift = unit_tangent_lift(circle_curve(), 512);
  EXPECT_NEAR(lift.total_turn(), kTwoPi, 1e-12);
  EXPECT_EQ(lift.theta_winding(), 1);
  EXPECT_EQ(unit_tangent_lift(reversed(circle_curve()), 512).theta_winding(), -1);
}

TEST(UnitTangentLift, LemniscateTurnsZero) {
  const auto lift = unit_tangent_lift(lemniscate_curve(), 1024);
  EXPECT_NEAR(lift.total_turn(), 0.0, 1e-12);
  EXPECT_EQ(lift.theta_winding(), 0);
}

TEST(UnitTangentLift, SegmentIsConstant) {
  const auto lift = unit_tangent_lift(segment_curve({0, 0}, {1, 1}), 50);
  EXPECT_FALSE(lift.closed);
  for (const auto& s : lift.samples) EXPECT_DOUBLE_EQ(s.angle, kPi / 4);
}

TEST(UnitTangentLift, ZeroSpeedIsRejected) {
  const std::vector<Vec2> p{{0, 0}, {1, 0}, {2, 0}};
  const std::vector<Vec2> v{{1, 0}, {0, 0}, {1, 0}};
  EXPECT_THROW(unit_tangent_lift(p, v, false), ImmersionError);
}

TEST(UnitTangentLift, CoarseSamplingIsRejected) {
  EXPECT_THROW(unit_tangent_lift(circle_curve(), 3), ImmersionError);
}

TEST(UnitTangentLift, RoseWindings) {
  EXPECT_EQ(unit_tangent_lift(rose_curve(3), 2048).theta_winding(), 2);
  EXPECT_EQ(unit_tangent_lift(rose_curve(5), 4096).theta_winding(), 3);
}

TEST(Projectivize, DoubleCoverRule) {
  for (const auto& c : {circle_curve(), lemniscate_curve(), rose_curve(3), reversed(rose_curve(5)), rose_curve(4)}) {
    const auto lift = unit_tangent_lift(c, 4096);
    EXPECT_EQ(projectivize(lift).line_winding(), 2 * lift.theta_winding()) << c.name();
  }
}

TEST(Projectivize, FiberLoopIsAGenerator) {
  ProjCurve fiber;
  fiber.closed = true;
  for (int i = 0; i < 16; ++i) fiber.samples.push_back({{0.2, 0.1}, kPi * i / 16.0});
  EXPECT_EQ(fiber.line_winding(), 1);
  for (const auto& p : fiber.samples) EXPECT_LT(p.line_angle(), kPi);
}

TEST(Projectivize, LineAngleIsLiftModPi) {
  const ProjPoint p{{0, 0}, -0.25};
  EXPECT_NEAR(p.line_angle(), kPi - 0.25, 1e-15);
  EXPECT_NEAR(ProjPoint({{0, 0}, 7.0}).line_angle(), 7.0 - 2 * kPi, 1e-15);
}

TEST(Distances, Examples) {
  const auto d = dist_components({{0, 0}, 0.0}, {{0.1, 0}, kPi / 3});
  EXPECT_NEAR(d.horizontal, 0.1, 1e-15);
  EXPECT_NEAR(d.vertical, kPi / 3, 1e-15);
  EXPECT_NEAR(d.d0, kPi / 3, 1e-15);
  EXPECT_NEAR(dist_components({{0, 0}, 0.0}, {{0, 0}, 2 * kPi / 3}).vertical, kPi / 3, 1e-15);
  const auto z = dist_components({{0.3, 0.2}, 1.0}, {{0.3, 0.2}, 1.0});
  EXPECT_EQ(z.horizontal, 0.0);
  EXPECT_EQ(z.vertical, 0.0);
  EXPECT_EQ(z.d0, 0.0);
  EXPECT_THROW(dist_components({{-1, 0}, 0.0}, {{1, 0}, 0.0}), DomainError);
}

TEST(Distances, Symmetric) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ProjPoint p{{0.6 * u(rng), 0.6 * u(rng)}, 10 * u(rng)};
    const ProjPoint q{{0.6 * u(rng), 0.6 * u(rng)}, 10 * u(rng)};
    const auto a = dist_components(p, q), b = dist_components(q, p);
    EXPECT_EQ(a.horizontal, b.horizontal);
    EXPECT_NEAR(a.vertical, b.vertical, 1e-14);
    EXPECT_NEAR(a.d0, b.d0, 1e-14);
    EXPECT_LE(a.vertical, kPi / 2);
  }
}

TEST(MinimalLinearCurve, Examples) {
  const MinimalLinearCurve flat({{0, 0}, 0.0}, {{1, 0}, 0.0});
  EXPECT_EQ(flat(0.5).lift, 0.0);
  EXPECT_NEAR(flat(0.5).base.x, 0.5, 1e-15);

  const MinimalLinearCurve fiber({{0, 0}, 0.0}, {{0, 0}, kPi / 3});
  EXPECT_EQ(fiber(0.5).base, (Vec2{0, 0}));
  EXPECT_NEAR(fiber(0.5).lift, kPi / 6, 1e-15);
  EXPECT_NEAR(fiber.vertical_length(), kPi / 3, 1e-15);

  const MinimalLinearCurve wrap({{0, 0}, 0.9 * kPi}, {{1, 0}, 0.1 * kPi});
  EXPECT_NEAR(wrap.rotation(), 0.2 * kPi, 1e-15);
  EXPECT_NEAR(wrap(0.5).line_angle(), 0.0, 1e-12);
  EXPECT_NEAR(wrap(1.0).line_angle(), 0.1 * kPi, 1e-12);
}

TEST(MinimalLinearCurve, RejectsPerpendicularLines) {
  EXPECT_THROW(MinimalLinearCurve({{0, 0}, 0.0}, {{0.5, 0}, kPi / 2}), DomainError);
  EXPECT_THROW(MinimalLinearCurve({{-1, 0}, 0.0}, {{1, 0}, 0.0}), DomainError);
}

TEST(MinimalLinearCurve, EndpointsAndVerticalLength) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ProjPoint p{{0.6 * u(rng), 0.6 * u(rng)}, 4 * u(rng)};
    const ProjPoint q{{0.6 * u(rng), 0.6 * u(rng)}, 4 * u(rng)};
    if (std::abs(dist_components(p, q).vertical - kPi / 2) < 1e-9) continue;
    const MinimalLinearCurve c(p, q);
    EXPECT_EQ(c(0.0).base, p.base);
    EXPECT_EQ(c(0.0).lift, p.lift);
    EXPECT_EQ(c(1.0).base, q.base);
    EXPECT_NEAR(c(1.0).line_angle(), q.line_angle(), 1e-12);
    EXPECT_NEAR(vertical_length(c), dist_components(p, q).vertical, 1e-12);
    ProjCurve sampled;
    for (int k = 0; k <= 64; ++k) sampled.samples.push_back(c(k / 64.0));
    EXPECT_NEAR(vertical_length(sampled), dist_components(p, q).vertical, 1e-12);
  }
}

TEST(VerticalLength, CircleLiftAndAdditivity) {
  const auto proj = projectivize(unit_tangent_lift(circle_curve(), 2048));
  EXPECT_NEAR(vertical_length(proj), kTwoPi, 1e-12);
  const MinimalLinearCurve a({{0, 0}, 0.0}, {{0.1, 0}, 0.3}), b({{0.1, 0}, 0.3}, {{0.2, 0}, 0.1});
  ProjCurve joined;
  for (int k = 0; k <= 10; ++k) joined.samples.push_back(a(k / 10.0));
  for (int k = 1; k <= 10; ++k) joined.samples.push_back(b(k / 10.0));
  EXPECT_NEAR(vertical_length(joined), vertical_length(a) + vertical_length(b), 1e-14);
}

TEST(TriangleAngles, ApproachPiForSmallTriangles) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double delta = 0.01;
  for (int i = 0; i < 1000; ++i) {
    const ProjPoint p{{0.5 * u(rng), 0.5 * u(rng)}, 3 * u(rng)};
    auto near = [&] {
      return ProjPoint{p.base + Vec2{u(rng), u(rng)} * (delta / 4), p.lift + u(rng) * delta / 4 + kPi * std::round(2 * u(rng))};
    };
    const ProjPoint q = near(), r = near();
    ASSERT_LT(dist_components(p, q).d0, delta);
    ASSERT_LT(dist_components(q, r).d0, delta);
    EXPECT_LT(std::abs(triangle_angle_sum(p, q, r) - kPi), 0.01);
  }
}

TEST(SecantRatio, OneOnMinimalCurve) {
  const MinimalLinearCurve c({{0, 0}, 0.0}, {{0.2, 0.1}, 0.1});
  EXPECT_NEAR(secant_ratio(c(0.0), c(0.4), c(1.0)), 1.0, 1e-12);
  EXPECT_LT(secant_ratio({{0, 0}, 0.0}, {{0.1, 0.1}, 0.0}, {{0.2, 0}, 0.0}), 1.0);
}
