#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lens/eaton.hpp"
#include "lens/errors.hpp"
#include "lens/scattering.hpp"

using namespace lens;

namespace {

ConformalMetric bump_metric() {
  return ConformalMetric::radial_profile({{0.0, 1.3}, {0.25, 1.28125}, {0.5, 1.225}, {0.75, 1.13125}, {1.0, 1.0}});
}

}  // namespace

TEST(Classify, ByAngle) {
  EXPECT_EQ(classify({0.0, kPi / 2, Side::inward}), BoundaryClass::inward);
  EXPECT_EQ(classify({0.0, 0.0, Side::inward}), BoundaryClass::tangential);
  EXPECT_EQ(classify({0.0, kPi, Side::inward}), BoundaryClass::tangential);
  EXPECT_EQ(classify({0.0, kPi - 1e-9, Side::inward}), BoundaryClass::inward);
  EXPECT_EQ(classify({0.0, 1.0, Side::outward}), BoundaryClass::outward);
}

TEST(Boundary, ReverseIsAnInvolution) {
  const BoundaryVector v{0.3, 1.0, Side::inward};
  const BoundaryVector r = reverse(v);
  EXPECT_EQ(r.side, Side::outward);
  EXPECT_NEAR(r.angle, kPi - 1.0, 1e-15);
  const Vec2 d = boundary_direction(v), e = boundary_direction(r);
  EXPECT_NEAR((d + e).norm(), 0.0, 1e-15);
  const BoundaryVector rr = reverse(r);
  EXPECT_EQ(rr.side, v.side);
  EXPECT_NEAR(rr.angle, v.angle, 1e-15);
}

TEST(Boundary, RoundTripThroughPositionAndHeading) {
  const BoundaryVector v{0.71, 2.1, Side::inward};
  const BoundaryVector w = to_boundary_vector(boundary_point(v, 1.0), boundary_direction(v).angle());
  EXPECT_NEAR(w.arc, v.arc, 1e-14);
  EXPECT_NEAR(w.angle, v.angle, 1e-14);
  EXPECT_EQ(w.side, Side::inward);
}

TEST(PhiMap, Examples) {
  const BoundaryVector v{0.0, kPi / 2, Side::inward};
  const auto id = phi_map(BoundaryIsometry::identity(), {0.4, 1.1, Side::inward});
  EXPECT_NEAR(id.arc, 0.4, 1e-15);
  EXPECT_NEAR(id.angle, 1.1, 1e-15);
  const auto rot = phi_map(BoundaryIsometry::rotation(0.25), v);
  EXPECT_NEAR(rot.arc, 0.25, 1e-15);
  EXPECT_NEAR(rot.angle, kPi / 2, 1e-15);
  const auto ref = phi_map(BoundaryIsometry::reflection(), {0.0, kPi / 4, Side::inward});
  EXPECT_NEAR(ref.arc, 0.0, 1e-15);
  EXPECT_NEAR(ref.angle, 3 * kPi / 4, 1e-15);
}

TEST(PhiMap, InverseAndClassPreserved) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const BoundaryIsometry h{u(rng), u(rng) < 0.5 ? -1 : 1};
    const BoundaryVector v{u(rng), kPi * u(rng), u(rng) < 0.5 ? Side::inward : Side::outward};
    const BoundaryVector w = phi_map(h.inverse(), phi_map(h, v));
    EXPECT_LT(arc_distance(w.arc, v.arc), 1e-12);
    EXPECT_NEAR(w.angle, v.angle, 1e-12);
    EXPECT_EQ(classify(phi_map(h, v)), classify(v));
  }
}

TEST(Scatter, VacuumExamples) {
  const auto vac = ConformalMetric::vacuum();
  const auto d = scatter(vac, {0.0, kPi / 2, Side::inward});
  EXPECT_NEAR(d.exit->arc, 0.5, 1e-9);
  EXPECT_NEAR(d.exit->angle, kPi / 2, 1e-9);
  EXPECT_NEAR(d.tau, 2.0, 1e-9);
  const auto q = scatter(vac, {0.0, kPi / 4, Side::inward});
  EXPECT_NEAR(q.exit->arc, 0.25, 1e-9);
  EXPECT_NEAR(q.exit->angle, kPi / 4, 1e-9);
  EXPECT_NEAR(q.tau, std::sqrt(2.0), 1e-9);
  EXPECT_NE(classify(*q.exit), BoundaryClass::inward);
}

TEST(Scatter, Reversibility) {
  const IntegrationOptions o;
  for (const auto& m : {ConformalMetric::vacuum(), make_eaton_metric(), bump_metric()}) {
    for (const auto& e : boundary_grid({4, 4, 0.05}, 2e-3)) {
      const auto fwd = scatter(m, e, o);
      const auto back = scatter(m, reverse(*fwd.exit), o);
      const BoundaryVector r = reverse(*back.exit);
      EXPECT_LT(arc_distance(r.arc, e.arc) * kTwoPi, 2 * o.tolerance);
      EXPECT_LT(std::abs(r.angle - e.angle), 2 * o.tolerance);
    }
  }
}

TEST(Grid, Parsing) {
  const GridSpec g = parse_grid("16x8");
  EXPECT_EQ(g.arcs, 16u);
  EXPECT_EQ(g.angles, 8u);
  const GridSpec h = parse_grid("64");
  EXPECT_EQ(h.arcs * h.angles, 64u);
  EXPECT_EQ(to_string(g), "16x8");
  EXPECT_THROW(parse_grid("1x8"), DomainError);
  EXPECT_THROW(parse_grid("abc"), DomainError);
  EXPECT_THROW(parse_grid("63"), DomainError);
}

TEST(Grid, AvoidsTangentialAndSingularChord) {
  const auto entries = boundary_grid({16, 9, 0.05}, 0.01);
  for (const auto& e : entries) {
    EXPECT_GE(e.angle, 0.05);
    EXPECT_LE(e.angle, kPi - 0.05);
    EXPECT_GE(chord_clearance(e, 1.0), 0.01);
  }
  EXPECT_EQ(entries.size(), 16u * 8u);  // the centred normal angle is dropped
}

TEST(LensData, SortedWithoutDuplicates) {
  auto entries = boundary_grid({4, 3, 0.05});
  entries.push_back(entries.front());
  std::reverse(entries.begin(), entries.end());
  const auto data = lens_data(ConformalMetric::vacuum(), entries, "4x3");
  ASSERT_EQ(data.records.size(), 12u);
  for (std::size_t i = 1; i < data.records.size(); ++i) {
    const auto& a = data.records[i - 1].entry;
    const auto& b = data.records[i].entry;
    EXPECT_TRUE(a.arc < b.arc || (a.arc == b.arc && a.angle < b.angle));
  }
}

TEST(Compare, VacuumWithItself) {
  const auto vac = ConformalMetric::vacuum();
  const auto rep = compare_scattering(vac, vac, BoundaryIsometry::identity(), boundary_grid({}), 1e-4);
  EXPECT_TRUE(rep.equal);
  EXPECT_LT(rep.max_angle_dev, 1e-9);
  EXPECT_LT(rep.max_arc_dev, 1e-9);
  EXPECT_NEAR(rep.mean_excess, 0.0, 1e-9);
}

TEST(Compare, VacuumWithRotatedVacuum) {
  const auto vac = ConformalMetric::vacuum();
  for (const BoundaryIsometry h : {BoundaryIsometry::rotation(0.3), BoundaryIsometry::reflection(0.1)}) {
    const auto rep = compare_scattering(vac, vac, h, boundary_grid({8, 4, 0.05}), 1e-6);
    EXPECT_TRUE(rep.equal);
  }
}

TEST(Compare, VacuumWithEaton) {
  const auto rep = compare_scattering(ConformalMetric::vacuum(), make_eaton_metric(), BoundaryIsometry::identity(),
                                      boundary_grid(parse_grid("64"), 2e-3), 1e-4);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.trapped_count, 0u);
  EXPECT_EQ(rep.sample_count, 64u);
}

TEST(Compare, VacuumWithBumpDiffers) {
  const auto rep =
      compare_scattering(ConformalMetric::vacuum(), bump_metric(), BoundaryIsometry::identity(), boundary_grid({}), 1e-4);
  EXPECT_FALSE(rep.equal);
  // a radial index keeps exit angle = entry angle, so the deflection shows in the exit point
  EXPECT_GT(rep.max_arc_dev, 100 * 1e-4);
}

TEST(Compare, TrappedSamplesForbidEquality) {
  IntegrationOptions o;
  o.max_length = 3.0;
  const auto rep = compare_scattering(ConformalMetric::vacuum(), make_eaton_metric(), BoundaryIsometry::identity(),
                                      boundary_grid({4, 2, 0.05}, 2e-3), 1e-4, o);
  EXPECT_GT(rep.trapped_count, 0u);
  EXPECT_FALSE(rep.equal);
}

TEST(Compare, RequiresEqualPerimeters) {
  EXPECT_THROW(compare_scattering(ConformalMetric::vacuum(1.0), ConformalMetric::vacuum(2.0),
                                  BoundaryIsometry::identity(), boundary_grid({4, 2, 0.05}), 1e-4),
               DomainError);
}

TEST(LengthExcess, VacuumIsZero) {
  const auto vac = ConformalMetric::vacuum();
  const auto rep = length_excess(vac, vac, BoundaryIsometry::identity(), boundary_grid({}));
  EXPECT_NEAR(rep.mean, 0.0, 1e-9);
  EXPECT_LT(rep.max_deviation, 1e-9);
}

TEST(LengthExcess, EatonIsConstant) {
  const auto rep = length_excess(ConformalMetric::vacuum(), make_eaton_metric(), BoundaryIsometry::identity(),
                                 boundary_grid(parse_grid("64"), 2e-3));
  EXPECT_GT(rep.mean, 0.0);
  EXPECT_LT(rep.max_deviation, 1e-3 * rep.mean);
  EXPECT_NEAR(rep.mean, kTwoPi, 1e-6);
}

TEST(LengthExcess, NearNormalAntipodalPair) {
  // exactly normal entries hit the pole, so take the nearest admissible angle
  const double a = kPi / 2 - 0.01;
  const std::vector<BoundaryVector> entries{{0.0, a, Side::inward}, {0.5, a, Side::inward}};
  const auto rep = length_excess(ConformalMetric::vacuum(), make_eaton_metric(), BoundaryIsometry::identity(), entries);
  ASSERT_EQ(rep.excesses.size(), 2u);
  EXPECT_NEAR(rep.excesses[0], rep.excesses[1], 1e-3 * rep.mean);
}

TEST(AngleDeviation, ZeroForIdentical) {
  const BoundaryVector v{0.2, 1.0, Side::outward};
  EXPECT_EQ(boundary_angle_deviation(v, v), 0.0);
}
