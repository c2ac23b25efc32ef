#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lens/eaton.hpp"
#include "lens/errors.hpp"
#include "lens/scattering.hpp"

using namespace lens;

namespace {

// mpmath oracle (50 digits, independent bisection on the index equation).
struct IndexOracle {
  double r, n;
};
constexpr IndexOracle kIndex[] = {
    {0.5, 1.9010803402881386},  {0.1, 6.7169302673530929},  {0.01, 33.536122284251143},
    {0.001, 158.07413946616497}, {0.9, 1.1096103231775954}, {0.999, 1.0010008757819675},
};

// Travel time for entry angle a: the straight chord plus one loop of the boundary circle.
double tau_oracle(double a) { return 2 * std::sin(a) + kTwoPi; }

std::vector<BoundaryVector> grid64() { return boundary_grid(parse_grid("64"), 2e-3); }

}  // namespace

TEST(EatonIndex, BoundaryValue) {
  EXPECT_EQ(eaton_index(1.0), 1.0);
  EXPECT_LT(std::abs(eaton_residual(1.0, eaton_index(1.0))), 1e-12);
}

TEST(EatonIndex, MatchesOracle) {
  for (const auto& o : kIndex) EXPECT_NEAR(eaton_index(o.r), o.n, 1e-12 * o.n) << "r = " << o.r;
}

TEST(EatonIndex, ResidualAtRandomRadii) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = u(rng);
    const double n = eaton_index(r);
    EXPECT_LT(std::abs(eaton_residual(r, n)), 1e-10) << r;
    EXPECT_LE(n * r, 1.0 + 1e-15);
  }
}

TEST(EatonIndex, StrictlyDecreasingAndDivergent) {
  double prev = INFINITY;
  for (int i = 1; i <= 2000; ++i) {
    const double r = std::pow(10.0, -6.0 + 6.0 * i / 2000.0);
    const double n = eaton_index(r);
    EXPECT_LT(n, prev);
    prev = n;
  }
  EXPECT_GT(eaton_index(1e-3), eaton_index(1e-2));
  EXPECT_GT(eaton_index(1e-3), 100.0);
  EXPECT_GT(eaton_index(1e-9), 1e4);
}

TEST(EatonIndex, DomainErrors) {
  EXPECT_THROW(eaton_index(0.0), DomainError);
  EXPECT_THROW(eaton_index(-0.1), DomainError);
  EXPECT_THROW(eaton_index(1.5), DomainError);
}

TEST(EatonIndex, LogSlopeLimits) {
  EXPECT_NEAR(eaton_log_slope(1.0, 1.0), -1.0, 1e-15);
  // the approach to -2/3 is slow: the deviation scales like r^(2/3)
  EXPECT_NEAR(eaton_log_slope(1e-8, eaton_index(1e-8)), -2.0 / 3.0, 1e-5);
  EXPECT_NEAR(eaton_log_slope(1e-14, eaton_index(1e-14)), -2.0 / 3.0, 1e-8);
  // dn/dr at 0.5 against the oracle
  const double n = eaton_index(0.5);
  EXPECT_NEAR(eaton_log_slope(0.5, n) * n / 0.5, -3.2910568385362895, 1e-10);
}

TEST(EatonIndex, TurningRadiusSolvesImpactEquation) {
  for (double b : {1e-3, 0.05, 0.3, 0.9}) {
    const double r = eaton_turning_radius(b);
    EXPECT_NEAR(eaton_index(r) * r, b, 1e-12);
  }
}

TEST(EatonProfile, TableMatchesDirectSolve) {
  const EatonProfile table;
  const EatonProfile direct(1e-3, EatonProfile::kDefaultTableSize, true);
  for (int i = 0; i <= 200; ++i) {
    const double r = std::pow(10.0, -9.5 + 9.5 * i / 200.0);
    EXPECT_NEAR(table.index(r), direct.index(r), 1e-9 * direct.index(r)) << r;
    EXPECT_NEAR(table.log_derivative(r), direct.log_derivative(r), 1e-6 * std::abs(direct.log_derivative(r))) << r;
  }
  EXPECT_EQ(table.index(1.0), 1.0);
  EXPECT_LT(table.table_floor(), eaton_turning_radius(1e-3));
}

TEST(EatonProfile, TableRespectsRealRoot) {
  const EatonProfile p;
  for (int i = 0; i <= 4000; ++i) {
    const double r = std::pow(10.0, -9.8 + 9.8 * i / 4000.0);
    EXPECT_LE(p.index(r) * r, 1.0 + 1e-12);
  }
}

TEST(Invisibility, QuarterChord) {
  const auto rec = scatter(make_eaton_metric(), {0.0, kPi / 4, Side::inward});
  ASSERT_FALSE(rec.trapped());
  EXPECT_NEAR(rec.exit->arc, 0.25, 1e-4);
  EXPECT_NEAR(rec.exit->angle, kPi / 4, 1e-4);
  EXPECT_GT(rec.tau, std::sqrt(2.0));
  EXPECT_NEAR(rec.tau, tau_oracle(kPi / 4), 1e-7);
}

TEST(Invisibility, NearNormalEntryIsParallel) {
  const auto rep = invisibility_check(make_eaton_metric(), {{0.1, kPi / 2 - 0.05, Side::inward}}, 1e-5);
  EXPECT_TRUE(rep.passed);
}

TEST(Invisibility, Grid64) {
  const auto entries = grid64();
  ASSERT_EQ(entries.size(), 64u);
  const auto rep = invisibility_check(make_eaton_metric(), entries, 1e-4);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.trapped_count, 0u);
  EXPECT_LT(rep.max_direction_deviation, 1e-4);
  EXPECT_LT(rep.max_position_deviation, 1e-4);
}

TEST(Invisibility, VacuumControl) {
  const auto rep = invisibility_check(ConformalMetric::vacuum(), grid64(), 1e-4);
  EXPECT_LT(rep.max_direction_deviation, 1e-9);
  EXPECT_LT(rep.max_position_deviation, 1e-9);
}

TEST(TravelTime, MatchesOracle) {
  const auto m = make_eaton_metric();
  for (double a : {0.2, 1.0, 1.4, 2.5}) EXPECT_NEAR(scatter(m, {0.4, a, Side::inward}).tau, tau_oracle(a), 1e-7) << a;
}

TEST(LoopWinding, VacuumChordIsZero) {
  const auto path = integrate_geodesic(ConformalMetric::vacuum(), {0.0, 1.0, Side::inward});
  EXPECT_EQ(loop_winding(path), 0);
}

TEST(LoopWinding, EatonQuarterChordCircuits) {
  const auto path = integrate_geodesic(make_eaton_metric(), {0.0, kPi / 4, Side::inward});
  EXPECT_EQ(loop_winding(path), 1);
  EXPECT_EQ(loop_winding(reversed(path)), -1);
}

TEST(LoopWinding, EveryGridGeodesic) {
  const auto m = make_eaton_metric();
  for (const auto& e : grid64()) EXPECT_EQ(std::abs(loop_winding(integrate_geodesic(m, e))), 1);
}

TEST(LoopWinding, SmallImpactParameters) {
  const auto m = make_eaton_metric();
  for (double b : {1.01e-3, 1e-2, 5e-2}) {
    const auto path = integrate_geodesic(m, {0.0, std::acos(b), Side::inward});
    ASSERT_FALSE(path.trapped());
    EXPECT_EQ(std::abs(loop_winding(path)), 1);
    EXPECT_NEAR(path.length, tau_oracle(std::acos(b)), 1e-6);
  }
}

TEST(VacuumExit, ChordGeometry) {
  const auto e = vacuum_exit({0.2, kPi / 3, Side::inward});
  EXPECT_NEAR(e.arc, 0.2 + 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(e.angle, kPi / 3, 1e-15);
  EXPECT_EQ(e.side, Side::outward);
}
