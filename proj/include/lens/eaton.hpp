#pragma once

#include <cstddef>
#include <vector>

#include "lens/geodesic.hpp"
#include "lens/metric.hpp"

namespace lens {

/// sqrt(n) - 1/(n r) - sqrt(1/(n r)^2 - 1); zero on the invisible-lens index curve.
double eaton_residual(double r, double n);

/// Root of the index equation on the branch n r <= 1, by bisection on n in [1, 1/r].
/// Throws DomainError unless 0 < r <= 1.
double eaton_index(double r);

/// d ln n / d ln r at a point (r, n) of the index curve: -2 / (2 + sqrt(1 - (n r)^2)).
double eaton_log_slope(double r, double n);

/// Closest approach r of a ray with impact parameter b (the solution of n(r) r = b).
double eaton_turning_radius(double impact);

/// Tabulated invisible-lens profile on the unit disk.
///
/// ln n is stored against ln r at log-spaced radii with exact slopes and evaluated
/// by monotone Hermite interpolation. The table reaches down to half the turning
/// radius of the most central admissible ray (impact parameter `exclusion`), so
/// every traced geodesic stays on it; below that, evaluation falls back to a
/// direct root solve. Outside r = 1 the profile continues as n = 1/r, which keeps
/// it C1 for stages of the integrator that overshoot the boundary.
class EatonProfile final : public RadialProfile {
 public:
  static constexpr std::size_t kDefaultTableSize = 4096;

  explicit EatonProfile(double exclusion = 1e-3, std::size_t table_size = kDefaultTableSize, bool direct = false);

  double index(double rho) const override;
  double log_derivative(double rho) const override;

  double exclusion() const { return exclusion_; }
  double table_floor() const { return floor_; }
  bool direct() const { return direct_; }

 private:
  double exclusion_;
  double floor_;
  bool direct_;
  MonotoneCubic log_table_;
};

/// The invisible lens as a singular conformal metric. `direct` selects the
/// per-evaluation root solve instead of the table (slow; for validation).
ConformalMetric make_eaton_metric(double radius = 1.0, double exclusion = 1e-3, bool direct = false);

/// Straight-line (vacuum) exit of an entry vector.
BoundaryVector vacuum_exit(const BoundaryVector& entry);

struct InvisibilityEntry {
  BoundaryVector entry;
  bool trapped = false;
  double direction_deviation = 0.0;  // |exit heading - entry heading|, radians
  double position_deviation = 0.0;   // |exit point - straight-line exit point|
};

struct InvisibilityReport {
  std::vector<InvisibilityEntry> entries;
  double max_direction_deviation = 0.0;
  double max_position_deviation = 0.0;
  std::size_t trapped_count = 0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Traces every entry through `metric` and compares each exit with the straight
/// line: exit heading parallel to the entry heading, exit point on the chord.
InvisibilityReport invisibility_check(const ConformalMetric& metric, const std::vector<BoundaryVector>& entries,
                                      double tol, const IntegrationOptions& opts = {});

/// Winding number about the origin of the path closed by the straight chord
/// from its exit back to its entry. Throws NumericalError if the polar-angle
/// total is more than 0.1 turns from an integer.
int loop_winding(const GeodesicPath& path);

/// Same path traversed from exit to entry.
GeodesicPath reversed(const GeodesicPath& path);

}  // namespace lens
