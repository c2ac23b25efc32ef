#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lens/curve.hpp"
#include "lens/vec2.hpp"

namespace lens {

/// inj(N) of the flat unit disk: its diameter.
inline constexpr double kDiskInjectivity = 2.0;

struct LiftSample {
  Vec2 point;
  double angle = 0.0;  // continuous heading lift
};

/// Curve in the unit tangent bundle.
struct LiftedCurve {
  std::vector<LiftSample> samples;
  bool closed = false;

  /// Heading change along the samples, plus the closing step when closed.
  double total_turn() const;
  /// total_turn / 2 pi; throws NumericalError if not within 0.05 of an integer.
  int theta_winding() const;
};

/// Point of the projectivized bundle. Only the real lift is stored.
struct ProjPoint {
  Vec2 base;
  double lift = 0.0;

  double line_angle() const { return positive_mod(lift, kPi); }
};

struct ProjCurve {
  std::vector<ProjPoint> samples;
  bool closed = false;

  double total_rotation() const;
  /// total_rotation / pi; throws NumericalError if not within 0.05 of an integer.
  int line_winding() const;
};

/// Continuous heading lift of sampled velocities. Throws ImmersionError on a
/// zero velocity or when consecutive headings differ by pi/2 or more.
LiftedCurve unit_tangent_lift(std::span<const Vec2> points, std::span<const Vec2> velocities, bool closed);
LiftedCurve unit_tangent_lift(const PlaneCurve& curve, std::size_t samples);

ProjCurve projectivize(const LiftedCurve& lift);

struct Distances {
  double horizontal = 0.0;
  double vertical = 0.0;
  double d0 = 0.0;
};

/// Flat-background distances. Throws DomainError when d_h >= inj.
Distances dist_components(const ProjPoint& p, const ProjPoint& q, double inj = kDiskInjectivity);

/// Straight base segment with the line turning at a constant rate through the
/// shorter arc. t in [0, 1]; the lift is continuous from p.lift.
class MinimalLinearCurve {
 public:
  MinimalLinearCurve(const ProjPoint& p, const ProjPoint& q, double inj = kDiskInjectivity);

  ProjPoint operator()(double t) const;
  const ProjPoint& start() const { return p_; }
  const ProjPoint& end() const { return q_; }
  /// Signed fiber rotation from p to q, in (-pi/2, pi/2).
  double rotation() const { return rotation_; }
  double vertical_length() const { return std::abs(rotation_); }

 private:
  ProjPoint p_;
  ProjPoint q_;
  double rotation_;
};

inline MinimalLinearCurve minimal_linear_curve(const ProjPoint& p, const ProjPoint& q, double inj = kDiskInjectivity) {
  return MinimalLinearCurve(p, q, inj);
}

/// Sum of |lift steps|, closing step included for closed curves.
double vertical_length(const ProjCurve& curve);
double vertical_length(const MinimalLinearCurve& curve);

/// Sum of the interior angles of the geodesic triangle p q r in the flat
/// Sasaki product R^2 x R (lifts taken pairwise by the shorter arc).
double triangle_angle_sum(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

/// Ratio d0(p, r) / (d0(p, q) + d0(q, r)); 1 when q lies on the minimal curve from p to r.
double secant_ratio(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

}  // namespace lens
