#include "lens/lift.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "lens/errors.hpp"

namespace lens {

namespace {

int integral(double value, const char* what) {
  const double r = std::round(value);
  if (std::abs(value - r) > 0.05)
    throw NumericalError(std::string(what) + " is not integral: " + std::to_string(value));
  return static_cast<int>(r);
}

}  // namespace

double LiftedCurve::total_turn() const {
  if (samples.size() < 2) return 0.0;
  double total = samples.back().angle - samples.front().angle;
  if (closed) total += wrap_pi(samples.front().angle - samples.back().angle);
  return total;
}

int LiftedCurve::theta_winding() const { return integral(total_turn() / kTwoPi, "theta winding"); }

double ProjCurve::total_rotation() const {
  if (samples.size() < 2) return 0.0;
  double total = samples.back().lift - samples.front().lift;
  if (closed) total += wrap_half_pi(samples.front().lift - samples.back().lift);
  return total;
}

int ProjCurve::line_winding() const { return integral(total_rotation() / kPi, "line winding"); }

LiftedCurve unit_tangent_lift(std::span<const Vec2> points, std::span<const Vec2> velocities, bool closed) {
  if (points.size() != velocities.size()) throw DomainError("unit_tangent_lift: size mismatch");
  LiftedCurve out;
  out.closed = closed;
  out.samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (velocities[i].norm2() == 0.0 || !std::isfinite(velocities[i].norm2()))
      throw ImmersionError("zero speed at sample " + std::to_string(i));
    const double heading = velocities[i].angle();
    double angle = heading;
    if (i > 0) {
      const double step = wrap_pi(heading - out.samples.back().angle);
      if (std::abs(step) >= kPi / 2)
        throw ImmersionError("heading jumps by " + std::to_string(step) + " at sample " + std::to_string(i) +
                             "; sample more densely");
      angle = out.samples.back().angle + step;
    }
    out.samples.push_back({points[i], angle});
  }
  if (closed && out.samples.size() > 1 &&
      std::abs(wrap_pi(out.samples.front().angle - out.samples.back().angle)) >= kPi / 2)
    throw ImmersionError("heading jumps across the closing sample; sample more densely");
  return out;
}

LiftedCurve unit_tangent_lift(const PlaneCurve& curve, std::size_t samples) {
  const auto p = curve.sample_positions(samples);
  const auto v = curve.sample_velocities(samples);
  return unit_tangent_lift(p, v, curve.closed());
}

ProjCurve projectivize(const LiftedCurve& lift) {
  ProjCurve out;
  out.closed = lift.closed;
  out.samples.reserve(lift.samples.size());
  for (const auto& s : lift.samples) out.samples.push_back({s.point, s.angle});
  return out;
}

Distances dist_components(const ProjPoint& p, const ProjPoint& q, double inj) {
  Distances d;
  d.horizontal = distance(p.base, q.base);
  if (d.horizontal >= inj) throw DomainError("base points beyond the injectivity radius");
  d.vertical = std::abs(wrap_half_pi(q.lift - p.lift));
  d.d0 = std::max(d.horizontal, d.vertical);
  return d;
}

MinimalLinearCurve::MinimalLinearCurve(const ProjPoint& p, const ProjPoint& q, double inj) : p_(p), q_(q) {
  if (distance(p.base, q.base) >= inj) throw DomainError("minimal linear curve: base points too far apart");
  const double delta = std::remainder(q.lift - p.lift, kPi);
  if (std::abs(std::abs(delta) - kPi / 2) < 1e-15)
    throw DomainError("minimal linear curve: lines are perpendicular, shorter arc ambiguous");
  rotation_ = delta;
}

ProjPoint MinimalLinearCurve::operator()(double t) const {
  if (t <= 0.0) return p_;
  ProjPoint out;
  out.base = p_.base + (q_.base - p_.base) * t;
  out.lift = p_.lift + rotation_ * t;
  if (t >= 1.0) out.base = q_.base;
  return out;
}

double vertical_length(const ProjCurve& curve) {
  double total = 0.0;
  const auto& s = curve.samples;
  for (std::size_t i = 1; i < s.size(); ++i) total += std::abs(s[i].lift - s[i - 1].lift);
  if (curve.closed && s.size() > 1) total += std::abs(wrap_half_pi(s.front().lift - s.back().lift));
  return total;
}

double vertical_length(const MinimalLinearCurve& curve) { return curve.vertical_length(); }

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double corner(const Vec3& at, const Vec3& a, const Vec3& b) {
  const Vec3 u = sub(a, at), v = sub(b, at);
  const double nu = std::sqrt(dot3(u, u)), nv = std::sqrt(dot3(v, v));
  if (nu == 0.0 || nv == 0.0) throw DomainError("degenerate triangle");
  return std::acos(std::clamp(dot3(u, v) / (nu * nv), -1.0, 1.0));
}

}  // namespace

double triangle_angle_sum(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  const Vec3 a{p.base.x, p.base.y, p.lift};
  const double lq = p.lift + std::remainder(q.lift - p.lift, kPi);
  const double lr = p.lift + std::remainder(r.lift - p.lift, kPi);
  const Vec3 b{q.base.x, q.base.y, lq};
  const Vec3 c{r.base.x, r.base.y, lr};
  return corner(a, b, c) + corner(b, c, a) + corner(c, a, b);
}

double secant_ratio(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  const double denom = dist_components(p, q).d0 + dist_components(q, r).d0;
  if (denom == 0.0) return 1.0;
  return dist_components(p, r).d0 / denom;
}

}  // namespace lens
