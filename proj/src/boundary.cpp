#include "lens/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace lens {

std::string to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::inward: return "inward";
    case BoundaryClass::tangential: return "tangential";
    case BoundaryClass::outward: return "outward";
  }
  return "unknown";
}

BoundaryClass classify(const BoundaryVector& v) {
  if (v.angle <= 0.0 || v.angle >= kPi) return BoundaryClass::tangential;
  return v.side == Side::inward ? BoundaryClass::inward : BoundaryClass::outward;
}

BoundaryVector reverse(const BoundaryVector& v) {
  return {v.arc, kPi - v.angle, v.side == Side::inward ? Side::outward : Side::inward};
}

Vec2 boundary_point(const BoundaryVector& v, double radius) { return unit(kTwoPi * v.arc) * radius; }

Vec2 boundary_direction(const BoundaryVector& v) {
  const Vec2 radial = unit(kTwoPi * v.arc);
  const Vec2 tangent{-radial.y, radial.x};
  const Vec2 normal = v.side == Side::inward ? -radial : radial;
  return tangent * std::cos(v.angle) + normal * std::sin(v.angle);
}

BoundaryVector to_boundary_vector(Vec2 position, double direction_angle) {
  const double phase = position.angle();
  const Vec2 radial = unit(phase);
  const Vec2 tangent{-radial.y, radial.x};
  const Vec2 dir = unit(direction_angle);
  const double a = dot(dir, tangent);
  const double b = -dot(dir, radial);  // inward component
  BoundaryVector v;
  v.arc = positive_mod(phase / kTwoPi, 1.0);
  if (b >= 0.0) {
    v.side = Side::inward;
    v.angle = std::atan2(b, a);
  } else {
    v.side = Side::outward;
    v.angle = std::atan2(-b, a);
  }
  v.angle = std::clamp(v.angle, 0.0, kPi);
  return v;
}

double arc_distance(double a, double b) {
  const double d = positive_mod(a - b, 1.0);
  return std::min(d, 1.0 - d);
}

double BoundaryIsometry::apply(double arc) const {
  return positive_mod(static_cast<double>(orientation) * arc + shift, 1.0);
}

BoundaryIsometry BoundaryIsometry::inverse() const {
  return {positive_mod(-static_cast<double>(orientation) * shift, 1.0), orientation};
}

BoundaryVector phi_map(const BoundaryIsometry& h, const BoundaryVector& v) {
  BoundaryVector out = v;
  out.arc = h.apply(v.arc);
  if (h.orientation < 0) out.angle = kPi - v.angle;
  return out;
}

}  // namespace lens
