#pragma once

#include <string>

#include "lens/vec2.hpp"

namespace lens {

/// Which unit normal a boundary vector's angle is measured toward.
enum class Side { inward, outward };

enum class BoundaryClass { inward, tangential, outward };

std::string to_string(BoundaryClass c);

/// A unit tangent vector based on the boundary circle.
///
/// `arc` is the boundary point as a fraction of the (counter-clockwise) perimeter,
/// taken modulo 1. `angle` in [0, pi] is measured from the oriented boundary
/// tangent toward the normal selected by `side`: entry vectors use the inward
/// normal, exit vectors the outward one, so a diameter enters at (0, pi/2, inward)
/// and leaves at (0.5, pi/2, outward).
struct BoundaryVector {
  double arc = 0.0;
  double angle = kPi / 2;
  Side side = Side::inward;
};

BoundaryClass classify(const BoundaryVector& v);

/// The opposite vector at the same base point.
BoundaryVector reverse(const BoundaryVector& v);

/// Base point and Euclidean unit direction on a circle of radius R.
Vec2 boundary_point(const BoundaryVector& v, double radius);
Vec2 boundary_direction(const BoundaryVector& v);

/// Re-expresses a (position, direction) pair at the boundary; the position is
/// projected radially onto the circle.
BoundaryVector to_boundary_vector(Vec2 position, double direction_angle);

/// Smallest distance between two arc parameters on the unit-perimeter circle.
double arc_distance(double a, double b);

/// Isometry of the boundary circle: arc -> orientation * arc + shift (mod 1).
struct BoundaryIsometry {
  double shift = 0.0;
  int orientation = 1;

  static BoundaryIsometry identity() { return {}; }
  static BoundaryIsometry rotation(double shift) { return {shift, 1}; }
  static BoundaryIsometry reflection(double shift = 0.0) { return {shift, -1}; }

  double apply(double arc) const;
  BoundaryIsometry inverse() const;
};

/// The induced bundle map on boundary vectors: the tangential component follows
/// the differential of h, the normal component is preserved.
BoundaryVector phi_map(const BoundaryIsometry& h, const BoundaryVector& v);

}  // namespace lens
