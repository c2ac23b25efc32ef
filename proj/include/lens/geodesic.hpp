#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lens/boundary.hpp"
#include "lens/metric.hpp"

namespace lens {

/// A point of a geodesic. `direction` is the Euclidean heading in [0, 2 pi);
/// `arclength` is the Riemannian length accumulated from the entry point.
struct GeodesicState {
  Vec2 position;
  double direction = 0.0;
  double arclength = 0.0;
};

/// Derivative of a GeodesicState with respect to *Euclidean* arclength s.
///
///   dx/ds = cos(theta),  dy/ds = sin(theta)
///   dtheta/ds = (dn/dy cos(theta) - dn/dx sin(theta)) / n      (= d ln n / d normal)
///   dsigma/ds = n
///
/// Per unit Riemannian length the turn rate is dtheta/ds / n.
struct StateDerivative {
  Vec2 velocity;
  double turn_rate = 0.0;
  double length_rate = 1.0;
};

StateDerivative geodesic_rhs(const ConformalMetric& metric, const GeodesicState& state);

/// dtheta/dsigma, the heading's rotation per unit Riemannian length.
double riemannian_turn_rate(const ConformalMetric& metric, const GeodesicState& state);

struct IntegrationOptions {
  /// Accuracy target for exit position and heading; also the event tolerance.
  double tolerance = 1e-9;
  /// Riemannian length after which the geodesic is declared trapped; <= 0 means 100 diameters.
  double max_length = 0.0;
  std::size_t max_steps = 4'000'000;
};

struct GeodesicPath {
  std::vector<GeodesicState> samples;
  BoundaryVector entry;
  std::optional<BoundaryVector> exit;  // empty when trapped
  double length = 0.0;                 // Riemannian length tau

  bool trapped() const { return !exit.has_value(); }
  /// Exit state (last sample) as position/heading before boundary projection.
  const GeodesicState& last() const { return samples.back(); }
};

/// Traces the geodesic entering at `entry` until it reaches the boundary again.
/// Throws DomainError unless entry is strictly inward, SingularityError when the
/// straight chord of a singular metric passes inside its exclusion radius.
GeodesicPath integrate_geodesic(const ConformalMetric& metric, const BoundaryVector& entry,
                                const IntegrationOptions& opts = {});

/// n(r) r sin(psi): conserved along geodesics of radial metrics.
double clairaut(const ConformalMetric& metric, const GeodesicState& state);

/// Riemannian length of a polyline (three-point Gauss-Legendre per segment).
double riemannian_length(const ConformalMetric& metric, std::span<const Vec2> polyline);

/// Euclidean distance from the origin to the straight chord through `entry`.
double chord_clearance(const BoundaryVector& entry, double radius);

}  // namespace lens
