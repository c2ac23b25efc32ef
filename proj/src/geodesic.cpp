#include "lens/geodesic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "lens/errors.hpp"

namespace lens {

StateDerivative geodesic_rhs(const ConformalMetric& metric, const GeodesicState& state) {
  const Vec2 g = metric.log_gradient(state.position);
  const double c = std::cos(state.direction);
  const double s = std::sin(state.direction);
  return {{c, s}, g.y * c - g.x * s, metric.index(state.position)};
}

double riemannian_turn_rate(const ConformalMetric& metric, const GeodesicState& state) {
  const StateDerivative d = geodesic_rhs(metric, state);
  return d.turn_rate / d.length_rate;
}

double chord_clearance(const BoundaryVector& entry, double radius) { return radius * std::abs(std::cos(entry.angle)); }

namespace {

// State layout: x, y, heading (continuous), Riemannian length.
using Y = std::array<double, 4>;

struct Derivs {
  bool ok = true;
  Y value{};
};

Derivs eval(const ConformalMetric& metric, const Y& y) {
  try {
    const StateDerivative d = geodesic_rhs(metric, {{y[0], y[1]}, y[2], y[3]});
    if (!std::isfinite(d.turn_rate) || !std::isfinite(d.length_rate)) return {false, {}};
    return {true, {d.velocity.x, d.velocity.y, d.turn_rate, d.length_rate}};
  } catch (const SingularityError&) {
    return {false, {}};
  }
}

// Dormand-Prince 5(4) tableau (autonomous system, so the nodes c_i are not needed).
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct StepResult {
  bool ok = false;
  Y y{};
  Y err{};
};

StepResult dopri_step(const ConformalMetric& metric, const Y& y0, double h) {
  auto combine = [&](std::initializer_list<std::pair<double, const Y*>> terms) {
    Y out = y0;
    for (const auto& [w, k] : terms)
      for (std::size_t i = 0; i < 4; ++i) out[i] += h * w * (*k)[i];
    return out;
  };
  StepResult r;
  const Derivs k1 = eval(metric, y0);
  if (!k1.ok) return r;
  const Derivs k2 = eval(metric, combine({{a21, &k1.value}}));
  if (!k2.ok) return r;
  const Derivs k3 = eval(metric, combine({{a31, &k1.value}, {a32, &k2.value}}));
  if (!k3.ok) return r;
  const Derivs k4 = eval(metric, combine({{a41, &k1.value}, {a42, &k2.value}, {a43, &k3.value}}));
  if (!k4.ok) return r;
  const Derivs k5 =
      eval(metric, combine({{a51, &k1.value}, {a52, &k2.value}, {a53, &k3.value}, {a54, &k4.value}}));
  if (!k5.ok) return r;
  const Derivs k6 = eval(
      metric, combine({{a61, &k1.value}, {a62, &k2.value}, {a63, &k3.value}, {a64, &k4.value}, {a65, &k5.value}}));
  if (!k6.ok) return r;
  r.y = combine({{b1, &k1.value}, {b3, &k3.value}, {b4, &k4.value}, {b5, &k5.value}, {b6, &k6.value}});
  const Derivs k7 = eval(metric, r.y);
  if (!k7.ok) return r;
  for (std::size_t i = 0; i < 4; ++i)
    r.err[i] = h * (e1 * k1.value[i] + e3 * k3.value[i] + e4 * k4.value[i] + e5 * k5.value[i] +
                    e6 * k6.value[i] + e7 * k7.value[i]);
  r.ok = true;
  return r;
}

double radius_of(const Y& y) { return std::hypot(y[0], y[1]); }

GeodesicState to_state(const Y& y) { return {{y[0], y[1]}, positive_mod(y[2], kTwoPi), y[3]}; }

}  // namespace

GeodesicPath integrate_geodesic(const ConformalMetric& metric, const BoundaryVector& entry,
                                const IntegrationOptions& opts) {
  if (classify(entry) != BoundaryClass::inward) throw DomainError("geodesic entry vector must point strictly inward");
  if (!(opts.tolerance > 0.0)) throw DomainError("integration tolerance must be positive");
  const double R = metric.radius();
  if (metric.singular_at_origin() && chord_clearance(entry, R) < metric.exclusion_radius())
    throw SingularityError("entry chord passes inside the singular exclusion radius");

  const double max_length = opts.max_length > 0.0 ? opts.max_length : 200.0 * R;
  // Local error target; global drift over a boundary-to-boundary trace stays below opts.tolerance.
  // The embedded estimate misses part of the error at spline knots, hence the extra factor.
  const double local_tol = (metric.smooth() ? 1e-2 : 1e-4) * opts.tolerance;
  const double event_tol = std::max(1e-3 * opts.tolerance, 1e-15) * R;
  const double max_step = 0.1 * R;

  GeodesicPath path;
  path.entry = entry;
  const Vec2 p0 = boundary_point(entry, R);
  Y y{p0.x, p0.y, boundary_direction(entry).angle(), 0.0};
  path.samples.push_back(to_state(y));

  double h = 1e-3 * R;
  for (std::size_t steps = 0; steps < opts.max_steps; ++steps) {
    const StepResult step = dopri_step(metric, y, h);
    double err = std::numeric_limits<double>::infinity();
    if (step.ok) {
      const double pos_scale = local_tol * std::max(std::min(radius_of(y), R), 1e-6 * R);
      const double len_scale = local_tol * std::max(1.0, std::abs(y[3]));
      err = std::max({std::abs(step.err[0]) / pos_scale, std::abs(step.err[1]) / pos_scale,
                      std::abs(step.err[2]) / local_tol, std::abs(step.err[3]) / len_scale});
    }
    if (!(err <= 1.0)) {
      const double factor = std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.25;
      h *= factor;
      if (h < 1e-18 * R) throw NumericalError("geodesic step size underflow");
      continue;
    }

    if (radius_of(step.y) >= R) {
      // Boundary crossing inside this step: bisect on the step length.
      double lo = 0.0;
      double hi = h;
      Y inside = y;
      while (hi - lo > event_tol) {
        const double mid = 0.5 * (lo + hi);
        const StepResult s = dopri_step(metric, y, mid);
        if (!s.ok) throw NumericalError("geodesic event localization failed");
        if (radius_of(s.y) <= R) {
          lo = mid;
          inside = s.y;
        } else {
          hi = mid;
        }
      }
      if (lo > 0.0) path.samples.push_back(to_state(inside));
      const Vec2 exit_pos = Vec2{inside[0], inside[1]} * (R / radius_of(inside));
      path.exit = to_boundary_vector(exit_pos, inside[2]);
      path.length = inside[3];
      return path;
    }

    y = step.y;
    path.samples.push_back(to_state(y));
    if (y[3] > max_length) {
      path.length = y[3];
      return path;  // trapped
    }
    const double grow = err > 0.0 ? std::min(5.0, 0.9 * std::pow(err, -0.2)) : 5.0;
    h = std::min(h * grow, max_step);
  }
  path.length = y[3];
  return path;
}

double clairaut(const ConformalMetric& metric, const GeodesicState& state) {
  if (!metric.is_radial()) throw DomainError("clairaut requires a radial metric");
  return metric.index(state.position) * cross(state.position, unit(state.direction));
}

double riemannian_length(const ConformalMetric& metric, std::span<const Vec2> polyline) {
  static constexpr std::array<double, 3> nodes{0.5 - 0.3872983346207417, 0.5, 0.5 + 0.3872983346207417};
  static constexpr std::array<double, 3> weights{5.0 / 18, 8.0 / 18, 5.0 / 18};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const Vec2 a = polyline[i];
    const Vec2 b = polyline[i + 1];
    const Vec2 d = b - a;
    const double len = d.norm();
    if (len == 0.0) continue;
    if (metric.singular_at_origin()) {
      const double t = std::clamp(-dot(a, d) / d.norm2(), 0.0, 1.0);
      if ((a + d * t).norm() <= 1e-12 * metric.radius())
        throw SingularityError("polyline passes through the singular origin");
    }
    double seg = 0.0;
    for (std::size_t q = 0; q < 3; ++q) seg += weights[q] * metric.index(a + d * nodes[q]);
    total += seg * len;
  }
  return total;
}

}  // namespace lens
