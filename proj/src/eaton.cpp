#include "lens/eaton.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "lens/errors.hpp"
#include "lens/parallel.hpp"

namespace lens {

double eaton_residual(double r, double n) {
  const double u = n * r;
  const double inv = 1.0 / u;
  return std::sqrt(n) - inv - std::sqrt(std::max(inv * inv - 1.0, 0.0));
}

double eaton_index(double r) {
  if (!(r > 0.0) || r > 1.0) throw DomainError("eaton_index: radius must lie in (0, 1]");
  // The residual increases strictly in n; n = 1 gives <= 0 and n = 1/r gives >= 0.
  double lo = 1.0;
  double hi = 1.0 / r;
  if (eaton_residual(r, lo) >= 0.0) return lo;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (eaton_residual(r, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return std::abs(eaton_residual(r, lo)) <= std::abs(eaton_residual(r, hi)) ? lo : hi;
}

double eaton_log_slope(double r, double n) {
  const double u = std::min(n * r, 1.0);
  return -2.0 / (2.0 + std::sqrt(1.0 - u * u));
}

double eaton_turning_radius(double impact) {
  if (!(impact > 0.0) || impact > 1.0) throw DomainError("eaton_turning_radius: impact must lie in (0, 1]");
  // On the index curve r = u^3 / (1 + sqrt(1 - u^2))^2 with u = n r.
  const double s = std::sqrt(1.0 - impact * impact);
  return impact * impact * impact / ((1.0 + s) * (1.0 + s));
}

EatonProfile::EatonProfile(double exclusion, std::size_t table_size, bool direct)
    : exclusion_(exclusion), floor_(0.5 * eaton_turning_radius(exclusion)), direct_(direct) {
  if (table_size < 2) throw DomainError("eaton table needs at least two radii");
  std::vector<double> x(table_size), y(table_size), m(table_size);
  const double lo = std::log(floor_);
  for (std::size_t i = 0; i < table_size; ++i) {
    const double lr = i + 1 == table_size ? 0.0 : lo * (1.0 - static_cast<double>(i) / (table_size - 1));
    const double r = std::exp(lr);
    const double n = i + 1 == table_size ? 1.0 : eaton_index(r);
    x[i] = lr;
    y[i] = std::log(n);
    m[i] = eaton_log_slope(r, n);
  }
  log_table_ = MonotoneCubic(std::move(x), std::move(y), std::move(m));
}

double EatonProfile::index(double rho) const {
  if (rho >= 1.0) return 1.0 / rho;
  if (direct_ || rho < floor_) return eaton_index(rho);
  return std::exp(log_table_(std::log(rho)));
}

double EatonProfile::log_derivative(double rho) const {
  if (rho >= 1.0) return -1.0 / rho;
  if (direct_ || rho < floor_) return eaton_log_slope(rho, eaton_index(rho)) / rho;
  return log_table_.derivative(std::log(rho)) / rho;
}

ConformalMetric make_eaton_metric(double radius, double exclusion, bool direct) {
  auto profile = std::make_shared<const EatonProfile>(exclusion, EatonProfile::kDefaultTableSize, direct);
  return ConformalMetric::radial(MetricKind::eaton, std::move(profile), radius, true, "eaton")
      .with_exclusion_radius(exclusion * radius);
}

BoundaryVector vacuum_exit(const BoundaryVector& entry) {
  // A chord leaving the tangent at angle a subtends a central angle 2a.
  return {positive_mod(entry.arc + entry.angle / kPi, 1.0), entry.angle, Side::outward};
}

InvisibilityReport invisibility_check(const ConformalMetric& metric, const std::vector<BoundaryVector>& entries,
                                      double tol, const IntegrationOptions& opts) {
  InvisibilityReport report;
  report.tolerance = tol;
  report.entries.resize(entries.size());
  const double R = metric.radius();
  parallel_for(entries.size(), [&](std::size_t i) {
    InvisibilityEntry& e = report.entries[i];
    e.entry = entries[i];
    const GeodesicPath path = integrate_geodesic(metric, entries[i], opts);
    if (path.trapped()) {
      e.trapped = true;
      return;
    }
    const BoundaryVector straight = vacuum_exit(entries[i]);
    const double heading_in = boundary_direction(entries[i]).angle();
    const double heading_out = boundary_direction(*path.exit).angle();
    e.direction_deviation = std::abs(wrap_pi(heading_out - heading_in));
    e.position_deviation = distance(boundary_point(*path.exit, R), boundary_point(straight, R));
  });
  for (const auto& e : report.entries) {
    if (e.trapped) {
      ++report.trapped_count;
      continue;
    }
    report.max_direction_deviation = std::max(report.max_direction_deviation, e.direction_deviation);
    report.max_position_deviation = std::max(report.max_position_deviation, e.position_deviation);
  }
  report.passed = report.trapped_count == 0 && report.max_direction_deviation < tol &&
                  report.max_position_deviation < tol;
  return report;
}

int loop_winding(const GeodesicPath& path) {
  if (path.samples.size() < 2) throw DomainError("loop_winding: path needs at least two samples");
  double total = 0.0;
  double prev = path.samples.front().position.angle();
  auto advance = [&](Vec2 p) {
    if (p.norm() == 0.0) throw DomainError("loop_winding: path passes through the origin");
    const double a = p.angle();
    total += wrap_pi(a - prev);
    prev = a;
  };
  for (std::size_t i = 1; i < path.samples.size(); ++i) advance(path.samples[i].position);
  advance(path.samples.front().position);  // closing chord
  const double turns = total / kTwoPi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.1) throw NumericalError("loop_winding: non-integral winding");
  return static_cast<int>(rounded);
}

GeodesicPath reversed(const GeodesicPath& path) {
  GeodesicPath out;
  out.samples.assign(path.samples.rbegin(), path.samples.rend());
  const double total = path.samples.empty() ? 0.0 : path.samples.back().arclength;
  for (auto& s : out.samples) {
    s.direction = positive_mod(s.direction + kPi, kTwoPi);
    s.arclength = total - s.arclength;
  }
  if (path.exit) {
    out.entry = reverse(*path.exit);
    out.exit = reverse(path.entry);
  }
  out.length = path.length;
  return out;
}

}  // namespace lens
