#include "lens/metric.hpp"

#include <cmath>

#include "lens/errors.hpp"

namespace lens {

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::vacuum: return "vacuum";
    case MetricKind::eaton: return "eaton";
    case MetricKind::radial_profile: return "radial-profile";
    case MetricKind::general: return "general";
  }
  return "unknown";
}

namespace {

std::vector<double> column(const std::vector<std::array<double, 2>>& knots, std::size_t c) {
  std::vector<double> out;
  out.reserve(knots.size());
  for (const auto& k : knots) out.push_back(k[c]);
  return out;
}

}  // namespace

KnotProfile::KnotProfile(const std::vector<std::array<double, 2>>& knots)
    : spline_(column(knots, 0), column(knots, 1)) {
  for (const auto& k : knots)
    if (!(k[1] > 0.0)) throw DomainError("radial profile: index must be positive at every knot");
  if (knots.front()[0] < 0.0) throw DomainError("radial profile: negative radius knot");
  if (knots.front()[0] == 0.0) spline_.set_front_slope(0.0);
}

double KnotProfile::index(double rho) const { return spline_(rho); }

double KnotProfile::log_derivative(double rho) const { return spline_.derivative(rho) / spline_(rho); }

ConformalMetric ConformalMetric::vacuum(double radius) {
  if (!(radius > 0.0)) throw DomainError("metric radius must be positive");
  ConformalMetric m;
  m.radius_ = radius;
  return m;
}

ConformalMetric ConformalMetric::radial(MetricKind kind, std::shared_ptr<const RadialProfile> profile, double radius,
                                        bool singular_at_origin, std::string id) {
  if (!(radius > 0.0)) throw DomainError("metric radius must be positive");
  if (!profile) throw DomainError("radial metric requires a profile");
  ConformalMetric m;
  m.kind_ = kind;
  m.radius_ = radius;
  m.singular_ = singular_at_origin;
  m.exclusion_ = singular_at_origin ? 1e-3 * radius : 0.0;
  m.profile_ = std::move(profile);
  m.id_ = std::move(id);
  return m;
}

ConformalMetric ConformalMetric::radial_profile(const std::vector<std::array<double, 2>>& knots, double radius) {
  ConformalMetric m =
      radial(MetricKind::radial_profile, std::make_shared<KnotProfile>(knots), radius, false, "radial-profile");
  m.smooth_ = false;
  return m;
}

ConformalMetric ConformalMetric::general(IndexField index, GradientField gradient, double radius, std::string id) {
  if (!(radius > 0.0)) throw DomainError("metric radius must be positive");
  if (!index) throw DomainError("general metric requires an index field");
  ConformalMetric m;
  m.kind_ = MetricKind::general;
  m.radius_ = radius;
  m.field_ = std::move(index);
  m.field_gradient_ = std::move(gradient);
  m.id_ = std::move(id);
  return m;
}

ConformalMetric ConformalMetric::with_exclusion_radius(double r) const {
  if (r < 0.0) throw DomainError("exclusion radius must be non-negative");
  ConformalMetric m = *this;
  m.exclusion_ = r;
  return m;
}

void ConformalMetric::check_pole(Vec2 p) const {
  if (singular_ && p.norm() <= 1e-14 * radius_) throw SingularityError("metric evaluated at its pole at the origin");
}

double ConformalMetric::index(Vec2 p) const {
  check_pole(p);
  switch (kind_) {
    case MetricKind::vacuum: return 1.0;
    case MetricKind::general: return field_(p);
    default: return profile_->index(p.norm() / radius_);
  }
}

Vec2 ConformalMetric::gradient(Vec2 p) const { return log_gradient(p) * index(p); }

Vec2 ConformalMetric::log_gradient(Vec2 p) const {
  check_pole(p);
  switch (kind_) {
    case MetricKind::vacuum: return {};
    case MetricKind::general: {
      const double n = field_(p);
      if (field_gradient_) return field_gradient_(p) / n;
      const double h = 1e-6 * radius_;
      const Vec2 g{(field_({p.x + h, p.y}) - field_({p.x - h, p.y})) / (2 * h),
                   (field_({p.x, p.y + h}) - field_({p.x, p.y - h})) / (2 * h)};
      return g / n;
    }
    default: {
      const double r = p.norm();
      if (r == 0.0) return {};
      const double k = profile_->log_derivative(r / radius_) / radius_;
      return p * (k / r);
    }
  }
}

double ConformalMetric::radial_index(double r) const {
  if (!is_radial()) throw DomainError("radial_index on a non-radial metric");
  return index({r, 0.0});
}

double ConformalMetric::radial_log_derivative(double r) const {
  if (!is_radial()) throw DomainError("radial_log_derivative on a non-radial metric");
  return log_gradient({r, 0.0}).x;
}

}  // namespace lens
