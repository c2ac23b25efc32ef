#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "lens/monotone_cubic.hpp"
#include "lens/vec2.hpp"

namespace lens {

enum class MetricKind { vacuum, eaton, radial_profile, general };

std::string to_string(MetricKind kind);

/// Rotationally symmetric refractive index n(rho) on the unit disk, rho = r / R.
class RadialProfile {
 public:
  virtual ~RadialProfile() = default;
  virtual double index(double rho) const = 0;
  /// d ln n / d rho.
  virtual double log_derivative(double rho) const = 0;
};

/// Profile interpolated through [rho, n] knots with a monotone cubic. When the
/// first knot sits at rho = 0 its slope is pinned to zero so that the index is
/// smooth through the origin.
class KnotProfile final : public RadialProfile {
 public:
  explicit KnotProfile(const std::vector<std::array<double, 2>>& knots);
  double index(double rho) const override;
  double log_derivative(double rho) const override;

 private:
  MonotoneCubic spline_;
};

/// A conformal metric g = n^2 g0 on the closed disk of radius R centred at the
/// origin. Immutable; copies share the underlying profile.
class ConformalMetric {
 public:
  using IndexField = std::function<double(Vec2)>;
  using GradientField = std::function<Vec2(Vec2)>;

  static ConformalMetric vacuum(double radius = 1.0);
  static ConformalMetric radial(MetricKind kind, std::shared_ptr<const RadialProfile> profile, double radius,
                                bool singular_at_origin, std::string id);
  static ConformalMetric radial_profile(const std::vector<std::array<double, 2>>& knots, double radius = 1.0);
  /// Arbitrary positive index field; gradient by central differences when omitted.
  static ConformalMetric general(IndexField index, GradientField gradient = {}, double radius = 1.0,
                                 std::string id = "general");

  MetricKind kind() const { return kind_; }
  double radius() const { return radius_; }
  bool singular_at_origin() const { return singular_; }
  bool is_radial() const { return kind_ != MetricKind::general; }
  /// False when the index is only C1 (spline profiles): the force field then has
  /// kinks at the knots and the integrator tightens its local error target.
  bool smooth() const { return smooth_; }
  const std::string& id() const { return id_; }

  /// Chords passing closer than this to the origin are rejected for singular metrics.
  double exclusion_radius() const { return exclusion_; }
  ConformalMetric with_exclusion_radius(double r) const;

  double index(Vec2 p) const;
  Vec2 gradient(Vec2 p) const;
  /// Gradient of ln n; finite wherever n is.
  Vec2 log_gradient(Vec2 p) const;

  /// Radial kinds only; r in physical units.
  double radial_index(double r) const;
  double radial_log_derivative(double r) const;

 private:
  void check_pole(Vec2 p) const;

  MetricKind kind_ = MetricKind::vacuum;
  double radius_ = 1.0;
  bool singular_ = false;
  bool smooth_ = true;
  double exclusion_ = 0.0;
  std::string id_ = "vacuum";
  std::shared_ptr<const RadialProfile> profile_;
  IndexField field_;
  GradientField field_gradient_;
};

}  // namespace lens
