#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lens/vec2.hpp"

namespace lens {

/// Smooth plane curve on t in [0, 1]. Closed curves are 1-periodic.
class PlaneCurve {
 public:
  using Field = std::function<Vec2(double)>;

  PlaneCurve(std::string name, Field position, Field velocity, bool closed = true);

  const std::string& name() const { return name_; }
  bool closed() const { return closed_; }
  Vec2 position(double t) const { return position_(t); }
  /// d position / dt.
  Vec2 velocity(double t) const { return velocity_(t); }

  /// n samples at t = i/n (closed) or t = i/(n-1) (open).
  std::vector<double> parameters(std::size_t n) const;
  std::vector<Vec2> sample_positions(std::size_t n) const;
  std::vector<Vec2> sample_velocities(std::size_t n) const;

  /// Adds a displacement field to the curve.
  PlaneCurve perturbed(std::string name, Field offset, Field offset_velocity) const;

 private:
  std::string name_;
  Field position_;
  Field velocity_;
  bool closed_;
};

PlaneCurve circle_curve(double radius = 0.8);
/// Lemniscate of Bernoulli with half-width `a`; double point at the origin at t = 1/4, 3/4.
PlaneCurve lemniscate_curve(double a = 0.9);
/// k-petal rose r = cos(k phi) (k odd) or r = cos(k phi / 2) (k divisible by 4).
PlaneCurve rose_curve(int petals, double scale = 0.9);
/// Open straight segment from a to b.
PlaneCurve segment_curve(Vec2 a = {-0.5, 0.0}, Vec2 b = {0.5, 0.0});

/// x(t), y(t) as finite Fourier series: coefficient k (k >= 1) pairs with cos/sin(2 pi k t).
struct TrigCoefficients {
  std::vector<double> x_cos, x_sin, y_cos, y_sin;
};
PlaneCurve trig_curve(std::string name, TrigCoefficients coeffs);

/// Closed curve through uniformly spaced samples, as a periodic cubic spline.
PlaneCurve spline_curve(std::string name, std::vector<Vec2> points);

/// Reads rows "t,x,y" (t uniform in [0, 1)); blank lines, '#' comments and a header row are skipped.
PlaneCurve load_curve_csv(const std::string& path);

/// circle | lemniscate | figure-eight | rose-<k> | segment, or a CSV path.
PlaneCurve named_curve(const std::string& spec);

/// Same curve traversed backwards.
PlaneCurve reversed(const PlaneCurve& curve);

}  // namespace lens
