#pragma once

#include <optional>
#include <span>
#include <vector>

namespace lens {

/// Piecewise cubic Hermite interpolant that preserves the monotonicity of its
/// knot data (Fritsch-Carlson slope limiting). Outside the knot range it
/// extends linearly with the end slope, so the result is C1 everywhere.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;

  /// Slopes estimated from the data (three-point formula, then limited).
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  /// Caller-supplied slopes, still limited so each interval stays monotone.
  MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes);

  double operator()(double x) const;
  double derivative(double x) const;

  double front() const { return x_.front(); }
  double back() const { return x_.back(); }
  std::span<const double> knots() const { return x_; }
  std::span<const double> values() const { return y_; }

  /// Pins the slope at the first knot (e.g. zero for an even extension through r = 0).
  void set_front_slope(double slope);

 private:
  void validate() const;
  void limit_slopes();
  std::size_t interval(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;
};

}  // namespace lens
