#include "lens/monotone_cubic.hpp"

#include <algorithm>
#include <cmath>

#include "lens/errors.hpp"

namespace lens {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  validate();
  const std::size_t n = x_.size();
  m_.assign(n, 0.0);
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
  if (n == 2) {
    m_[0] = m_[1] = delta[0];
    return;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) continue;
    // Weighted harmonic mean (Fritsch-Butland), monotone by construction.
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    const double w1 = 2.0 * h1 + h0;
    const double w2 = h1 + 2.0 * h0;
    m_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(m) > std::abs(3.0 * d0)) return 3.0 * d0;
    return m;
  };
  m_[0] = end_slope(x_[1] - x_[0], x_[2] - x_[1], delta[0], delta[1]);
  m_[n - 1] = end_slope(x_[n - 1] - x_[n - 2], x_[n - 2] - x_[n - 3], delta[n - 2], delta[n - 3]);
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y, std::vector<double> slopes)
    : x_(std::move(x)), y_(std::move(y)), m_(std::move(slopes)) {
  validate();
  if (m_.size() != x_.size()) throw DomainError("monotone cubic: slope count mismatch");
  limit_slopes();
}

void MonotoneCubic::validate() const {
  if (x_.size() < 2 || x_.size() != y_.size())
    throw DomainError("monotone cubic: need at least two (x, y) knots of equal count");
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i + 1] > x_[i])) throw DomainError("monotone cubic: knots must be strictly increasing");
}

void MonotoneCubic::limit_slopes() {
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    const double d = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    if (d == 0.0) {
      m_[i] = m_[i + 1] = 0.0;
      continue;
    }
    if (m_[i] * d < 0.0) m_[i] = 0.0;
    if (m_[i + 1] * d < 0.0) m_[i + 1] = 0.0;
    const double a = m_[i] / d;
    const double b = m_[i + 1] / d;
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m_[i] = tau * a * d;
      m_[i + 1] = tau * b * d;
    }
  }
}

void MonotoneCubic::set_front_slope(double slope) {
  m_.front() = slope;
  limit_slopes();
}

std::size_t MonotoneCubic::interval(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
  if (x <= x_.front()) return y_.front() + m_.front() * (x - x_.front());
  if (x >= x_.back()) return y_.back() + m_.back() * (x - x_.back());
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y_[i] + (t3 - 2 * t2 + t) * h * m_[i] + (-2 * t3 + 3 * t2) * y_[i + 1] +
         (t3 - t2) * h * m_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  if (x <= x_.front()) return m_.front();
  if (x >= x_.back()) return m_.back();
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  return ((6 * t2 - 6 * t) * y_[i] + (-6 * t2 + 6 * t) * y_[i + 1]) / h + (3 * t2 - 4 * t + 1) * m_[i] +
         (3 * t2 - 2 * t) * m_[i + 1];
}

}  // namespace lens
