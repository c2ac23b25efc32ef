#include "lens/curve.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "lens/errors.hpp"

namespace lens {

PlaneCurve::PlaneCurve(std::string name, Field position, Field velocity, bool closed)
    : name_(std::move(name)), position_(std::move(position)), velocity_(std::move(velocity)), closed_(closed) {}

std::vector<double> PlaneCurve::parameters(std::size_t n) const {
  std::vector<double> t(n);
  const double denom = closed_ ? static_cast<double>(n) : static_cast<double>(n > 1 ? n - 1 : 1);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) / denom;
  return t;
}

std::vector<Vec2> PlaneCurve::sample_positions(std::size_t n) const {
  std::vector<Vec2> out;
  out.reserve(n);
  for (double t : parameters(n)) out.push_back(position(t));
  return out;
}

std::vector<Vec2> PlaneCurve::sample_velocities(std::size_t n) const {
  std::vector<Vec2> out;
  out.reserve(n);
  for (double t : parameters(n)) out.push_back(velocity(t));
  return out;
}

PlaneCurve PlaneCurve::perturbed(std::string name, Field offset, Field offset_velocity) const {
  auto pos = position_;
  auto vel = velocity_;
  return PlaneCurve(
      std::move(name), [pos, offset](double t) { return pos(t) + offset(t); },
      [vel, offset_velocity](double t) { return vel(t) + offset_velocity(t); }, closed_);
}

PlaneCurve circle_curve(double radius) {
  return PlaneCurve(
      "circle", [radius](double t) { return unit(kTwoPi * t) * radius; },
      [radius](double t) {
        const Vec2 u = unit(kTwoPi * t);
        return Vec2{-u.y, u.x} * (kTwoPi * radius);
      });
}

PlaneCurve lemniscate_curve(double a) {
  return PlaneCurve(
      "lemniscate",
      [a](double t) {
        const double s = std::sin(kTwoPi * t), c = std::cos(kTwoPi * t);
        const double d = 1.0 + s * s;
        return Vec2{a * c / d, a * s * c / d};
      },
      [a](double t) {
        const double s = std::sin(kTwoPi * t), c = std::cos(kTwoPi * t);
        const double d = 1.0 + s * s;
        const double dd = 2.0 * s * c;  // d/dtau of (1 + sin^2)
        const double x = (-s * d - c * dd) / (d * d);
        const double y = ((c * c - s * s) * d - s * c * dd) / (d * d);
        return Vec2{a * x, a * y} * kTwoPi;
      });
}

PlaneCurve rose_curve(int petals, double scale) {
  double freq = 0.0;
  double span = 0.0;
  if (petals >= 1 && petals % 2 == 1) {
    freq = petals;
    span = kPi;
  } else if (petals >= 4 && petals % 4 == 0) {
    freq = petals / 2;
    span = kTwoPi;
  } else {
    throw DomainError("rose: petal count must be odd or a multiple of 4");
  }
  return PlaneCurve(
      "rose-" + std::to_string(petals),
      [=](double t) {
        const double phi = span * t;
        return unit(phi) * (scale * std::cos(freq * phi));
      },
      [=](double t) {
        const double phi = span * t;
        const double r = scale * std::cos(freq * phi);
        const double dr = -scale * freq * std::sin(freq * phi);
        const Vec2 u = unit(phi);
        return (u * dr + Vec2{-u.y, u.x} * r) * span;
      });
}

PlaneCurve segment_curve(Vec2 a, Vec2 b) {
  return PlaneCurve(
      "segment", [a, b](double t) { return a + (b - a) * t; }, [a, b](double) { return b - a; }, false);
}

PlaneCurve trig_curve(std::string name, TrigCoefficients coeffs) {
  auto c = std::make_shared<const TrigCoefficients>(std::move(coeffs));
  auto series = [](const std::vector<double>& cs, const std::vector<double>& sn, double t, bool derivative) {
    double v = 0.0;
    const std::size_t n = std::max(cs.size(), sn.size());
    for (std::size_t k = 1; k <= n; ++k) {
      const double w = kTwoPi * static_cast<double>(k);
      const double a = k - 1 < cs.size() ? cs[k - 1] : 0.0;
      const double b = k - 1 < sn.size() ? sn[k - 1] : 0.0;
      if (derivative)
        v += w * (-a * std::sin(w * t) + b * std::cos(w * t));
      else
        v += a * std::cos(w * t) + b * std::sin(w * t);
    }
    return v;
  };
  return PlaneCurve(
      std::move(name),
      [c, series](double t) { return Vec2{series(c->x_cos, c->x_sin, t, false), series(c->y_cos, c->y_sin, t, false)}; },
      [c, series](double t) { return Vec2{series(c->x_cos, c->x_sin, t, true), series(c->y_cos, c->y_sin, t, true)}; });
}

namespace {

// Second derivatives (w.r.t. the knot index) of the periodic interpolating cubic:
// M[i-1] + 4 M[i] + M[i+1] = 6 (p[i+1] - 2 p[i] + p[i-1]), solved with the
// cyclic Thomas algorithm (Sherman-Morrison correction).
std::vector<double> periodic_second_derivatives(const std::vector<double>& p) {
  const std::size_t n = p.size();
  std::vector<double> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = 6.0 * (p[(i + 1) % n] - 2.0 * p[i] + p[(i + n - 1) % n]);
  const double gamma = -4.0;
  std::vector<double> diag(n, 4.0);
  diag[0] -= gamma;
  diag[n - 1] -= 1.0 / gamma;
  auto solve = [&](std::vector<double> d) {
    std::vector<double> c(n), b = diag;
    c[0] = 1.0 / b[0];
    d[0] /= b[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = 1.0 / (b[i] - c[i - 1]);
      c[i] = 1.0 * m;
      d[i] = (d[i] - d[i - 1]) * m;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
  };
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = 1.0;
  const std::vector<double> x = solve(rhs);
  const std::vector<double> z = solve(u);
  const double fact = (x[0] + x[n - 1] / gamma) / (1.0 + z[0] + z[n - 1] / gamma);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - fact * z[i];
  return out;
}

struct PeriodicSpline {
  std::vector<Vec2> p;
  std::vector<double> mx, my;

  explicit PeriodicSpline(std::vector<Vec2> pts) : p(std::move(pts)) {
    std::vector<double> xs, ys;
    for (const auto& q : p) {
      xs.push_back(q.x);
      ys.push_back(q.y);
    }
    mx = periodic_second_derivatives(xs);
    my = periodic_second_derivatives(ys);
  }

  // u in knot-index units.
  std::pair<Vec2, Vec2> eval(double t) const {
    const std::size_t n = p.size();
    const double u = positive_mod(t, 1.0) * static_cast<double>(n);
    std::size_t i = static_cast<std::size_t>(u);
    if (i >= n) i = n - 1;
    const std::size_t j = (i + 1) % n;
    const double s = u - static_cast<double>(i);
    const double a = 1.0 - s;
    auto component = [&](double y0, double y1, double m0, double m1) {
      const double val = a * y0 + s * y1 + ((a * a * a - a) * m0 + (s * s * s - s) * m1) / 6.0;
      const double der = y1 - y0 + ((1.0 - 3.0 * a * a) * m0 + (3.0 * s * s - 1.0) * m1) / 6.0;
      return std::pair{val, der * static_cast<double>(n)};
    };
    const auto [x, dx] = component(p[i].x, p[j].x, mx[i], mx[j]);
    const auto [y, dy] = component(p[i].y, p[j].y, my[i], my[j]);
    return {{x, y}, {dx, dy}};
  }
};

}  // namespace

PlaneCurve spline_curve(std::string name, std::vector<Vec2> points) {
  if (points.size() >= 2 && points.front() == points.back()) points.pop_back();
  if (points.size() < 4) throw DomainError("spline curve: need at least four distinct samples");
  auto spline = std::make_shared<const PeriodicSpline>(std::move(points));
  return PlaneCurve(
      std::move(name), [spline](double t) { return spline->eval(t).first; },
      [spline](double t) { return spline->eval(t).second; });
}

PlaneCurve load_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open curve file '" + path + "'");
  std::vector<std::pair<double, Vec2>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<double> vals;
    bool numeric = true;
    while (std::getline(ss, field, ',')) {
      const auto b = field.find_first_not_of(" \t\r");
      const auto e = field.find_last_not_of(" \t\r");
      if (b == std::string::npos) {
        numeric = false;
        break;
      }
      std::string_view v(field.data() + b, e - b + 1);
      double d = 0.0;
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), d);
      if (ec != std::errc{} || ptr != v.data() + v.size()) {
        numeric = false;
        break;
      }
      vals.push_back(d);
    }
    if (!numeric || vals.size() != 3) {
      if (rows.empty() && lineno == 1) continue;  // header
      throw DomainError(path + ":" + std::to_string(lineno) + ": expected numeric row t,x,y");
    }
    rows.push_back({vals[0], {vals[1], vals[2]}});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec2> pts;
  for (const auto& [t, p] : rows)
    if (t < 1.0) pts.push_back(p);
  return spline_curve(std::filesystem::path(path).stem().string(), std::move(pts));
}

PlaneCurve named_curve(const std::string& spec) {
  if (spec == "circle") return circle_curve();
  if (spec == "lemniscate" || spec == "figure-eight") return lemniscate_curve();
  if (spec == "segment") return segment_curve();
  if (spec.rfind("rose-", 0) == 0) {
    int k = 0;
    const auto [ptr, ec] = std::from_chars(spec.data() + 5, spec.data() + spec.size(), k);
    if (ec != std::errc{} || ptr != spec.data() + spec.size()) throw DomainError("bad rose spec '" + spec + "'");
    return rose_curve(k);
  }
  if (std::filesystem::exists(spec)) return load_curve_csv(spec);
  throw DomainError("unknown curve '" + spec + "'");
}

PlaneCurve reversed(const PlaneCurve& curve) {
  auto c = std::make_shared<const PlaneCurve>(curve);
  const double end = curve.closed() ? 1.0 : 1.0;
  return PlaneCurve(
      curve.name() + "-reversed", [c, end](double t) { return c->position(end - t); },
      [c, end](double t) { return -c->velocity(end - t); }, curve.closed());
}

}  // namespace lens
