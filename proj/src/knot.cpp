#include "lens/knot.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "lens/errors.hpp"

namespace lens {

ProjKnot::ProjKnot(std::string name, PlaneCurve base, LiftFn lift)
    : name_(std::move(name)), base_(std::move(base)), lift_(std::move(lift)) {
  if (!base_.closed()) throw DomainError("knot '" + name_ + "': base curve must be closed");
  total_ = lift_(1.0) - lift_(0.0);
  const double w = total_ / kPi;
  winding_ = static_cast<int>(std::lround(w));
  if (std::abs(w - winding_) > 1e-6)
    throw NumericalError("knot '" + name_ + "': lift does not close up (rotation / pi = " + std::to_string(w) + ")");
}

ProjKnot ProjKnot::tangent_lift(const PlaneCurve& curve, std::size_t table) {
  if (!curve.closed()) throw DomainError("tangent lift: curve '" + curve.name() + "' is not closed");
  auto headings = std::make_shared<std::vector<double>>(table + 1);
  auto& h = *headings;
  for (std::size_t i = 0; i <= table; ++i) {
    const Vec2 v = curve.velocity(static_cast<double>(i) / static_cast<double>(table));
    if (v.norm2() == 0.0) throw ImmersionError("curve '" + curve.name() + "' has zero speed");
    const double a = v.angle();
    if (i == 0) {
      h[i] = a;
      continue;
    }
    const double step = wrap_pi(a - h[i - 1]);
    if (std::abs(step) >= kPi / 2) throw ImmersionError("curve '" + curve.name() + "' turns too fast for the lift table");
    h[i] = h[i - 1] + step;
  }
  const PlaneCurve c = curve;
  ProjKnot k(curve.name(), curve, [c, headings, table](double t) {
    const auto& hh = *headings;
    const double x = std::clamp(t, 0.0, 1.0) * static_cast<double>(table);
    const auto i = static_cast<std::size_t>(std::lround(x));
    return hh[i] + wrap_pi(c.velocity(t).angle() - hh[i]);
  });
  k.tangent_ = true;
  return k;
}

double ProjKnot::lift(double t) const {
  const double k = std::floor(t);
  return lift_(t - k) + k * total_;
}

ProjCurve ProjKnot::sample(std::size_t n) const {
  ProjCurve out;
  out.closed = true;
  out.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.samples.push_back(point(static_cast<double>(i) / static_cast<double>(n)));
  return out;
}

namespace {

double circular_gap(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

double sin_between(Vec2 a, Vec2 b) { return std::abs(cross(a, b)) / (a.norm() * b.norm()); }

struct Segment {
  double xmin, xmax, ymin, ymax;
  std::size_t index;
};

}  // namespace

std::vector<Crossing> find_crossings(const PlaneCurve& curve, const CrossingOptions& opts) {
  if (!curve.closed()) throw DomainError("find_crossings: curve '" + curve.name() + "' is not closed");
  const std::size_t n = opts.samples;
  if (n < 8) throw DomainError("find_crossings: need at least 8 samples");
  const auto pts = curve.sample_positions(n);
  double scale = 0.0;
  for (const auto& p : pts) scale = std::max(scale, p.norm());
  scale = std::max(scale, 1e-300);

  std::vector<Segment> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i], b = pts[(i + 1) % n];
    segs[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y), i};
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.xmin < b.xmin; });

  std::vector<std::pair<double, double>> candidates;
  std::vector<const Segment*> active;
  for (const auto& s : segs) {
    std::erase_if(active, [&](const Segment* a) { return a->xmax < s.xmin; });
    for (const Segment* a : active) {
      if (a->ymax < s.ymin || s.ymax < a->ymin) continue;
      const std::size_t i = a->index, j = s.index;
      if ((i + 1) % n == j || (j + 1) % n == i) continue;
      const Vec2 p = pts[i], r = pts[(i + 1) % n] - p;
      const Vec2 q = pts[j], w = pts[(j + 1) % n] - q;
      const double denom = cross(r, w);
      if (denom == 0.0) continue;
      const double u = cross(q - p, w) / denom;
      const double v = cross(q - p, r) / denom;
      if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) continue;
      candidates.emplace_back((static_cast<double>(i) + u) / static_cast<double>(n),
                              (static_cast<double>(j) + v) / static_cast<double>(n));
    }
    active.push_back(&s);
  }

  std::vector<Crossing> out;
  const double max_step = 1.0 / static_cast<double>(n);
  for (auto [l, lp] : candidates) {
    Vec2 f = curve.position(l) - curve.position(lp);
    for (int it = 0; it < 60 && f.norm() > 1e-15 * scale; ++it) {
      const Vec2 v1 = curve.velocity(l), v2 = -curve.velocity(lp);
      const double det = cross(v1, v2);
      if (det == 0.0) break;
      double dl = cross(-f, v2) / det;
      double dlp = cross(v1, -f) / det;
      const double m = std::max(std::abs(dl), std::abs(dlp));
      if (m > max_step) {
        dl *= max_step / m;
        dlp *= max_step / m;
      }
      l = ProjKnot::wrap01(l + dl);
      lp = ProjKnot::wrap01(lp + dlp);
      f = curve.position(l) - curve.position(lp);
      if (m < 1e-16) break;
    }
    if (circular_gap(l, lp) < 1e-6) continue;
    if (f.norm() > opts.spatial_tol)
      throw NumericalError("crossing refinement did not converge on '" + curve.name() + "' (residual " +
                           std::to_string(f.norm()) + ")");
    const Vec2 v1 = curve.velocity(l), v2 = curve.velocity(lp);
    if (sin_between(v1, v2) < opts.angular_tol)
      throw TangencyError("self-tangency of '" + curve.name() + "' at l = " + std::to_string(l) +
                          ", l' = " + std::to_string(lp));
    if (l > lp) std::swap(l, lp);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Crossing& c) {
      return circular_gap(c.l, l) < 1e-7 && circular_gap(c.l_prime, lp) < 1e-7;
    });
    if (dup) continue;
    Crossing c;
    c.l = l;
    c.l_prime = lp;
    c.point = (curve.position(l) + curve.position(lp)) * 0.5;
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
    return a.l != b.l ? a.l < b.l : a.l_prime < b.l_prime;
  });
  return out;
}

int crossing_sign(Vec2 beta_l, Vec2 beta_lp, Vec2 velocity_l, Vec2 velocity_lp, double angular_tol) {
  if (sin_between(beta_l, beta_lp) < angular_tol) throw TangencyError("crossing sign: lift vectors are parallel");
  if (sin_between(velocity_l, velocity_lp) < angular_tol) throw TangencyError("crossing sign: velocities are parallel");
  const double a = cross(beta_l, beta_lp);
  const double b = cross(velocity_l, velocity_lp);
  return (a > 0) == (b > 0) ? 1 : -1;
}

int crossing_sign(const Crossing& c, const ProjKnot& knot, double angular_tol) {
  return crossing_sign(knot.lift_vector(c.l), knot.lift_vector(c.l_prime), knot.velocity(c.l),
                       knot.velocity(c.l_prime), angular_tol);
}

int smoothed_loop_type(double arc_rotation) {
  const double v = std::abs(arc_rotation - wrap_pi(arc_rotation)) / kPi;
  const double r = std::round(v);
  if (std::abs(v - r) > 0.05) throw NumericalError("smoothed loop type is not integral: " + std::to_string(v));
  return static_cast<int>(r);
}

int crossing_type(const Crossing& c, const ProjKnot& knot, Smoothing smoothing) {
  // the pair is unordered: the first arc always starts at the smaller parameter
  double a = ProjKnot::wrap01(c.l), b = ProjKnot::wrap01(c.l_prime);
  if (b < a) std::swap(a, b);
  if (smoothing == Smoothing::second_arc) std::swap(a, b);
  if (b < a) b += 1.0;
  return smoothed_loop_type(knot.lift(b) - knot.lift(a));
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::non_contractible: return "non_contractible";
    case CertificateKind::nonzero_invariant: return "nonzero_invariant";
    case CertificateKind::none: return "none";
  }
  return "?";
}

std::string to_string(SingularityKind kind) {
  switch (kind) {
    case SingularityKind::cusp: return "cusp";
    case SingularityKind::self_tangency: return "self_tangency";
    case SingularityKind::transverse: return "transverse";
  }
  return "?";
}

InvariantTable w_invariant(const std::vector<Crossing>& filled) {
  InvariantTable table;
  for (const auto& c : filled) {
    if (c.type < 0 || c.sign == 0) throw DomainError("w_invariant: crossing sign/type not filled");
    if (c.type == 0) continue;
    table[c.type] += c.sign;
  }
  std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
  return table;
}

Certificate certify_nontrivial(const ProjKnot& knot, const std::vector<Crossing>& filled) {
  Certificate cert;
  cert.line_winding = knot.line_winding();
  if (!knot.contractible()) {
    cert.kind = CertificateKind::non_contractible;
    return cert;
  }
  if (filled.empty()) return cert;
  const auto first = std::min_element(filled.begin(), filled.end(), [](const Crossing& a, const Crossing& b) {
    return a.l_prime != b.l_prime ? a.l_prime < b.l_prime : a.l < b.l;
  });
  cert.first_return = *first;
  const InvariantTable table = w_invariant(filled);
  if (first->type != 0) {
    if (auto it = table.find(first->type); it != table.end()) {
      cert.kind = CertificateKind::nonzero_invariant;
      cert.type = it->first;
      cert.value = it->second;
      return cert;
    }
  }
  if (!table.empty()) {
    cert.kind = CertificateKind::nonzero_invariant;
    cert.type = table.begin()->first;
    cert.value = table.begin()->second;
  }
  return cert;
}

InvariantResult analyze_knot(const ProjKnot& knot, const CrossingOptions& opts) {
  InvariantResult res;
  res.curve = knot.name();
  res.line_winding = knot.line_winding();
  res.contractible = knot.contractible();
  if (knot.is_tangent_lift()) {
    if (res.line_winding % 2 != 0) throw NumericalError("tangent lift with odd line winding");
    res.theta_winding = res.line_winding / 2;
  }
  res.crossings = find_crossings(knot, opts);
  for (auto& c : res.crossings) {
    c.sign = crossing_sign(c, knot, opts.angular_tol);
    c.type = crossing_type(c, knot);
  }
  if (res.contractible) res.table = w_invariant(res.crossings);
  res.certificate = certify_nontrivial(knot, res.crossings);
  return res;
}

SingularityReport singularity_classify(std::span<const ProjPoint> vertices, std::size_t i, std::size_t j, double tol,
                                       double angular_tol) {
  const std::size_t n = vertices.size();
  if (n < 3 || i >= n || j >= n) throw DomainError("singularity_classify: index out of range");
  if (j == i || j == (i + n - 1) % n) throw DomainError("singularity_classify: edge is incident to the vertex");
  const Vec2 a = vertices[j].base, b = vertices[(j + 1) % n].base;
  const Vec2 e = b - a;
  const Vec2 p = vertices[i].base;
  const double len2 = e.norm2();
  if (len2 == 0.0) throw DomainError("singularity_classify: degenerate edge");
  const double s = std::clamp(dot(p - a, e) / len2, 0.0, 1.0);
  if (distance(p, a + e * s) > tol) throw DomainError("singularity_classify: vertex is not on the edge");

  const Vec2 prev = vertices[(i + n - 1) % n].base, next = vertices[(i + 1) % n].base;
  SingularityReport rep;
  rep.vertex = i;
  rep.edge = j;
  const Vec2 in = p - prev, out = next - p;
  auto tangent = [&](Vec2 d) { return d.norm2() == 0.0 || sin_between(d, e) < angular_tol; };
  if (tangent(in) || tangent(out)) {
    rep.kind = SingularityKind::cusp;
    return rep;
  }
  const double s1 = cross(e, prev - a), s2 = cross(e, next - a);
  rep.kind = (s1 > 0) == (s2 > 0) ? SingularityKind::self_tangency : SingularityKind::transverse;
  return rep;
}

ProjKnot glued_tail_knot() {
  constexpr double c = 0.5, d = 1.0, u0 = 2.6, scale = 0.5;
  const double span = 2.0 * u0;
  auto arc_pos = [=](double u) { return Vec2{c * u - d * std::sin(u), -d * std::cos(u)} * scale; };
  auto arc_heading = [=](double u) {
    if (u == 0.0) return -kPi;
    const double a = std::atan2(d * std::sin(u), c - d * std::cos(u));
    return u > 0.0 ? a - kTwoPi : a;
  };
  const Vec2 end = arc_pos(u0);
  const double radius = end.x;
  const Vec2 centre{0.0, end.y};
  const double th_start = arc_heading(-u0), th_end = arc_heading(u0);
  PlaneCurve base(
      "glued-tail",
      [=](double t) {
        if (t <= 0.5) return arc_pos(-u0 + span * 2.0 * t);
        return centre + unit(kTwoPi * (t - 0.5)) * radius;
      },
      [=](double t) {
        if (t <= 0.5) {
          const double u = -u0 + span * 2.0 * t;
          return Vec2{c - d * std::cos(u), d * std::sin(u)} * (scale * span * 2.0);
        }
        const Vec2 r = unit(kTwoPi * (t - 0.5));
        return Vec2{-r.y, r.x} * (radius * kTwoPi);
      });
  return ProjKnot("glued-tail", base, [=](double t) {
    if (t <= 0.5) return arc_heading(-u0 + span * 2.0 * t);
    return th_end + (t - 0.5) * 2.0 * (th_start - th_end);
  });
}

ProjKnot finger_move_knot(double depth) {
  constexpr double centre = 0.125, sigma = 0.02;
  const PlaneCurve lem = lemniscate_curve();
  auto lines = std::make_shared<const ProjKnot>(ProjKnot::tangent_lift(lem));
  auto bump = [=](double t) {
    const double x = std::remainder(t - centre, 1.0);
    return std::pair{std::exp(-0.5 * x * x / (sigma * sigma)), x};
  };
  PlaneCurve base = lem.perturbed(
      "finger",
      [=](double t) { return Vec2{0.0, -depth * bump(t).first}; },
      [=](double t) {
        const auto [g, x] = bump(t);
        return Vec2{0.0, depth * g * x / (sigma * sigma)};
      });
  return ProjKnot("finger-" + std::to_string(depth), base, [lines](double t) { return lines->lift(t); });
}

ProjKnot kink_move_knot(double amount) {
  constexpr double centre = 0.04, half = 0.02, size = 0.05, twist = 0.6;
  const PlaneCurve lem = lemniscate_curve();
  auto lines = std::make_shared<const ProjKnot>(ProjKnot::tangent_lift(lem));
  const Vec2 tangent = lem.velocity(centre) / lem.velocity(centre).norm();
  const Vec2 outward{tangent.y, -tangent.x};
  // smootherstep ramp over [centre - half, centre + half] and its derivative
  auto ramp = [=](double t) {
    const double x = std::clamp((std::remainder(t - centre, 1.0) + half) / (2.0 * half), 0.0, 1.0);
    const double m = x * x * x * (x * (6.0 * x - 15.0) + 10.0);
    const double dm = 30.0 * x * x * (x - 1.0) * (x - 1.0) / (2.0 * half);
    return std::pair{m, dm};
  };
  PlaneCurve base = lem.perturbed(
      "kink",
      [=](double t) {
        const double m = ramp(t).first;
        return (tangent * std::sin(kTwoPi * m) + outward * (1.0 - std::cos(kTwoPi * m))) * (amount * size);
      },
      [=](double t) {
        const auto [m, dm] = ramp(t);
        return (tangent * std::cos(kTwoPi * m) + outward * std::sin(kTwoPi * m)) * (amount * size * kTwoPi * dm);
      });
  return ProjKnot("kink-" + std::to_string(amount), base, [=](double t) {
    return lines->lift(t) + amount * twist * std::sin(kTwoPi * ramp(t).first);
  });
}

double min_crossing_angle(const PlaneCurve& curve, const std::vector<Crossing>& crossings) {
  double best = kPi / 2;
  for (const auto& c : crossings)
    best = std::min(best, std::asin(std::min(1.0, sin_between(curve.velocity(c.l), curve.velocity(c.l_prime)))));
  return best;
}

namespace {

TrigCoefficients random_coefficients(std::mt19937_64& rng, int degree, double amplitude, double decay) {
  std::normal_distribution<double> normal(0.0, 1.0);
  TrigCoefficients c;
  for (int k = 1; k <= degree; ++k) {
    const double s = amplitude / std::pow(static_cast<double>(k), decay);
    c.x_cos.push_back(s * normal(rng));
    c.x_sin.push_back(s * normal(rng));
    c.y_cos.push_back(s * normal(rng));
    c.y_sin.push_back(s * normal(rng));
  }
  return c;
}

bool well_separated(const std::vector<Crossing>& cs, double gap) {
  std::vector<double> params;
  for (const auto& c : cs) {
    params.push_back(c.l);
    params.push_back(c.l_prime);
  }
  std::sort(params.begin(), params.end());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double next = i + 1 < params.size() ? params[i + 1] : params[0] + 1.0;
    if (next - params[i] < gap) return false;
  }
  return true;
}

}  // namespace

std::vector<PlaneCurve> random_curve_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& opts) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(2, std::max(2, opts.max_degree));
  std::vector<PlaneCurve> out;
  std::size_t attempt = 0;
  while (out.size() < count) {
    if (++attempt > 1000 * (count + 1)) throw NumericalError("random corpus: rejection sampling exhausted");
    TrigCoefficients c = random_coefficients(rng, degree(rng), 1.0, 1.0);
    const PlaneCurve raw = trig_curve("raw", c);
    double rmax = 0.0;
    for (const auto& p : raw.sample_positions(1024)) rmax = std::max(rmax, p.norm());
    if (rmax == 0.0) continue;
    const double f = opts.max_radius / rmax;
    for (auto* v : {&c.x_cos, &c.x_sin, &c.y_cos, &c.y_sin})
      for (double& x : *v) x *= f;
    PlaneCurve curve = trig_curve("trig-" + std::to_string(seed) + "-" + std::to_string(out.size()), c);

    const auto speeds = curve.sample_velocities(2048);
    double lo = INFINITY, mean = 0.0;
    for (const auto& v : speeds) {
      lo = std::min(lo, v.norm());
      mean += v.norm() / static_cast<double>(speeds.size());
    }
    if (lo < opts.min_speed_ratio * mean) continue;
    try {
      const auto cs = find_crossings(curve);
      if (cs.size() < opts.min_crossings || cs.size() > opts.max_crossings) continue;
      if (min_crossing_angle(curve, cs) < opts.min_crossing_angle) continue;
      if (!well_separated(cs, opts.min_crossing_gap)) continue;
      (void)ProjKnot::tangent_lift(curve);
    } catch (const Error&) {
      continue;
    }
    out.push_back(std::move(curve));
  }
  return out;
}

std::optional<PlaneCurve> crossing_preserving_perturbation(const PlaneCurve& curve, std::uint64_t seed,
                                                           const PerturbationOptions& opts,
                                                           const CrossingOptions& copts) {
  std::mt19937_64 rng(seed);
  std::size_t base_count = 0;
  try {
    base_count = find_crossings(curve, copts).size();
  } catch (const Error&) {
    return std::nullopt;
  }
  for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const PlaneCurve offset = trig_curve("offset", random_coefficients(rng, opts.degree, opts.amplitude, 2.0));
    auto stage = [&](double s) {
      return curve.perturbed(
          curve.name() + "~" + std::to_string(seed), [offset, s](double t) { return offset.position(t) * s; },
          [offset, s](double t) { return offset.velocity(t) * s; });
    };
    bool ok = true;
    for (std::size_t k = 1; k <= opts.stages && ok; ++k) {
      const PlaneCurve c = stage(static_cast<double>(k) / static_cast<double>(opts.stages));
      try {
        const auto cs = find_crossings(c, copts);
        ok = cs.size() == base_count && min_crossing_angle(c, cs) > 0.05;
      } catch (const Error&) {
        ok = false;
      }
    }
    if (ok) return stage(1.0);
  }
  return std::nullopt;
}

}  // namespace lens
