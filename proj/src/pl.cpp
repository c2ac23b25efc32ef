#include "lens/pl.hpp"

#include <algorithm>
#include <cmath>

#include "lens/errors.hpp"

namespace lens {

std::string to_string(PLViolation v) {
  switch (v) {
    case PLViolation::none: return "none";
    case PLViolation::too_few_vertices: return "too_few_vertices";
    case PLViolation::eps_out_of_range: return "eps_out_of_range";
    case PLViolation::not_contractible: return "not_contractible";
    case PLViolation::gap_too_large: return "gap_too_large";
    case PLViolation::edge_not_linear: return "edge_not_linear";
  }
  return "?";
}

namespace {

PLMembership fail(PLViolation v, std::size_t index, double value, std::string msg) {
  return {false, v, index, value, std::move(msg)};
}

}  // namespace

PLMembership pl_validate(std::span<const ProjPoint> vertices, std::size_t n, double eps, double inj) {
  if (n < 4) return fail(PLViolation::too_few_vertices, 0, static_cast<double>(n), "need n >= 4");
  if (vertices.size() != n)
    return fail(PLViolation::too_few_vertices, 0, static_cast<double>(vertices.size()), "vertex count differs from n");
  if (!(eps > 0.0) || eps >= std::min(inj, kPi / 2))
    return fail(PLViolation::eps_out_of_range, 0, eps, "eps must lie in (0, min(inj, pi/2))");

  double rotation = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const ProjPoint& p = vertices[k];
    const ProjPoint& q = vertices[(k + 1) % n];
    const double dh = distance(p.base, q.base);
    if (dh >= inj) return fail(PLViolation::gap_too_large, k, dh, "edge beyond the injectivity radius");
    const Distances d = dist_components(p, q, inj);
    if (d.d0 >= eps) return fail(PLViolation::gap_too_large, k, d.d0, "adjacent d0 gap not below eps");
    rotation += std::remainder(q.lift - p.lift, kPi);
  }
  const double w = rotation / kPi;
  if (std::abs(w) > 0.5) return fail(PLViolation::not_contractible, 0, w, "polygon is not contractible");
  return {true, PLViolation::none, 0, 0.0, "member"};
}

PLMembership pl_validate(const ProjCurve& curve, std::size_t n, double eps, double inj, double tol) {
  if (n < 4) return fail(PLViolation::too_few_vertices, 0, static_cast<double>(n), "need n >= 4");
  const std::size_t size = curve.samples.size();
  if (size < n || size % n != 0)
    return fail(PLViolation::too_few_vertices, 0, static_cast<double>(size), "sample count is not a multiple of n");
  const std::size_t m = size / n;
  std::vector<ProjPoint> vertices;
  for (std::size_t k = 0; k < n; ++k) vertices.push_back(curve.samples[k * m]);
  PLMembership rep = pl_validate(vertices, n, eps, inj);
  if (!rep.member) return rep;
  // samples between vertices must sit on the edge's minimal linear curve,
  // with the lift continuing from the vertex lift
  for (std::size_t k = 0; k < n; ++k) {
    const MinimalLinearCurve edge(vertices[k], vertices[(k + 1) % n], inj);
    for (std::size_t i = 1; i < m; ++i) {
      const ProjPoint expect = edge(static_cast<double>(i) / static_cast<double>(m));
      const ProjPoint& got = curve.samples[k * m + i];
      const double dev = std::max(distance(expect.base, got.base), std::abs(wrap_half_pi(expect.lift - got.lift)));
      if (dev > tol) return fail(PLViolation::edge_not_linear, k * m + i, dev, "sample off the minimal linear edge");
    }
  }
  return rep;
}

ProjPoint pl_refine(const Isotopy& g, std::size_t n, double l, double s, double t, double eps, double inj) {
  if (n < 1) throw DomainError("pl_refine: n must be positive");
  if (l < 0.0 || l > 1.0) throw DomainError("pl_refine: l must lie in [0, 1]");
  const double nn = static_cast<double>(n);
  const double x = t * nn;
  const double kf = std::floor(x);
  const double tau = x - kf;
  if (!(tau < l)) return g(s, t);
  const ProjPoint p = g(s, kf / nn);
  const ProjPoint full = g(s, (kf + 1.0) / nn);
  const Distances gap = dist_components(p, full, inj);
  if (gap.d0 >= eps)
    throw RefinementError("pl_refine: d0 gap " + std::to_string(gap.d0) + " on edge " + std::to_string(kf) +
                          " exceeds eps " + std::to_string(eps) + "; increase n");
  const ProjPoint q = g(s, (kf + l) / nn);
  return MinimalLinearCurve(p, q, inj)(tau / l);
}

ProjCurve pl_refine_curve(const Isotopy& g, std::size_t n, double l, double s, std::size_t per_edge, double eps,
                          double inj) {
  ProjCurve out;
  out.closed = true;
  const std::size_t total = n * per_edge;
  out.samples.reserve(total);
  for (std::size_t i = 0; i < total; ++i)
    out.samples.push_back(pl_refine(g, n, l, s, static_cast<double>(i) / static_cast<double>(total), eps, inj));
  return out;
}

double embedding_separation(const ProjCurve& curve, double window) {
  const auto& pts = curve.samples;
  const std::size_t m = pts.size();
  double best = INFINITY;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double gap = static_cast<double>(j - i) / static_cast<double>(m);
      if (std::min(gap, 1.0 - gap) <= window) continue;
      const double dh = distance(pts[i].base, pts[j].base);
      const double dv = std::abs(wrap_half_pi(pts[i].lift - pts[j].lift));
      best = std::min(best, std::max(dh, dv));
    }
  }
  return best;
}

double max_vertex_gap(const Isotopy& g, std::size_t n, double s) {
  double worst = 0.0;
  ProjPoint prev = g(s, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    const ProjPoint cur = g(s, static_cast<double>(k) / static_cast<double>(n));
    worst = std::max(worst, dist_components(prev, cur).d0);
    prev = cur;
  }
  return worst;
}

RefinementChoice choose_refinement_n(const Isotopy& g, double eps, std::span<const double> s_values, double window,
                                     std::size_t samples, std::size_t n_start, std::size_t n_max) {
  RefinementChoice choice;
  choice.min_separation = INFINITY;
  for (double s : s_values) {
    ProjCurve c;
    c.closed = true;
    for (std::size_t i = 0; i < samples; ++i) c.samples.push_back(g(s, static_cast<double>(i) / static_cast<double>(samples)));
    choice.min_separation = std::min(choice.min_separation, embedding_separation(c, window));
  }
  if (!(choice.min_separation > 0.0)) throw RefinementError("choose_refinement_n: isotopy is not embedded");
  for (std::size_t n = std::max<std::size_t>(n_start, 4); n <= n_max; n *= 2) {
    double gap = 0.0;
    for (double s : s_values) gap = std::max(gap, max_vertex_gap(g, n, s));
    if (gap < eps / 4 && gap < 0.5 * choice.min_separation) {
      choice.n = n;
      choice.max_gap = gap;
      return choice;
    }
  }
  throw RefinementError("choose_refinement_n: no n up to " + std::to_string(n_max) + " meets the gap bounds");
}

}  // namespace lens
