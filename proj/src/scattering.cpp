#include "lens/scattering.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

#include "lens/errors.hpp"
#include "lens/parallel.hpp"

namespace lens {

ScatteringRecord scatter(const ConformalMetric& metric, const BoundaryVector& entry, const IntegrationOptions& opts) {
  if (classify(entry) != BoundaryClass::inward) throw DomainError("scatter: entry vector must point inward");
  const GeodesicPath path = integrate_geodesic(metric, entry, opts);
  return {entry, path.exit, path.length};
}

LensDataset lens_data(const ConformalMetric& metric, std::vector<BoundaryVector> entries, std::string sampling,
                      const IntegrationOptions& opts) {
  auto key = [](const BoundaryVector& v) { return std::tie(v.arc, v.angle); };
  std::sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const auto& a, const auto& b) { return a.arc == b.arc && a.angle == b.angle; }),
                entries.end());
  LensDataset data{metric.id(), std::vector<ScatteringRecord>(entries.size()), std::move(sampling)};
  parallel_for(entries.size(), [&](std::size_t i) { data.records[i] = scatter(metric, entries[i], opts); });
  return data;
}

namespace {

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("grid: malformed count '" + std::string(s) + "'");
  return v;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  const auto x = text.find('x');
  if (x == std::string::npos) {
    const std::size_t total = parse_count(text);
    if (total % 8 != 0) throw DomainError("grid: a bare entry count must be a multiple of 8");
    g.arcs = total / 8;
    g.angles = 8;
  } else {
    g.arcs = parse_count(std::string_view(text).substr(0, x));
    g.angles = parse_count(std::string_view(text).substr(x + 1));
  }
  if (g.arcs < 2 || g.angles < 2) throw DomainError("grid: both dimensions must be at least 2");
  return g;
}

std::string to_string(const GridSpec& grid) { return std::to_string(grid.arcs) + "x" + std::to_string(grid.angles); }

std::vector<BoundaryVector> boundary_grid(const GridSpec& grid, double min_clearance) {
  if (grid.arcs == 0 || grid.angles == 0) throw DomainError("grid: empty dimensions");
  if (!(grid.margin >= 0.0) || grid.margin >= kPi / 2) throw DomainError("grid: margin must lie in [0, pi/2)");
  std::vector<BoundaryVector> out;
  out.reserve(grid.arcs * grid.angles);
  const double span = kPi - 2.0 * grid.margin;
  for (std::size_t i = 0; i < grid.arcs; ++i) {
    const double arc = static_cast<double>(i) / static_cast<double>(grid.arcs);
    for (std::size_t j = 0; j < grid.angles; ++j) {
      const double angle = grid.margin + span * (static_cast<double>(j) + 0.5) / static_cast<double>(grid.angles);
      BoundaryVector v{arc, angle, Side::inward};
      if (chord_clearance(v, 1.0) < min_clearance) continue;
      out.push_back(v);
    }
  }
  return out;
}

std::vector<ScatteringPair> trace_pairs(const ConformalMetric& m, const ConformalMetric& n,
                                        const BoundaryIsometry& h, const std::vector<BoundaryVector>& entries,
                                        const IntegrationOptions& opts) {
  if (std::abs(m.radius() - n.radius()) > 1e-12 * m.radius())
    throw DomainError("compare: metrics must share the same boundary perimeter");
  std::vector<ScatteringPair> pairs(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) {
    pairs[i].entry = entries[i];
    pairs[i].in_m = scatter(m, entries[i], opts);
    pairs[i].in_n = scatter(n, phi_map(h, entries[i]), opts);
  });
  return pairs;
}

double boundary_angle_deviation(const BoundaryVector& a, const BoundaryVector& b) {
  auto signed_angle = [](const BoundaryVector& v) { return v.side == Side::inward ? v.angle : -v.angle; };
  return std::abs(wrap_pi(signed_angle(a) - signed_angle(b)));
}

ComparisonReport compare_scattering(const std::vector<ScatteringPair>& pairs, const BoundaryIsometry& h, double tol) {
  ComparisonReport r;
  r.tolerance = tol;
  r.sample_count = pairs.size();
  for (const auto& p : pairs) {
    if (p.trapped()) {
      ++r.trapped_count;
      continue;
    }
    const BoundaryVector lhs = phi_map(h, *p.in_m.exit);
    const BoundaryVector& rhs = *p.in_n.exit;
    r.max_angle_dev = std::max(r.max_angle_dev, boundary_angle_deviation(lhs, rhs));
    r.max_arc_dev = std::max(r.max_arc_dev, arc_distance(lhs.arc, rhs.arc));
  }
  const ExcessReport excess = length_excess(pairs);
  r.mean_excess = excess.mean;
  r.excess_dev = excess.max_deviation;
  r.equal = r.trapped_count == 0 && !pairs.empty() && r.max_angle_dev < tol && r.max_arc_dev < tol;
  return r;
}

ComparisonReport compare_scattering(const ConformalMetric& m, const ConformalMetric& n, const BoundaryIsometry& h,
                                    const std::vector<BoundaryVector>& entries, double tol,
                                    const IntegrationOptions& opts) {
  return compare_scattering(trace_pairs(m, n, h, entries, opts), h, tol);
}

ExcessReport length_excess(const std::vector<ScatteringPair>& pairs) {
  ExcessReport r;
  for (const auto& p : pairs) {
    if (p.trapped()) {
      ++r.trapped_count;
      continue;
    }
    r.excesses.push_back(p.in_n.tau - p.in_m.tau);
  }
  if (r.excesses.empty()) return r;
  double sum = 0.0;
  for (double e : r.excesses) sum += e;
  r.mean = sum / static_cast<double>(r.excesses.size());
  for (double e : r.excesses) r.max_deviation = std::max(r.max_deviation, std::abs(e - r.mean));
  return r;
}

ExcessReport length_excess(const ConformalMetric& m, const ConformalMetric& n, const BoundaryIsometry& h,
                           const std::vector<BoundaryVector>& entries, const IntegrationOptions& opts) {
  return length_excess(trace_pairs(m, n, h, entries, opts));
}

}  // namespace lens
