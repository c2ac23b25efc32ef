#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lens/lift.hpp"

namespace lens {

enum class PLViolation { none, too_few_vertices, eps_out_of_range, not_contractible, gap_too_large, edge_not_linear };
std::string to_string(PLViolation v);

struct PLMembership {
  bool member = false;
  PLViolation violation = PLViolation::none;
  std::size_t index = 0;  // offending edge or sample
  double value = 0.0;     // offending measurement
  std::string message;
};

/// Membership of the closed polygon through `vertices` (edges implied by minimal
/// linear curves) in the class of n-vertex PL knots with adjacent d0 < eps.
PLMembership pl_validate(std::span<const ProjPoint> vertices, std::size_t n, double eps,
                         double inj = kDiskInjectivity);

/// Same for a densely sampled closed curve: samples k*m (m = size / n) are the
/// vertices and every sample in between must lie on the edge's minimal linear curve.
PLMembership pl_validate(const ProjCurve& curve, std::size_t n, double eps, double inj = kDiskInjectivity,
                         double tol = 1e-9);

/// G(s, t): a family of closed curves, t in [0, 1] with a continuous lift.
using Isotopy = std::function<ProjPoint(double s, double t)>;

/// Interpolation between G (l = 0) and the PL knot through G(s, k/n) (l = 1).
/// Throws RefinementError if the current edge's d0 gap is not below eps.
ProjPoint pl_refine(const Isotopy& g, std::size_t n, double l, double s, double t, double eps,
                    double inj = kDiskInjectivity);

/// H(l, s, .) sampled at n * per_edge uniform parameters.
ProjCurve pl_refine_curve(const Isotopy& g, std::size_t n, double l, double s, std::size_t per_edge, double eps,
                          double inj = kDiskInjectivity);

/// Minimum d0 over sample pairs whose circular parameter distance exceeds `window`.
double embedding_separation(const ProjCurve& curve, double window);

/// Largest d0 gap between consecutive vertices G(s, k/n).
double max_vertex_gap(const Isotopy& g, std::size_t n, double s);

struct RefinementChoice {
  std::size_t n = 0;
  double max_gap = 0.0;
  double min_separation = 0.0;
};

/// Smallest power-of-two n >= n_start for which, at every s in `s_values`, the
/// vertex gaps are below eps / 4 and below half the embedding separation of
/// G(s, .) sampled at `samples` points. Throws RefinementError past n_max.
RefinementChoice choose_refinement_n(const Isotopy& g, double eps, std::span<const double> s_values, double window,
                                     std::size_t samples = 512, std::size_t n_start = 4, std::size_t n_max = 1 << 16);

}  // namespace lens
