#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lens/boundary.hpp"
#include "lens/geodesic.hpp"

namespace lens {

/// One sample of the scattering relation plus travel time.
struct ScatteringRecord {
  BoundaryVector entry;
  std::optional<BoundaryVector> exit;  // empty when trapped
  double tau = 0.0;

  bool trapped() const { return !exit.has_value(); }
};

ScatteringRecord scatter(const ConformalMetric& metric, const BoundaryVector& entry,
                         const IntegrationOptions& opts = {});

/// Lens data of one metric over a set of entries, sorted by (arc, angle).
struct LensDataset {
  std::string metric_id;
  std::vector<ScatteringRecord> records;
  std::string sampling;
};

LensDataset lens_data(const ConformalMetric& metric, std::vector<BoundaryVector> entries, std::string sampling,
                      const IntegrationOptions& opts = {});

/// Boundary points x interior angles. Angles are centred in equal cells of
/// [margin, pi - margin]; entries whose straight chord passes closer than
/// `min_clearance` to the origin are skipped.
struct GridSpec {
  std::size_t arcs = 16;
  std::size_t angles = 8;
  double margin = 0.05;
};

/// "16x8" -> 16 arcs x 8 angles; a bare count "64" -> (64 / 8) arcs x 8 angles.
GridSpec parse_grid(const std::string& text);
std::string to_string(const GridSpec& grid);

std::vector<BoundaryVector> boundary_grid(const GridSpec& grid, double min_clearance = 0.0);

/// Entries traced in M and phi(entry) traced in N.
struct ScatteringPair {
  BoundaryVector entry;
  ScatteringRecord in_m;
  ScatteringRecord in_n;
  bool trapped() const { return in_m.trapped() || in_n.trapped(); }
};

std::vector<ScatteringPair> trace_pairs(const ConformalMetric& m, const ConformalMetric& n,
                                        const BoundaryIsometry& h, const std::vector<BoundaryVector>& entries,
                                        const IntegrationOptions& opts = {});

struct ComparisonReport {
  bool equal = false;
  double max_angle_dev = 0.0;
  double max_arc_dev = 0.0;
  std::size_t trapped_count = 0;
  std::size_t sample_count = 0;
  double tolerance = 0.0;
  double mean_excess = 0.0;
  double excess_dev = 0.0;
};

/// Evaluates phi(alpha_M(X)) against alpha_N(phi(X)) over the entries.
/// Trapped samples are counted and excluded; equality requires none.
ComparisonReport compare_scattering(const ConformalMetric& m, const ConformalMetric& n, const BoundaryIsometry& h,
                                    const std::vector<BoundaryVector>& entries, double tol,
                                    const IntegrationOptions& opts = {});

ComparisonReport compare_scattering(const std::vector<ScatteringPair>& pairs, const BoundaryIsometry& h, double tol);

struct ExcessReport {
  double mean = 0.0;
  double max_deviation = 0.0;  // max |excess - mean|
  std::size_t trapped_count = 0;
  std::vector<double> excesses;
};

/// Per-entry tau_N(phi(X)) - tau_M(X).
ExcessReport length_excess(const ConformalMetric& m, const ConformalMetric& n, const BoundaryIsometry& h,
                           const std::vector<BoundaryVector>& entries, const IntegrationOptions& opts = {});

ExcessReport length_excess(const std::vector<ScatteringPair>& pairs);

/// Angle between two boundary vectors at nominally the same base point.
double boundary_angle_deviation(const BoundaryVector& a, const BoundaryVector& b);

}  // namespace lens
