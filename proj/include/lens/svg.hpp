#pragma once

#include <string>
#include <vector>

#include "lens/geodesic.hpp"
#include "lens/knot.hpp"

namespace lens {

/// Disk boundary, traced rays (solid) and their straight chords (dashed).
std::string render_rays_svg(const ConformalMetric& metric, const std::vector<GeodesicPath>& paths,
                            bool show_chords = true);

/// Base curve beside its lift drawn in an annulus: the fiber coordinate becomes
/// the polar angle (doubled for line lifts) and x the radial offset.
std::string render_lift_svg(const ProjKnot& knot, const std::vector<Crossing>& crossings, std::size_t samples = 2048);

}  // namespace lens
