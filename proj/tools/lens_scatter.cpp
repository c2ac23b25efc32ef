#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "lens/eaton.hpp"
#include "lens/errors.hpp"
#include "lens/knot.hpp"
#include "lens/metric_io.hpp"
#include "lens/parallel.hpp"
#include "lens/pl.hpp"
#include "lens/report.hpp"
#include "lens/scattering.hpp"
#include "lens/svg.hpp"

#ifndef LENS_VERSION
#define LENS_VERSION "unknown"
#endif

using namespace lens;

namespace {

/// Thrown by a command whose verdict is false; maps to exit status 1.
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string out = "-";
  std::string svg;
  std::uint64_t seed = 42;
  double integration_tol = 1e-9;

  // trace / scatter
  std::string metric = "eaton";
  double arc = 0.0;
  double angle = kPi / 4;
  std::size_t path_samples = 64;
  std::string grid;

  // compare
  std::string m1 = "vacuum", m2 = "eaton";
  double tol = 1e-4;
  double shift = 0.0;
  bool reflect = false;
  bool expect_equal = false;

  // eaton
  std::string check = "invisibility";
  std::size_t radii = 1000;

  // invariant / approx-pl / render
  std::string curve = "lemniscate";
  std::size_t crossing_samples = 4096;
  double eps = 0.2;
  std::size_t stages = 5;
  std::string csv;
  double window = 0.05;
};

IntegrationOptions integration(const RunConfig& cfg) {
  IntegrationOptions o;
  o.tolerance = cfg.integration_tol;
  return o;
}

void emit(const RunConfig& cfg, const std::string& command, const Json& body) {
  write_json(cfg.out, make_report(command, body));
}

Json point_json(Vec2 p) { return Json::array({p.x, p.y}); }

Json path_json(const ConformalMetric& metric, const GeodesicPath& path, std::size_t samples) {
  Json j;
  j["entry"] = to_json(path.entry);
  j["trapped"] = path.trapped();
  j["exit"] = path.exit ? to_json(*path.exit) : Json(nullptr);
  j["tau"] = path.length;
  j["sample_count"] = path.samples.size();
  if (metric.is_radial()) {
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& s : path.samples) {
      const double c = clairaut(metric, s);
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    j["clairaut_spread"] = hi - lo;
  }
  if (!path.trapped()) {
    try {
      j["loop_winding"] = loop_winding(path);
    } catch (const Error&) {
      j["loop_winding"] = nullptr;
    }
  }
  Json pts = Json::array();
  const std::size_t n = path.samples.size();
  if (samples > 0 && n > 0) {
    const std::size_t m = std::min(samples, n);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t k = m == 1 ? 0 : i * (n - 1) / (m - 1);
      pts.push_back(point_json(path.samples[k].position));
    }
  }
  j["points"] = pts;
  return j;
}

BoundaryVector entry_of(const RunConfig& cfg) { return BoundaryVector{positive_mod(cfg.arc, 1.0), cfg.angle, Side::inward}; }

std::vector<BoundaryVector> grid_entries(const std::string& grid, const ConformalMetric& a, const ConformalMetric& b) {
  const double clearance = 2.0 * std::max(a.exclusion_radius() / a.radius(), b.exclusion_radius() / b.radius());
  return boundary_grid(parse_grid(grid), clearance);
}

// Parallel horizontal rays entering from the left, avoiding the centre.
std::vector<BoundaryVector> parallel_fan(std::size_t count) {
  std::vector<BoundaryVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double y = -0.85 + 1.7 * (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    if (std::abs(y) < 0.02) continue;
    out.push_back(to_boundary_vector({-std::sqrt(1.0 - y * y), y}, 0.0));
  }
  return out;
}

std::vector<GeodesicPath> trace_all(const ConformalMetric& metric, const std::vector<BoundaryVector>& entries,
                                    const IntegrationOptions& opts) {
  std::vector<GeodesicPath> paths(entries.size());
  parallel_for(entries.size(), [&](std::size_t i) { paths[i] = integrate_geodesic(metric, entries[i], opts); });
  return paths;
}

int cmd_trace(const RunConfig& cfg) {
  const ConformalMetric metric = load_metric(cfg.metric);
  const GeodesicPath path = integrate_geodesic(metric, entry_of(cfg), integration(cfg));
  Json body;
  body["metric"] = metric.id();
  body["path"] = path_json(metric, path, cfg.path_samples);
  emit(cfg, "trace", body);
  if (!cfg.svg.empty()) write_text(cfg.svg, render_rays_svg(metric, {path}));
  return 0;
}

int cmd_scatter(const RunConfig& cfg) {
  const ConformalMetric metric = load_metric(cfg.metric);
  Json body;
  body["metric"] = metric.id();
  if (cfg.grid.empty()) {
    body["record"] = to_json(scatter(metric, entry_of(cfg), integration(cfg)));
  } else {
    const LensDataset data = lens_data(metric, grid_entries(cfg.grid, metric, metric), cfg.grid, integration(cfg));
    body["sampling"] = data.sampling;
    body["records"] = Json::array();
    for (const auto& r : data.records) body["records"].push_back(to_json(r));
  }
  emit(cfg, "scatter", body);
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  const ConformalMetric m1 = load_metric(cfg.m1);
  const ConformalMetric m2 = load_metric(cfg.m2);
  const BoundaryIsometry h{cfg.shift, cfg.reflect ? -1 : 1};
  const auto entries = grid_entries(cfg.grid.empty() ? "16x8" : cfg.grid, m1, m2);
  const auto pairs = trace_pairs(m1, m2, h, entries, integration(cfg));
  const ComparisonReport rep = compare_scattering(pairs, h, cfg.tol);
  Json body;
  body["m1"] = m1.id();
  body["m2"] = m2.id();
  body["grid"] = cfg.grid.empty() ? "16x8" : cfg.grid;
  body["isometry"] = {{"shift", h.shift}, {"orientation", h.orientation}};
  const Json fields = to_json(rep);
  for (const auto& [k, v] : fields.items()) body[k] = v;
  emit(cfg, "compare", body);
  if (cfg.expect_equal && !rep.equal) throw AssertionFailure("scattering relations differ");
  return 0;
}

int cmd_eaton(const RunConfig& cfg) {
  const ConformalMetric eaton = make_eaton_metric();
  const std::string grid = cfg.grid.empty() ? "64" : cfg.grid;
  Json body;
  body["check"] = cfg.check;
  bool passed = false;
  if (cfg.check == "invisibility") {
    const auto entries = grid_entries(grid, eaton, eaton);
    const InvisibilityReport rep = invisibility_check(eaton, entries, cfg.tol, integration(cfg));
    body["grid"] = grid;
    const Json fields = to_json(rep);
    for (const auto& [k, v] : fields.items()) body[k] = v;
    passed = rep.passed;
  } else if (cfg.check == "winding") {
    const auto entries = grid_entries(grid, eaton, eaton);
    const auto paths = trace_all(eaton, entries, integration(cfg));
    body["grid"] = grid;
    body["windings"] = Json::array();
    passed = true;
    for (const auto& p : paths) {
      const int w = p.trapped() ? 0 : loop_winding(p);
      passed = passed && std::abs(w) == 1;
      body["windings"].push_back({{"entry", to_json(p.entry)}, {"winding", w}});
    }
  } else if (cfg.check == "length") {
    const auto entries = grid_entries(grid, eaton, eaton);
    const ExcessReport rep =
        length_excess(ConformalMetric::vacuum(), eaton, BoundaryIsometry::identity(), entries, integration(cfg));
    body["grid"] = grid;
    body["mean_excess"] = rep.mean;
    body["max_deviation"] = rep.max_deviation;
    body["relative_spread"] = rep.mean != 0.0 ? rep.max_deviation / rep.mean : INFINITY;
    body["trapped_count"] = rep.trapped_count;
    passed = rep.trapped_count == 0 && rep.mean > 0.0 && rep.max_deviation < 1e-3 * rep.mean;
  } else if (cfg.check == "index") {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(1e-6, 1.0);
    double worst = std::abs(eaton_residual(1.0, eaton_index(1.0)));
    const double at_one = eaton_index(1.0);
    for (std::size_t i = 0; i < cfg.radii; ++i) {
      const double r = u(rng);
      worst = std::max(worst, std::abs(eaton_residual(r, eaton_index(r))));
    }
    body["n_at_boundary"] = at_one;
    body["radii"] = cfg.radii;
    body["max_residual"] = worst;
    passed = std::abs(at_one - 1.0) < 1e-12 && worst < 1e-10;
  } else {
    throw DomainError("unknown check '" + cfg.check + "' (invisibility | winding | length | index)");
  }
  body["tolerance"] = cfg.tol;
  body["passed"] = passed;
  emit(cfg, "eaton", body);
  if (!cfg.svg.empty()) write_text(cfg.svg, render_rays_svg(eaton, trace_all(eaton, parallel_fan(9), integration(cfg))));
  if (!passed) throw AssertionFailure("eaton " + cfg.check + " check failed");
  return 0;
}

CrossingOptions crossing_options(const RunConfig& cfg) {
  CrossingOptions o;
  o.samples = cfg.crossing_samples;
  return o;
}

int cmd_invariant(const RunConfig& cfg) {
  const ProjKnot knot = ProjKnot::tangent_lift(named_curve(cfg.curve));
  const InvariantResult res = analyze_knot(knot, crossing_options(cfg));
  emit(cfg, "invariant", to_json(res));
  if (!cfg.svg.empty()) write_text(cfg.svg, render_lift_svg(knot, res.crossings));
  return 0;
}

int cmd_approx_pl(const RunConfig& cfg) {
  if (cfg.stages < 2) throw DomainError("--stages must be at least 2");
  const ProjKnot knot = ProjKnot::tangent_lift(named_curve(cfg.curve));
  const Isotopy g = [&knot](double, double t) { return knot.point(t); };
  const std::vector<double> s_values{0.0};
  const RefinementChoice choice = choose_refinement_n(g, cfg.eps, s_values, cfg.window);
  constexpr std::size_t per_edge = 4;

  Json body;
  body["curve"] = knot.name();
  body["eps"] = cfg.eps;
  body["n"] = choice.n;
  body["max_vertex_gap"] = choice.max_gap;
  body["curve_separation"] = choice.min_separation;
  body["stages"] = Json::array();
  std::ostringstream csv;
  csv << "stage,l,separation,vertical_length\n";
  bool positive = true;
  for (std::size_t k = 0; k < cfg.stages; ++k) {
    const double l = static_cast<double>(k) / static_cast<double>(cfg.stages - 1);
    const ProjCurve h = pl_refine_curve(g, choice.n, l, 0.0, per_edge, cfg.eps);
    const double sep = embedding_separation(h, cfg.window);
    const double vl = vertical_length(h);
    positive = positive && sep > 0.0;
    body["stages"].push_back({{"l", l}, {"separation", sep}, {"vertical_length", vl}});
    csv << k << ',' << Json(l).dump() << ',' << Json(sep).dump() << ',' << Json(vl).dump() << '\n';
  }
  const ProjCurve final_knot = pl_refine_curve(g, choice.n, 1.0, 0.0, per_edge, cfg.eps);
  body["membership"] = to_json(pl_validate(final_knot, choice.n, cfg.eps));
  body["embedded"] = positive;
  emit(cfg, "approx-pl", body);
  if (!cfg.csv.empty()) write_text(cfg.csv, csv.str());
  if (!positive) throw AssertionFailure("embedding separation vanished at some stage");
  return 0;
}

int cmd_render(const RunConfig& cfg, bool curve_given) {
  const std::string target = cfg.svg.empty() ? cfg.out : cfg.svg;
  if (curve_given) {
    const ProjKnot knot = ProjKnot::tangent_lift(named_curve(cfg.curve));
    write_text(target, render_lift_svg(knot, analyze_knot(knot, crossing_options(cfg)).crossings));
    return 0;
  }
  const ConformalMetric metric = load_metric(cfg.metric);
  std::vector<BoundaryVector> entries = cfg.grid.empty() ? parallel_fan(9) : grid_entries(cfg.grid, metric, metric);
  write_text(target, render_rays_svg(metric, trace_all(metric, entries, integration(cfg))));
  return 0;
}

std::string version_text() {
  std::string s = std::string("lens-scatter ") + LENS_VERSION + " (C++" + std::to_string(__cplusplus / 100 % 100);
#ifdef __VERSION__
  s += ", " + std::string(__VERSION__);
#endif
  s += ", threads " + std::to_string(thread_count()) + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering data of conformal disk metrics and knot invariants of curve lifts"};
  app.set_version_flag("--version", version_text());
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.out, "JSON report path ('-' for stdout)");
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  };
  auto integration_opt = [&](CLI::App* sub) {
    sub->add_option("--step-tol", cfg.integration_tol, "integrator accuracy target")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* trace = app.add_subcommand("trace", "trace one geodesic");
  common(trace);
  integration_opt(trace);
  trace->add_option("--metric", cfg.metric, "vacuum | eaton | metric.json")->capture_default_str();
  trace->add_option("--arc", cfg.arc, "entry point as a fraction of the perimeter");
  trace->add_option("--angle", cfg.angle, "entry angle from the boundary tangent, in (0, pi)");
  trace->add_option("--samples", cfg.path_samples, "path points written to the report")->capture_default_str();
  trace->add_option("--emit-svg", cfg.svg, "render the path");

  auto* scat = app.add_subcommand("scatter", "scattering relation at one entry or over a grid");
  common(scat);
  integration_opt(scat);
  scat->add_option("--metric", cfg.metric)->capture_default_str();
  scat->add_option("--arc", cfg.arc);
  scat->add_option("--angle", cfg.angle);
  scat->add_option("--grid", cfg.grid, "e.g. 16x8 or 64");

  auto* cmp = app.add_subcommand("compare", "compare the scattering relations of two metrics");
  common(cmp);
  integration_opt(cmp);
  cmp->add_option("--m1", cfg.m1)->capture_default_str();
  cmp->add_option("--m2", cfg.m2)->capture_default_str();
  cmp->add_option("--grid", cfg.grid, "default 16x8");
  cmp->add_option("--tol", cfg.tol)->check(CLI::PositiveNumber)->capture_default_str();
  cmp->add_option("--shift", cfg.shift, "boundary isometry rotation (fraction of perimeter)");
  cmp->add_flag("--reflect", cfg.reflect, "boundary isometry reverses orientation");
  cmp->add_flag("--expect-equal", cfg.expect_equal, "exit 1 unless the relations agree");

  auto* eat = app.add_subcommand("eaton", "checks on the invisible lens");
  common(eat);
  integration_opt(eat);
  eat->add_option("--check", cfg.check, "invisibility | winding | length | index")->capture_default_str();
  eat->add_option("--grid", cfg.grid, "default 64");
  eat->add_option("--tol", cfg.tol)->check(CLI::PositiveNumber)->capture_default_str();
  eat->add_option("--radii", cfg.radii, "random radii for the index check")->capture_default_str();
  eat->add_option("--emit-svg", cfg.svg, "render a fan of parallel rays");

  auto* inv = app.add_subcommand("invariant", "crossings and W table of a curve's projectivized tangent lift");
  common(inv);
  inv->add_option("--curve", cfg.curve, "circle | lemniscate | rose-<k> | curve.csv")->capture_default_str();
  inv->add_option("--samples", cfg.crossing_samples, "samples for crossing detection")->capture_default_str();
  inv->add_option("--emit-svg", cfg.svg, "render the base curve and its lift");

  auto* apl = app.add_subcommand("approx-pl", "piecewise-linear approximation of a lifted curve");
  common(apl);
  apl->add_option("--curve", cfg.curve)->capture_default_str();
  apl->add_option("--eps", cfg.eps)->check(CLI::PositiveNumber)->capture_default_str();
  apl->add_option("--stages", cfg.stages)->capture_default_str();
  apl->add_option("--window", cfg.window, "excluded parameter window for separation")->capture_default_str();
  apl->add_option("--report", cfg.csv, "per-stage CSV");

  auto* ren = app.add_subcommand("render", "SVG of rays in a metric or of a curve lift");
  common(ren);
  integration_opt(ren);
  ren->add_option("--metric", cfg.metric)->capture_default_str();
  ren->add_option("--grid", cfg.grid, "entries to draw (default: parallel fan)");
  auto* curve_opt = ren->add_option("--curve", cfg.curve, "draw this curve's lift instead");
  ren->add_option("--emit-svg", cfg.svg, "output path (defaults to --out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*trace) return cmd_trace(cfg);
    if (*scat) return cmd_scatter(cfg);
    if (*cmp) return cmd_compare(cfg);
    if (*eat) return cmd_eaton(cfg);
    if (*inv) return cmd_invariant(cfg);
    if (*apl) return cmd_approx_pl(cfg);
    if (*ren) return cmd_render(cfg, curve_opt->count() > 0);
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << '\n';
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const RefinementError& e) {
    std::cerr << "refinement failure: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
