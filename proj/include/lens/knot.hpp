#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lens/curve.hpp"
#include "lens/lift.hpp"

namespace lens {

/// Closed curve t -> (base(t), line lift(t)) in the projectivized bundle over
/// the plane. The lift is continuous on [0, 1] and lift(1) - lift(0) is a
/// multiple of pi; beyond [0, 1) it is extended so that it stays continuous.
class ProjKnot {
 public:
  using LiftFn = std::function<double(double)>;

  ProjKnot(std::string name, PlaneCurve base, LiftFn lift);

  /// Projectivized unit tangent lift. `table` headings are precomputed to keep
  /// evaluations on a single continuous branch.
  static ProjKnot tangent_lift(const PlaneCurve& curve, std::size_t table = 4096);

  const std::string& name() const { return name_; }
  const PlaneCurve& curve() const { return base_; }
  Vec2 base(double t) const { return base_.position(wrap01(t)); }
  Vec2 velocity(double t) const { return base_.velocity(wrap01(t)); }
  double lift(double t) const;
  ProjPoint point(double t) const { return {base(t), lift(t)}; }
  /// Unit vector along the line lift, continuous in t.
  Vec2 lift_vector(double t) const { return unit(lift(t)); }

  ProjCurve sample(std::size_t n) const;
  double total_rotation() const { return total_; }
  int line_winding() const { return winding_; }
  bool contractible() const { return winding_ == 0; }
  /// Only meaningful for tangent lifts: line winding / 2.
  bool is_tangent_lift() const { return tangent_; }

  static double wrap01(double t) { return positive_mod(t, 1.0); }

 private:
  std::string name_;
  PlaneCurve base_;
  LiftFn lift_;
  double total_ = 0.0;
  int winding_ = 0;
  bool tangent_ = false;
};

struct CrossingOptions {
  std::size_t samples = 4096;
  double spatial_tol = 1e-9;
  double angular_tol = 1e-6;
};

struct Crossing {
  double l = 0.0;
  double l_prime = 0.0;
  Vec2 point;
  int sign = 0;   // 0 until filled
  int type = -1;  // -1 until filled

  Crossing swapped() const {
    Crossing c = *this;
    std::swap(c.l, c.l_prime);
    return c;
  }
};

/// Double points of the base curve, l < l' in [0, 1), sorted by (l, l').
/// Throws TangencyError when the strands at a double point are parallel.
std::vector<Crossing> find_crossings(const PlaneCurve& curve, const CrossingOptions& opts = {});
inline std::vector<Crossing> find_crossings(const ProjKnot& knot, const CrossingOptions& opts = {}) {
  return find_crossings(knot.curve(), opts);
}

/// sgn det(b, b') * sgn det(v, v'). Throws TangencyError if either pair is parallel.
int crossing_sign(Vec2 beta_l, Vec2 beta_lp, Vec2 velocity_l, Vec2 velocity_lp, double angular_tol = 1e-6);
int crossing_sign(const Crossing& c, const ProjKnot& knot, double angular_tol = 1e-6);

enum class Smoothing { first_arc, second_arc };

/// Type of the loop formed by the lift arc with line change `arc_rotation`
/// closed by the shorter fiber arc between the lift vectors: |total| / pi.
/// Throws NumericalError if the result is not within 0.05 of an integer.
int smoothed_loop_type(double arc_rotation);
/// With a < b the wrapped parameters, first_arc runs a -> b and second_arc b -> a + 1.
int crossing_type(const Crossing& c, const ProjKnot& knot, Smoothing smoothing = Smoothing::first_arc);

/// Nontrivial type g -> W_g; zero entries are dropped.
using InvariantTable = std::map<int, int>;

enum class CertificateKind { non_contractible, nonzero_invariant, none };
std::string to_string(CertificateKind kind);

struct Certificate {
  CertificateKind kind = CertificateKind::none;
  int line_winding = 0;
  int type = 0;   // g for nonzero_invariant
  int value = 0;  // W_g
  std::optional<Crossing> first_return;
};

struct InvariantResult {
  std::string curve;
  std::optional<int> theta_winding;  // tangent lifts only
  int line_winding = 0;
  bool contractible = false;
  std::vector<Crossing> crossings;  // sign and type filled
  InvariantTable table;             // empty unless contractible
  Certificate certificate;
};

/// Signed counts per nontrivial type; requires a contractible knot.
InvariantTable w_invariant(const std::vector<Crossing>& filled);
InvariantResult analyze_knot(const ProjKnot& knot, const CrossingOptions& opts = {});
inline InvariantResult analyze_curve(const PlaneCurve& curve, const CrossingOptions& opts = {}) {
  return analyze_knot(ProjKnot::tangent_lift(curve), opts);
}
Certificate certify_nontrivial(const ProjKnot& knot, const std::vector<Crossing>& filled);

enum class SingularityKind { cusp, self_tangency, transverse };
std::string to_string(SingularityKind kind);

struct SingularityReport {
  SingularityKind kind = SingularityKind::transverse;
  std::size_t vertex = 0;
  std::size_t edge = 0;
};

/// Vertex i of a closed PL knot sitting on base edge j (vertices j -> j+1).
/// Throws DomainError if the vertex is not on the edge or j is incident to i.
SingularityReport singularity_classify(std::span<const ProjPoint> vertices, std::size_t i, std::size_t j,
                                       double tol = 1e-9, double angular_tol = 1e-6);

/// Immersed closed curve with a single once-crossed loop followed by an
/// embedded return tail whose line field turns so that the knot is contractible.
ProjKnot glued_tail_knot();

/// Lemniscate carrying its own tangent lines, with the upper strand of one
/// lobe pushed across the lower one by `depth` (0 = unmodified).
ProjKnot finger_move_knot(double depth);

/// Lemniscate lift with a curl of size `amount` added to its base on one lobe
/// and a small antisymmetric line twist across it (0 = unmodified).
ProjKnot kink_move_knot(double amount);

struct CorpusOptions {
  int max_degree = 3;
  double max_radius = 0.9;
  double min_speed_ratio = 0.1;      // min speed / mean speed
  double min_crossing_angle = 0.1;   // radians between strands
  double min_crossing_gap = 0.02;    // parameter distance between any two crossings
  std::size_t min_crossings = 1;
  std::size_t max_crossings = 12;
};

/// Random trigonometric curves, rejecting near-degenerate ones. Deterministic in `seed`.
std::vector<PlaneCurve> random_curve_corpus(std::size_t count, std::uint64_t seed, const CorpusOptions& opts = {});

/// Minimum angle between the two strands over a list of crossings (pi/2 if empty).
double min_crossing_angle(const PlaneCurve& curve, const std::vector<Crossing>& crossings);

struct PerturbationOptions {
  double amplitude = 0.01;
  int degree = 4;
  std::size_t stages = 8;  // intermediate checks along the straight-line homotopy
  std::size_t max_attempts = 50;
};

/// Smooth random perturbation of `curve` whose straight-line homotopy keeps the
/// crossing count and stays transverse. Returns nullopt when none is found.
std::optional<PlaneCurve> crossing_preserving_perturbation(const PlaneCurve& curve, std::uint64_t seed,
                                                           const PerturbationOptions& opts = {},
                                                           const CrossingOptions& copts = {});

}  // namespace lens
