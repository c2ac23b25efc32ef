#include "lens/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lens {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", std::round(v * 1e6) / 1e6);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Frame {
  double cx, cy, scale;
  std::string pt(Vec2 p) const { return num(cx + scale * p.x) + "," + num(cy - scale * p.y); }
};

std::string polyline(const Frame& f, const std::vector<Vec2>& pts, const std::string& style) {
  std::string s = "<polyline fill=\"none\" " + style + " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += f.pt(pts[i]);
  }
  return s + "\"/>\n";
}

std::string header(int w, int h) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
         "\" viewBox=\"0 0 " + std::to_string(w) + " " + std::to_string(h) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_rays_svg(const ConformalMetric& metric, const std::vector<GeodesicPath>& paths, bool show_chords) {
  const double R = metric.radius();
  const Frame f{250.0, 250.0, 220.0 / R};
  std::ostringstream out;
  out << header(500, 500);
  out << "<circle cx=\"250\" cy=\"250\" r=\"220\" fill=\"#f2f2f2\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  for (const auto& p : paths) {
    if (show_chords && p.exit) {
      out << polyline(f, {boundary_point(p.entry, R), boundary_point(*p.exit, R)},
                      "stroke=\"#999999\" stroke-width=\"0.8\" stroke-dasharray=\"4 3\"");
    }
    std::vector<Vec2> pts;
    const std::size_t stride = std::max<std::size_t>(1, p.samples.size() / 2000);
    for (std::size_t i = 0; i < p.samples.size(); i += stride) pts.push_back(p.samples[i].position);
    if (!p.samples.empty()) pts.push_back(p.samples.back().position);
    out << polyline(f, pts, std::string("stroke=\"") + (p.trapped() ? "#cc3333" : "#1f5fbf") + "\" stroke-width=\"1\"");
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_lift_svg(const ProjKnot& knot, const std::vector<Crossing>& crossings, std::size_t samples) {
  const Frame base{200.0, 200.0, 180.0};
  const Frame ring{600.0, 200.0, 60.0};
  std::ostringstream out;
  out << header(800, 400);
  out << "<circle cx=\"200\" cy=\"200\" r=\"180\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  out << "<circle cx=\"600\" cy=\"200\" r=\"" << num(60.0 * 1.5) << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  auto annulus = [&](double t) {
    const ProjPoint p = knot.point(t);
    return unit(2.0 * p.lift) * (2.0 + p.base.x);
  };
  std::vector<Vec2> b, a;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(samples);
    b.push_back(knot.base(t));
    a.push_back(annulus(t));
  }
  out << polyline(base, b, "stroke=\"#1f5fbf\" stroke-width=\"1.2\"");
  out << polyline(ring, a, "stroke=\"#1f5fbf\" stroke-width=\"1.2\"");
  for (const auto& c : crossings) {
    const std::string colour = c.sign > 0 ? "#2a9d2a" : "#cc3333";
    const std::string bp = base.pt(c.point);
    const auto comma = bp.find(',');
    out << "<circle cx=\"" << bp.substr(0, comma) << "\" cy=\"" << bp.substr(comma + 1) << "\" r=\"3\" fill=\"" << colour
        << "\"/>\n";
    for (double t : {c.l, c.l_prime}) {
      const std::string ap = ring.pt(annulus(t));
      const auto k = ap.find(',');
      out << "<circle cx=\"" << ap.substr(0, k) << "\" cy=\"" << ap.substr(k + 1) << "\" r=\"2.5\" fill=\"" << colour
          << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lens
