#include "crosslab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace crosslab {

namespace {

double approx(const Rational& r) { return r.convert_to<double>(); }

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

} // namespace

std::string render_svg(const Drawing& d, bool mark_crossings) {
  if (d.vertices.empty())
    throw std::invalid_argument("cannot render an empty drawing");

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  const auto widen = [&](const Point& p) {
    const double x = approx(p.x), y = approx(p.y);
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  };
  for (const auto& [id, p] : d.vertices) widen(p);
  for (const auto& [key, poly] : d.edges)
    for (const Point& p : poly) widen(p);

  const double margin = 40.0;
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (640.0 - 2 * margin) / span;
  const double width = 2 * margin + (max_x - min_x) * scale;
  const double height = 2 * margin + (max_y - min_y) * scale;
  // SVG y grows downward; flip so the drawing keeps its orientation.
  const auto sx = [&](const Point& p) { return margin + (approx(p.x) - min_x) * scale; };
  const auto sy = [&](const Point& p) { return margin + (max_y - approx(p.y)) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed3(width)
      << "\" height=\"" << fixed3(height) << "\" viewBox=\"0 0 " << fixed3(width)
      << " " << fixed3(height) << "\">\n";

  out << "  <g fill=\"none\" stroke=\"#35506e\" stroke-width=\"1.2\">\n";
  for (const auto& [key, poly] : d.edges) {
    out << "    <path d=\"";
    for (std::size_t i = 0; i < poly.size(); ++i)
      out << (i == 0 ? "M" : " L") << fixed3(sx(poly[i])) << " " << fixed3(sy(poly[i]));
    out << "\"/>\n";
  }
  out << "  </g>\n";

  if (mark_crossings) {
    out << "  <g fill=\"#c0392b\">\n";
    for (const CrossingRecord& r : compute_crossings_geometric(d))
      out << "    <circle class=\"crossing\" cx=\"" << fixed3(sx(r.at)) << "\" cy=\""
          << fixed3(sy(r.at)) << "\" r=\"2.5\"/>\n";
    out << "  </g>\n";
  }

  out << "  <g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto& [id, p] : d.vertices) {
    out << "    <circle class=\"vertex\" cx=\"" << fixed3(sx(p)) << "\" cy=\""
        << fixed3(sy(p)) << "\" r=\"4\" fill=\"#1d7a5f\"/>\n";
    out << "    <text x=\"" << fixed3(sx(p) + 6) << "\" y=\"" << fixed3(sy(p) - 6)
        << "\">" << id << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

} // namespace crosslab
