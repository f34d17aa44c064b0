#include "growthlab/svg.hpp"

#include "growthlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace growthlab {

namespace {

// Vertices in counter-clockwise order around their centroid.
std::vector<std::pair<double, double>> cyclic(const Polytope& p) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& v : p.vertices()) pts.emplace_back(to_double(v[0]), to_double(v[1]));
  double cx = 0, cy = 0;
  for (auto [x, y] : pts) cx += x, cy += y;
  cx /= static_cast<double>(pts.size());
  cy /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](auto a, auto b) {
    return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
  });
  return pts;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, double size) {
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  bool first = true;
  for (const auto& l : layers) {
    if (l.polytope.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "SVG output is limited to planar polytopes");
    for (const auto& v : l.polytope.vertices()) {
      double x = to_double(v[0]), y = to_double(v[1]);
      if (first) {
        lo_x = hi_x = x;
        lo_y = hi_y = y;
        first = false;
      }
      lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
  }
  const double pad = 20;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double scale = (size - 2 * pad) / span;
  auto sx = [&](double x) { return pad + (x - lo_x) * scale; };
  auto sy = [&](double y) { return size - pad - (y - lo_y) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size) << "\" height=\"" << fmt(size)
      << "\" viewBox=\"0 0 " << fmt(size) << ' ' << fmt(size) << "\">\n";
  for (const auto& l : layers) {
    if (l.polytope.is_empty()) continue;
    auto pts = cyclic(l.polytope);
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << fmt(sx(pts[i].first)) << ',' << fmt(sy(pts[i].second));
    out << "\" stroke=\"" << l.stroke << "\" fill=\"" << l.fill << "\" fill-opacity=\"0.3\" stroke-width=\"2\"";
    if (!l.label.empty()) out << "><title>" << l.label << "</title></polygon>\n";
    else out << "/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace growthlab
