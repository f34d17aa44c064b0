#include "float_hull.hpp"

#include "growthlab/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

namespace growthlab::fhull {

namespace {

double dotp(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Point> directions_for(std::size_t dim, std::size_t count) {
  std::vector<Point> dirs;
  if (dim == 1) return {{1.0}, {-1.0}};
  if (dim == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      double t = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
      dirs.push_back({std::cos(t), std::sin(t)});
    }
    return dirs;
  }
  // Fibonacci sphere.
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < count; ++k) {
    double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double t = golden * static_cast<double>(k);
    dirs.push_back({r * std::cos(t), r * std::sin(t), z});
  }
  return dirs;
}

double cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> hull2(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  return h;
}

using Vec3 = std::array<double, 3>;

Vec3 sub3(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Face {
  std::array<std::size_t, 3> v;
  Vec3 normal;
  double offset;
};

struct Hull3 {
  std::vector<Face> faces;
  double scale = 1;
};

Face make_face(const std::vector<Point>& p, std::size_t a, std::size_t b, std::size_t c) {
  Vec3 n = cross3(sub3(p[b], p[a]), sub3(p[c], p[a]));
  return {{a, b, c}, n, dot3(n, {p[a][0], p[a][1], p[a][2]})};
}

double height(const Face& f, const Point& x) { return dot3(f.normal, {x[0], x[1], x[2]}) - f.offset; }

// Incremental 3-D hull. Returns false when the points are (numerically)
// coplanar.
bool hull3(const std::vector<Point>& p, Hull3& out) {
  const std::size_t n = p.size();
  if (n < 4) return false;
  double scale = 0;
  for (const auto& x : p)
    for (double c : x) scale = std::max(scale, std::abs(c));
  scale = std::max(scale, 1.0);
  const double eps = 1e-12 * scale * scale * scale;

  std::size_t i0 = 0, i1 = n, i2 = n, i3 = n;
  for (std::size_t i = 1; i < n && i1 == n; ++i)
    if (std::sqrt(dot3(sub3(p[i], p[i0]), sub3(p[i], p[i0]))) > 1e-9 * scale) i1 = i;
  if (i1 == n) return false;
  for (std::size_t i = 1; i < n && i2 == n; ++i) {
    Vec3 c = cross3(sub3(p[i1], p[i0]), sub3(p[i], p[i0]));
    if (std::sqrt(dot3(c, c)) > 1e-9 * scale * scale) i2 = i;
  }
  if (i2 == n) return false;
  Face base = make_face(p, i0, i1, i2);
  for (std::size_t i = 1; i < n && i3 == n; ++i)
    if (std::abs(height(base, p[i])) > eps * 1e3) i3 = i;
  if (i3 == n) return false;

  if (height(base, p[i3]) > 0) std::swap(i1, i2);
  std::vector<Face> faces = {make_face(p, i0, i1, i2), make_face(p, i0, i3, i1), make_face(p, i1, i3, i2),
                             make_face(p, i2, i3, i0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    std::vector<bool> visible(faces.size());
    bool any = false;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      visible[f] = height(faces[f], p[i]) > eps;
      any = any || visible[f];
    }
    if (!any) continue;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (!visible[f]) continue;
      const auto& v = faces[f].v;
      for (int e = 0; e < 3; ++e) edges.insert({v[e], v[(e + 1) % 3]});
    }
    std::vector<Face> next;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (!visible[f]) next.push_back(faces[f]);
    for (auto [a, b] : edges)
      if (!edges.count({b, a})) next.push_back(make_face(p, a, b, i));
    faces = std::move(next);
  }
  out.faces = std::move(faces);
  out.scale = scale;
  return true;
}

std::size_t dimension_of(const std::vector<Point>& pts) {
  if (pts.empty()) throw Error(ErrorCode::EmptyInput, "empty point cloud");
  std::size_t d = pts.front().size();
  if (d < 1 || d > 3) throw Error(ErrorCode::DimensionMismatch, "float hulls support dimensions 1 to 3");
  return d;
}

}  // namespace

std::vector<Point> extreme_candidates(const std::vector<Point>& cloud, std::size_t directions) {
  const std::size_t d = dimension_of(cloud);
  std::set<std::size_t> keep;
  for (const auto& dir : directions_for(d, directions)) {
    std::size_t best = 0;
    double best_val = dotp(cloud[0], dir);
    for (std::size_t i = 1; i < cloud.size(); ++i) {
      double v = dotp(cloud[i], dir);
      if (v > best_val) {
        best_val = v;
        best = i;
      }
    }
    keep.insert(best);
  }
  std::vector<Point> out;
  for (auto i : keep) out.push_back(cloud[i]);
  return out;
}

std::vector<Point> hull_vertices(const std::vector<Point>& points) {
  const std::size_t d = dimension_of(points);
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end());
    if (*lo == *hi) return {*lo};
    return {*lo, *hi};
  }
  if (d == 2) return hull2(points);
  Hull3 h;
  if (!hull3(points, h)) return {};
  std::set<std::size_t> ids;
  for (const auto& f : h.faces) ids.insert(f.v.begin(), f.v.end());
  std::vector<Point> out;
  for (auto i : ids) out.push_back(points[i]);
  return out;
}

double hull_volume(const std::vector<Point>& points) {
  const std::size_t d = dimension_of(points);
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end());
    return (*hi)[0] - (*lo)[0];
  }
  if (d == 2) {
    auto h = hull2(points);
    double area = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& a = h[i];
      const auto& b = h[(i + 1) % h.size()];
      area += a[0] * b[1] - a[1] * b[0];
    }
    return std::abs(area) / 2;
  }
  Hull3 h;
  if (!hull3(points, h)) return 0;
  Point c = points[h.faces.front().v[0]];
  double vol = 0;
  for (const auto& f : h.faces) {
    Vec3 a = sub3(points[f.v[0]], c), b = sub3(points[f.v[1]], c), e = sub3(points[f.v[2]], c);
    vol += dot3(a, cross3(b, e));
  }
  return std::abs(vol) / 6;
}

}  // namespace growthlab::fhull
