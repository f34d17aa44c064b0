#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

using growthlab::Integer;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Rational dotp(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec cross(const RatVec& a, const RatVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational det3(const RatVec& a, const RatVec& b, const RatVec& c) { return dotp(a, cross(b, c)); }

bool all_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Scales v to coprime integers, keeping its direction.
RatVec integerize(const RatVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, Integer(numerator(x) * (l / denominator(x))));
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(numerator(v[i]) * (l / denominator(v[i]))) / Rational(g);
  return r;
}

RatVec centroid(const std::vector<RatVec>& pts) {
  RatVec c(pts.front().size(), Rational(0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += p[i];
  for (auto& x : c) x /= static_cast<long>(pts.size());
  return c;
}

// Counter-clockwise order of coplanar points around their centroid, seen
// from the side `normal` points to (normal is ignored in the plane).
std::vector<RatVec> angular_sort(std::vector<RatVec> pts, const RatVec& normal) {
  const RatVec c = centroid(pts);
  const RatVec ref = sub(pts.front(), c);
  auto turn = [&](const RatVec& a, const RatVec& b) -> Rational {
    if (a.size() == 2) return a[0] * b[1] - a[1] * b[0];
    return dotp(normal, cross(a, b));
  };
  auto half = [&](const RatVec& d) {
    Rational t = turn(ref, d);
    return t < 0 || (t == 0 && dotp(ref, d) < 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const RatVec& p, const RatVec& q) {
    RatVec a = sub(p, c), b = sub(q, c);
    bool ha = half(a), hb = half(b);
    if (ha != hb) return !ha;
    return turn(a, b) > 0;
  });
  return pts;
}

std::vector<std::vector<long>> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < 3; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& x : m[i]) x = -x;
      continue;
    }
    long s = coin(rng) ? 1 : -1;
    for (std::size_t c = 0; c < n; ++c) m[i][c] += s * m[j][c];
  }
  return m;
}

long gcd_len(const RatVec& d) {
  long g = 0;
  for (const auto& x : d) g = std::gcd(g, std::abs(static_cast<long>(numerator(x))));
  return g;
}

// Chops vertex i of a cyclically ordered Delzant polygon by t.
std::vector<RatVec> chop_polygon(const std::vector<RatVec>& poly, std::size_t i, long t) {
  const std::size_t m = poly.size();
  const RatVec& v = poly[i];
  RatVec dp = sub(poly[(i + m - 1) % m], v), dn = sub(poly[(i + 1) % m], v);
  long lp = gcd_len(dp), ln = gcd_len(dn);
  if (t >= lp || t >= ln) return poly;
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < m; ++j) {
    if (j != i) {
      out.push_back(poly[j]);
      continue;
    }
    RatVec a(v), b(v);
    for (std::size_t c = 0; c < 2; ++c) {
      a[c] += dp[c] / lp * t;
      b[c] += dn[c] / ln * t;
    }
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

}  // namespace

std::vector<Facet> brute_force_facets(const std::vector<RatVec>& points) {
  const std::size_t n = points.front().size();
  const std::size_t m = points.size();
  std::set<Facet> found;
  auto consider = [&](const RatVec& base, RatVec normal) {
    if (all_zero(normal)) return;
    normal = integerize(normal);
    Rational off = dotp(normal, base);
    bool le = true, ge = true;
    for (const auto& p : points) {
      Rational s = dotp(normal, p) - off;
      le = le && s <= 0;
      ge = ge && s >= 0;
    }
    if (le && ge) return;
    if (le) found.insert({normal, off});
    if (ge) {
      for (auto& x : normal) x = -x;
      found.insert({normal, -off});
    }
  };
  if (n == 2) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        RatVec d = sub(points[j], points[i]);
        consider(points[i], {d[1], -d[0]});
      }
  } else if (n == 3) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k)
          consider(points[i], cross(sub(points[j], points[i]), sub(points[k], points[i])));
  } else {
    throw std::invalid_argument("brute_force_facets supports dimensions 2 and 3");
  }
  return {found.begin(), found.end()};
}

std::vector<RatVec> vertices_from_facets(const std::vector<RatVec>& points, const std::vector<Facet>& facets) {
  std::set<RatVec> out;
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    std::vector<RatVec> tight;
    for (const auto& f : facets)
      if (dotp(f.normal, p) == f.offset) tight.push_back(f.normal);
    bool independent = false;
    for (std::size_t a = 0; a < tight.size() && !independent; ++a)
      for (std::size_t b = a + 1; b < tight.size() && !independent; ++b) {
        if (n == 2) {
          independent = tight[a][0] * tight[b][1] - tight[a][1] * tight[b][0] != 0;
          continue;
        }
        for (std::size_t c = b + 1; c < tight.size() && !independent; ++c)
          independent = det3(tight[a], tight[b], tight[c]) != 0;
      }
    if (independent) out.insert(p);
  }
  return {out.begin(), out.end()};
}

Rational volume(const std::vector<RatVec>& vertices, const std::vector<Facet>& facets) {
  const std::size_t n = vertices.front().size();
  if (n == 2) {
    auto poly = angular_sort(vertices, {});
    Rational twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RatVec& a = poly[i];
      const RatVec& b = poly[(i + 1) % poly.size()];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
  }
  const RatVec g = centroid(vertices);
  Rational six = 0;
  for (const auto& f : facets) {
    std::vector<RatVec> on;
    for (const auto& v : vertices)
      if (dotp(f.normal, v) == f.offset) on.push_back(v);
    auto ring = angular_sort(on, f.normal);
    const RatVec c = centroid(ring);
    for (std::size_t i = 0; i < ring.size(); ++i)
      six += abs(det3(sub(c, g), sub(ring[i], g), sub(ring[(i + 1) % ring.size()], g)));
  }
  return six / 6;
}

std::size_t lattice_count(const std::vector<RatVec>& vertices, const std::vector<Facet>& facets, long k) {
  const std::size_t n = vertices.front().size();
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational a = vertices.front()[i] * k, b = a;
    for (const auto& v : vertices) {
      a = std::min<Rational>(a, v[i] * k);
      b = std::max<Rational>(b, v[i] * k);
    }
    lo[i] = static_cast<long>(std::floor(a.convert_to<double>())) - 1;
    hi[i] = static_cast<long>(std::ceil(b.convert_to<double>())) + 1;
  }
  std::size_t count = 0;
  RatVec x(n);
  std::vector<long> idx(lo);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = idx[i];
    bool inside = std::all_of(facets.begin(), facets.end(),
                              [&](const Facet& f) { return dotp(f.normal, x) <= f.offset * k; });
    count += inside;
    std::size_t d = 0;
    while (d < n && ++idx[d] > hi[d]) {
      idx[d] = lo[d];
      ++d;
    }
    if (d == n) break;
  }
  return count;
}

std::size_t boundary_lattice_count(const std::vector<RatVec>& polygon_vertices, long k) {
  auto poly = angular_sort(polygon_vertices, {});
  std::size_t b = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    RatVec d = sub(poly[(i + 1) % poly.size()], poly[i]);
    for (auto& x : d) x *= k;
    b += static_cast<std::size_t>(gcd_len(d));
  }
  return b;
}

std::vector<RatVec> random_delzant(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<long> size(1, 4);
  std::uniform_int_distribution<int> shape(0, 2);
  std::vector<RatVec> pts;
  if (dim == 2) {
    long a = size(rng), b = size(rng);
    switch (shape(rng)) {
      case 0:
        pts = {{0, 0}, {a, 0}, {a, b}, {0, b}};
        break;
      case 1:
        pts = {{0, 0}, {a, 0}, {0, a}};
        break;
      default: {
        long c = std::uniform_int_distribution<long>(0, 2)(rng);
        pts = {{0, 0}, {a + c * b, 0}, {a, b}, {0, b}};
      }
    }
    std::uniform_int_distribution<int> chops(0, 2);
    for (int c = chops(rng); c > 0; --c)
      pts = chop_polygon(pts, std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng), 1);
  } else {
    long a = size(rng) + 1, b = size(rng) + 1, c = size(rng) + 1;
    switch (shape(rng)) {
      case 0:
        pts = {{0, 0, 0}, {a, 0, 0}, {0, b, 0}, {a, b, 0}, {0, 0, c}, {a, 0, c}, {0, b, c}, {a, b, c}};
        if (a >= 3 && b >= 3 && c >= 3 && std::uniform_int_distribution<int>(0, 1)(rng)) {
          pts.erase(pts.begin() + 7);
          pts.push_back({a - 1, b, c});
          pts.push_back({a, b - 1, c});
          pts.push_back({a, b, c - 1});
        }
        break;
      case 1:
        pts = {{0, 0, 0}, {a, 0, 0}, {0, a, 0}, {0, 0, a}};
        break;
      default:
        pts = {{0, 0, 0}, {a, 0, 0}, {0, a, 0}, {0, 0, c}, {a, 0, c}, {0, a, c}};
    }
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      pts.erase(pts.begin());
      pts.push_back({1, 0, 0});
      pts.push_back({0, 1, 0});
      pts.push_back({0, 0, 1});
    }
  }
  auto m = random_unimodular(rng, dim);
  std::uniform_int_distribution<long> shift(-3, 3);
  RatVec t(dim);
  for (auto& x : t) x = shift(rng);
  for (auto& p : pts) {
    RatVec q(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) q[i] += m[i][j] * p[j];
      q[i] += t[i];
    }
    p = q;
  }
  return pts;
}

std::vector<RatVec> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  std::vector<RatVec> pts(count, RatVec(dim));
  for (auto& p : pts)
    for (auto& x : p) x = Rational(num(rng), den(rng));
  return pts;
}

namespace {

double golden_max(const std::function<double(double)>& h, double lo, double hi, int iterations = 200) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
  double fa = h(a), fb = h(b);
  for (int i = 0; i < iterations; ++i) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + r * (hi - lo);
      fb = h(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - r * (hi - lo);
      fa = h(a);
    }
  }
  return std::max({fa, fb, h(lo), h(hi)});
}

}  // namespace

double conjugate_1d(const std::function<double(double)>& f, double y, double bound) {
  return golden_max([&](double x) { return y * x - f(x); }, -bound, bound);
}

double convex_inf(const std::function<double(double)>& g, double lo, double hi) {
  const int steps = 2000;
  double step = (hi - lo) / steps;
  int best = 0;
  double best_v = g(lo);
  for (int i = 1; i <= steps; ++i) {
    double v = g(lo + i * step);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double a = lo + std::max(0, best - 1) * step, b = lo + std::min(steps, best + 1) * step;
  return std::min(best_v, -golden_max([&](double t) { return -g(t); }, a, b));
}

double conjugate_2d(const std::function<double(double, double)>& u, double y1, double y2, double bound) {
  auto inner = [&](double x1) {
    return golden_max([&](double x2) { return y1 * x1 + y2 * x2 - u(x1, x2); }, -bound, bound, 80);
  };
  return golden_max(inner, -bound, bound, 80);
}

}  // namespace oracle
