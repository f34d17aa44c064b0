#include "growthlab/polytope.hpp"

#include "growthlab/error.hpp"

#include <algorithm>
#include <functional>
#include <cstdint>
#include <map>
#include <set>

namespace growthlab {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RatVec y;
  Bitset zero;
};

void sort_unique(std::vector<RatVec>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Affine rank of a point set together with a maximal independent set of
// difference vectors and the coordinates on which they project bijectively.
struct AffineSpan {
  int rank = -1;
  std::vector<std::size_t> coordinates;
};

AffineSpan affine_span(std::span<const RatVec> points, std::size_t dim) {
  AffineSpan span;
  if (points.empty()) return span;
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) {
    span.rank = 0;
    return span;
  }
  auto rows = independent_rows(diffs);
  span.rank = static_cast<int>(rows.size());
  if (span.rank == 0) return span;
  RatMatrix basis;
  for (auto r : rows) basis.push_back(diffs[r]);
  RatMatrix cols = transpose(basis);  // dim x rank
  span.coordinates = independent_rows(cols);
  (void)dim;
  return span;
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

}  // namespace

std::vector<RatVec> extreme_rays(const RatMatrix& rows) {
  if (rows.empty()) return {};
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();
  auto init = independent_rows(rows);
  if (init.size() != d) {
    throw Error(ErrorCode::DegenerateInput, "constraint matrix does not have full column rank");
  }
  RatMatrix basis;
  for (auto r : init) basis.push_back(rows[r]);
  RatMatrix inv = inverse(basis);

  std::vector<bool> processed(m, false);
  for (auto r : init) processed[r] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec y(d);
    for (std::size_t i = 0; i < d; ++i) y[i] = -inv[i][j];
    Ray ray{primitive(y), Bitset(m)};
    for (auto r : init)
      if (dot(rows[r], ray.y) == 0) ray.zero.set(r);
    rays.push_back(std::move(ray));
  }

  for (std::size_t h = 0; h < m; ++h) {
    if (processed[h]) continue;
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(rows[h], rays[i].y);
      if (value[i] > 0)
        pos.push_back(i);
      else if (value[i] < 0)
        neg.push_back(i);
    }
    processed[h] = true;
    if (pos.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (value[i] == 0) rays[i].zero.set(h);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) continue;
      Ray r = rays[i];
      if (value[i] == 0) r.zero.set(h);
      next.push_back(std::move(r));
    }
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec y = value[p] * rays[q].y - value[q] * rays[p].y;
        Ray ray{primitive(y), common};
        ray.zero.set(h);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.y));
  sort_unique(out);
  return out;
}

// ---------------------------------------------------------------- Polytope

Polytope Polytope::empty(std::size_t dim) {
  Polytope p;
  p.dim_ = dim;
  return p;
}

namespace {

// Facets of a full-dimensional point set in Q^n via the cone of valid
// inequalities {(a, b) : <a, p_i> - b <= 0}.
std::vector<HalfSpace> full_dimensional_facets(std::span<const RatVec> points, std::size_t n) {
  RatMatrix rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    RatVec row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = p[i];
    row[n] = -1;
    rows.push_back(std::move(row));
  }
  std::vector<HalfSpace> facets;
  for (const auto& ray : extreme_rays(rows)) {
    RatVec a(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero(a)) continue;  // the trivial inequality 0 <= 1
    facets.push_back({a, ray[n]});
  }
  return facets;
}

}  // namespace

Polytope Polytope::convex_hull(std::span<const RatVec> points, std::size_t dim) {
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::DimensionMismatch, "point of wrong dimension");
  }
  if (points.empty()) return empty(dim);
  std::vector<RatVec> pts(points.begin(), points.end());
  sort_unique(pts);

  Polytope poly;
  poly.dim_ = dim;
  AffineSpan span = affine_span(pts, dim);
  poly.affine_dim_ = span.rank;

  if (span.rank == 0) {
    poly.vertices_ = {pts.front()};
    for (std::size_t i = 0; i < dim; ++i) poly.equations_.push_back({unit(dim, i), pts.front()[i]});
    poly.vertex_facets_ = {{}};
    return poly;
  }

  const auto r = static_cast<std::size_t>(span.rank);
  std::vector<HalfSpace> facets;
  if (r == dim) {
    facets = full_dimensional_facets(pts, dim);
  } else {
    std::vector<RatVec> projected;
    projected.reserve(pts.size());
    for (const auto& p : pts) {
      RatVec q(r);
      for (std::size_t i = 0; i < r; ++i) q[i] = p[span.coordinates[i]];
      projected.push_back(std::move(q));
    }
    for (const auto& f : full_dimensional_facets(projected, r)) {
      RatVec normal = zeros(dim);
      for (std::size_t i = 0; i < r; ++i) normal[span.coordinates[i]] = f.normal[i];
      facets.push_back({normal, f.offset});
    }
    RatMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    for (auto& a : nullspace(diffs, dim)) {
      Rational b = dot(a, pts[0]);
      poly.equations_.push_back({a, b});
    }
    std::sort(poly.equations_.begin(), poly.equations_.end());
  }
  // Scale each facet to a primitive integer normal.
  for (auto& f : facets) {
    RatVec prim = primitive(f.normal);
    std::size_t i = 0;
    while (f.normal[i] == 0) ++i;
    Rational s = prim[i] / f.normal[i];
    f.offset *= s;
    f.normal = std::move(prim);
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  poly.facets_ = std::move(facets);

  // Vertices: input points whose tight facets span the relative normal space.
  for (const auto& p : pts) {
    RatMatrix tight;
    for (const auto& f : poly.facets_)
      if (f.slack(p) == 0) tight.push_back(f.normal);
    if (tight.size() >= r && rank(tight) == r) poly.vertices_.push_back(p);
  }
  poly.index_incidences();
  return poly;
}

Polytope Polytope::from_inequalities(std::size_t dim, std::span<const HalfSpace> halfspaces) {
  RatMatrix rows;
  for (const auto& h : halfspaces) {
    if (h.normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "half-space of wrong dimension");
    RatVec row(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) row[i] = h.normal[i];
    row[dim] = -h.offset;
    rows.push_back(std::move(row));
  }
  RatVec t_nonneg = zeros(dim + 1);
  t_nonneg[dim] = -1;
  rows.push_back(t_nonneg);
  if (rank(rows) != dim + 1) {
    throw Error(ErrorCode::DegenerateInput, "inequalities define an unbounded region");
  }
  std::vector<RatVec> vertices;
  for (const auto& ray : extreme_rays(rows)) {
    if (ray[dim] == 0) {
      throw Error(ErrorCode::DegenerateInput, "inequalities define an unbounded region");
    }
    RatVec x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = ray[i] / ray[dim];
    vertices.push_back(std::move(x));
  }
  return convex_hull(vertices, dim);
}

void Polytope::index_incidences() {
  vertex_facets_.assign(vertices_.size(), {});
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    for (std::size_t f = 0; f < facets_.size(); ++f)
      if (facets_[f].slack(vertices_[v]) == 0) vertex_facets_[v].push_back(f);
}

bool Polytope::contains(const RatVec& x) const {
  if (is_empty()) return false;
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (!f.contains(x)) return false;
  return true;
}

bool Polytope::is_lattice() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVec& v) { return is_integral(v); });
}

bool Polytope::has_vertex(const RatVec& v) const { return vertex_index(v).has_value(); }

std::optional<std::size_t> Polytope::vertex_index(const RatVec& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> Polytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (affine_dim_ < 1) return out;
  const auto target = static_cast<std::size_t>(affine_dim_ - 1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      RatMatrix common;
      for (auto f : vertex_facets_[i])
        if (std::binary_search(vertex_facets_[j].begin(), vertex_facets_[j].end(), f))
          common.push_back(facets_[f].normal);
      if (common.size() >= target && rank(common) == target) out.emplace_back(i, j);
    }
  }
  return out;
}

Rational Polytope::support(const RatVec& direction) const {
  if (is_empty()) throw Error(ErrorCode::EmptyInput, "support function of the empty polytope");
  Rational best = dot(vertices_.front(), direction);
  for (const auto& v : vertices_) best = std::max(best, dot(v, direction));
  return best;
}

Polytope Polytope::scaled(const Rational& factor) const {
  std::vector<RatVec> pts;
  for (const auto& v : vertices_) pts.push_back(factor * v);
  return convex_hull(pts, dim_);
}

Polytope Polytope::translated(const RatVec& shift) const {
  std::vector<RatVec> pts;
  for (const auto& v : vertices_) pts.push_back(v + shift);
  return convex_hull(pts, dim_);
}

Polytope Polytope::transformed(const RatMatrix& m) const {
  std::vector<RatVec> pts;
  for (const auto& v : vertices_) pts.push_back(growthlab::apply(m, v));
  return convex_hull(pts, dim_);
}

// ---------------------------------------------------------------- operations

Polytope hull(std::span<const RatVec> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "hull of no points");
  const std::size_t n = points.front().size();
  Polytope p = Polytope::convex_hull(points, n);
  if (!p.is_full_dimensional()) {
    throw Error(ErrorCode::DegenerateInput,
                "affine span has dimension " + std::to_string(p.affine_dim()) + " < " + std::to_string(n));
  }
  return p;
}

namespace {

std::vector<RatVec> edge_generators(const Polytope& p, std::size_t v) {
  std::vector<RatVec> gens;
  for (auto [i, j] : p.edges()) {
    if (i == v) gens.push_back(primitive(p.vertices()[j] - p.vertices()[v]));
    if (j == v) gens.push_back(primitive(p.vertices()[i] - p.vertices()[v]));
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace

DelzantReport is_delzant(const Polytope& p) {
  if (!p.is_lattice() || p.is_empty()) {
    throw Error(ErrorCode::NotLatticePolytope, "polytope has non-integral vertices");
  }
  DelzantReport report;
  report.delzant = p.is_full_dimensional();
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    VertexVerdict verdict;
    verdict.vertex = p.vertices()[v];
    verdict.generators = edge_generators(p, v);
    if (verdict.generators.size() == p.dim()) {
      verdict.determinant = determinant(verdict.generators);
      verdict.delzant = abs(*verdict.determinant) == 1;
    }
    report.delzant = report.delzant && verdict.delzant;
    report.vertices.push_back(std::move(verdict));
  }
  return report;
}

RatVec UnimodularMap::apply(const RatVec& x) const { return growthlab::apply(matrix, x - origin); }

RatVec UnimodularMap::inverse_apply(const RatVec& y) const {
  return growthlab::apply(inverse(matrix), y) + origin;
}

Normalization normalize_at_vertex(const Polytope& p, const RatVec& v) {
  auto idx = p.vertex_index(v);
  if (!idx) throw Error(ErrorCode::NotDelzantVertex, to_string(v) + " is not a vertex");
  if (!p.is_lattice()) throw Error(ErrorCode::NotLatticePolytope, "polytope has non-integral vertices");
  auto gens = edge_generators(p, *idx);
  if (gens.size() != p.dim() || abs(determinant(gens)) != 1) {
    throw Error(ErrorCode::NotDelzantVertex, to_string(v) + " is not a Delzant vertex");
  }
  // Descending order, so axis generators e_1 > ... > e_n map to themselves.
  std::sort(gens.begin(), gens.end(), std::greater<>());
  // Columns of G are the generators; A = G^{-1} sends generator i to e_i.
  UnimodularMap map{inverse(transpose(gens)), v};
  std::vector<RatVec> pts;
  for (const auto& w : p.vertices()) pts.push_back(map.apply(w));
  return {hull(pts), map};
}

bool is_normalized(const Polytope& p) {
  if (p.is_empty() || !p.has_vertex(zeros(p.dim()))) return false;
  for (const auto& v : p.vertices())
    for (const auto& x : v)
      if (x < 0) return false;
  return true;
}

std::vector<RatVec> lattice_points(const Polytope& p, long k) {
  std::vector<RatVec> out;
  if (p.is_empty()) return out;
  const std::size_t n = p.dim();
  const Rational kk = k;
  std::vector<Rational> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = hi[i] = p.vertices().front()[i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
    lo[i] = ceil(kk * lo[i]);
    hi[i] = floor(kk * hi[i]);
    if (lo[i] > hi[i]) return out;
  }
  RatVec x = lo;
  while (true) {
    bool inside = true;
    for (const auto& e : p.equations())
      if (dot(e.normal, x) != kk * e.offset) {
        inside = false;
        break;
      }
    if (inside) {
      for (const auto& f : p.facets())
        if (dot(f.normal, x) > kk * f.offset) {
          inside = false;
          break;
        }
    }
    if (inside) out.push_back(x);
    // Odometer increment, last coordinate fastest: lexicographic order.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        x[i] += 1;
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

namespace {

using Face = std::vector<std::size_t>;

int face_dimension(const Polytope& p, const Face& face) {
  if (face.empty()) return -1;
  RatMatrix diffs;
  for (std::size_t i = 1; i < face.size(); ++i)
    diffs.push_back(p.vertices()[face[i]] - p.vertices()[face[0]]);
  return static_cast<int>(rank(diffs));
}

// Pulling triangulation: cone from the smallest vertex over the facets of
// the face that avoid it.
void triangulate(const Polytope& p, const Face& face, int dim, std::vector<Face>& out) {
  if (dim == 0) {
    out.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  std::set<Face> subfaces;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    Face sub;
    for (auto v : face)
      if (std::binary_search(p.vertex_facets()[v].begin(), p.vertex_facets()[v].end(), f)) sub.push_back(v);
    if (sub.empty() || sub.size() == face.size()) continue;
    if (std::binary_search(sub.begin(), sub.end(), apex)) continue;
    if (face_dimension(p, sub) == dim - 1) subfaces.insert(sub);
  }
  for (const auto& sub : subfaces) {
    std::vector<Face> simplices;
    triangulate(p, sub, dim - 1, simplices);
    for (auto& s : simplices) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

Rational simplex_volume(const std::vector<RatVec>& pts) {
  RatMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(pts[i] - pts[0]);
  return abs(determinant(m)) / factorial(m.size());
}

}  // namespace

Rational volume(const Polytope& p) {
  if (!p.is_full_dimensional() || p.is_empty()) return 0;
  if (p.dim() == 0) return 1;
  Face all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<Face> simplices;
  triangulate(p, all, static_cast<int>(p.dim()), simplices);
  Rational total = 0;
  for (const auto& s : simplices) {
    std::vector<RatVec> pts;
    for (auto v : s) pts.push_back(p.vertices()[v]);
    total += simplex_volume(pts);
  }
  return total;
}

Rational relative_volume(const Polytope& p) {
  if (p.is_empty()) return 0;
  if (p.equations().size() != 1 || p.affine_dim() != static_cast<int>(p.dim()) - 1) {
    throw Error(ErrorCode::DegenerateInput, "relative volume needs a codimension-one polytope");
  }
  const RatVec& a = p.equations().front().normal;
  // Drop a coordinate j with a_j != 0; the projection maps the hyperplane
  // lattice onto a sublattice of index |a_j|.
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && (a[j] == 0 || abs(a[i]) < abs(a[j]))) j = i;
  std::vector<RatVec> projected;
  for (const auto& v : p.vertices()) {
    RatVec q;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (i != j) q.push_back(v[i]);
    projected.push_back(std::move(q));
  }
  return volume(Polytope::convex_hull(projected, p.dim() - 1)) / abs(a[j]);
}

Rational simplex_scale_inside(const Polytope& p) {
  if (!p.contains(zeros(p.dim()))) {
    throw Error(ErrorCode::NotNormalized, "origin is not in the polytope");
  }
  if (!p.is_full_dimensional()) return 0;
  std::optional<Rational> best;
  for (const auto& f : p.facets()) {
    Rational top = *std::max_element(f.normal.begin(), f.normal.end());
    if (top <= 0) continue;
    Rational bound = f.offset / top;
    if (!best || bound < *best) best = bound;
  }
  return best.value_or(Rational(0));
}

Rational simplex_inclusion(const Polytope& p) {
  if (!is_normalized(p)) throw Error(ErrorCode::NotNormalized, "polytope is not normalised at the origin");
  return simplex_scale_inside(p);
}

Polytope slice(const Polytope& p, const Rational& level) {
  std::vector<RatVec> cut;
  std::vector<Rational> sums;
  for (const auto& v : p.vertices()) {
    sums.push_back(coordinate_sum(v));
    if (sums.back() == level) cut.push_back(v);
  }
  for (auto [i, j] : p.edges()) {
    const Rational& si = sums[i];
    const Rational& sj = sums[j];
    if ((si < level && sj > level) || (si > level && sj < level)) {
      Rational t = (level - si) / (sj - si);
      cut.push_back(p.vertices()[i] + t * (p.vertices()[j] - p.vertices()[i]));
    }
  }
  return Polytope::convex_hull(cut, p.dim());
}

std::vector<InclusionViolation> inclusion_violations(const Polytope& a, const Polytope& b) {
  std::vector<InclusionViolation> out;
  const RatVec origin = zeros(b.dim());
  for (const auto& v : a.vertices()) {
    for (const auto& e : b.equations()) {
      if (dot(e.normal, v) != e.offset) out.push_back({v, e, true});
    }
    for (const auto& f : b.facets()) {
      Rational s = f.slack(v);
      if (s < 0) {
        out.push_back({v, f, true});
      } else if (s == 0 && f.slack(origin) != 0) {
        out.push_back({v, f, false});
      }
    }
  }
  return out;
}

bool strict_inclusion(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "polytopes of different dimension");
  if (a.is_empty()) return true;
  if (!b.is_full_dimensional()) return false;
  return inclusion_violations(a, b).empty();
}

}  // namespace growthlab
