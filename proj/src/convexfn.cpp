#include "growthlab/convexfn.hpp"

#include "growthlab/error.hpp"
#include "lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace growthlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double dot_d(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_dim(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: expected " + std::to_string(expected) + ", got " + std::to_string(got));
}

}  // namespace

// ------------------------------------------------------------ max-affine

MaxAffineFunction::MaxAffineFunction(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::EmptyInput, "max-affine function needs at least one piece");
  const std::size_t n = pieces_.front().slope.size();
  for (const auto& p : pieces_) check_dim(n, p.slope.size());
  std::sort(pieces_.begin(), pieces_.end());
  pieces_.erase(std::unique(pieces_.begin(), pieces_.end()), pieces_.end());
  std::vector<RatVec> slopes;
  for (const auto& p : pieces_) {
    slopes.push_back(p.slope);
    slopes_d_.push_back(to_double(p.slope));
    offsets_d_.push_back(to_double(p.offset));
  }
  slope_polytope_ = Polytope::convex_hull(slopes, n);
}

MaxAffineFunction MaxAffineFunction::support_function(const Polytope& p) {
  if (p.is_empty()) throw Error(ErrorCode::EmptyInput, "support function of the empty polytope");
  std::vector<AffinePiece> pieces;
  for (const auto& v : p.vertices()) pieces.push_back({v, 0});
  return MaxAffineFunction(std::move(pieces));
}

double MaxAffineFunction::eval(std::span<const double> x) const {
  check_dim(dim(), x.size());
  double best = -kInf;
  for (std::size_t i = 0; i < pieces_.size(); ++i) best = std::max(best, dot_d(slopes_d_[i], x) + offsets_d_[i]);
  return best;
}

Rational MaxAffineFunction::eval(const RatVec& x) const {
  check_dim(dim(), x.size());
  Rational best = dot(pieces_.front().slope, x) + pieces_.front().offset;
  for (const auto& p : pieces_) best = std::max(best, Rational(dot(p.slope, x) + p.offset));
  return best;
}

MaxAffineFunction MaxAffineFunction::pruned() const {
  // Pieces are sorted by slope, so the last of each equal-slope run has the
  // largest offset.
  std::vector<AffinePiece> kept;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (i + 1 == pieces_.size() || pieces_[i + 1].slope != pieces_[i].slope) kept.push_back(pieces_[i]);

  bool equal_offsets = std::all_of(kept.begin(), kept.end(),
                                   [&](const AffinePiece& p) { return p.offset == kept.front().offset; });
  std::vector<AffinePiece> out;
  if (equal_offsets) {
    for (const auto& p : kept)
      if (slope_polytope_.has_vertex(p.slope)) out.push_back(p);
    return MaxAffineFunction(std::move(out));
  }
  std::vector<bool> alive(kept.size(), true);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (slope_polytope_.has_vertex(kept[i].slope)) continue;
    std::vector<RatVec> pts;
    RatVec w;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j == i || !alive[j]) continue;
      pts.push_back(kept[j].slope);
      w.push_back(-kept[j].offset);
    }
    auto r = lp::lower_envelope(pts, w, kept[i].slope);
    if (r.status == lp::Status::Optimal && r.value <= -kept[i].offset) alive[i] = false;
  }
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (alive[i]) out.push_back(kept[i]);
  return MaxAffineFunction(std::move(out));
}

MaxAffineFunction MaxAffineFunction::shifted(const Rational& c) const {
  auto pieces = pieces_;
  for (auto& p : pieces) p.offset += c;
  return MaxAffineFunction(std::move(pieces));
}

// ------------------------------------------------------------ smooth potentials

const char* to_string(PotentialFamily f) {
  switch (f) {
    case PotentialFamily::LogSumExp: return "lse";
    case PotentialFamily::ScaledFubiniStudy: return "fs";
    case PotentialFamily::Affine: return "affine";
  }
  return "?";
}

SmoothToricPotential SmoothToricPotential::logsumexp(const Polytope& p, long k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "level k must be positive");
  if (p.is_empty() || !p.is_lattice() || !is_normalized(p))
    throw Error(ErrorCode::NotNormalized, "log-sum-exp potentials need a lattice polytope normalised at the origin");
  SmoothToricPotential u;
  u.family_ = PotentialFamily::LogSumExp;
  u.dim_ = p.dim();
  u.k_ = k;
  u.exponents_ = lattice_points(p, k);
  for (const auto& a : u.exponents_) u.exponents_d_.push_back(to_double(a));
  u.slope_polytope_ = p;
  return u;
}

SmoothToricPotential SmoothToricPotential::fubini_study(std::size_t dim, const Rational& lambda) {
  if (lambda < 0) throw Error(ErrorCode::DomainError, "Fubini-Study scale must be nonnegative");
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  SmoothToricPotential u;
  u.family_ = PotentialFamily::ScaledFubiniStudy;
  u.dim_ = dim;
  u.lambda_ = lambda;
  std::vector<RatVec> corners{zeros(dim)};
  for (std::size_t i = 0; i < dim; ++i) corners.push_back(lambda * unit(dim, i));
  u.slope_polytope_ = Polytope::convex_hull(corners, dim);
  return u;
}

SmoothToricPotential SmoothToricPotential::affine(RatVec slope, const Rational& offset) {
  if (slope.empty()) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  SmoothToricPotential u;
  u.family_ = PotentialFamily::Affine;
  u.dim_ = slope.size();
  u.offset_ = offset;
  u.slope_polytope_ = Polytope::convex_hull(std::vector<RatVec>{slope}, slope.size());
  u.exponents_d_.push_back(to_double(slope));
  u.exponents_.push_back(std::move(slope));
  return u;
}

double SmoothToricPotential::eval(std::span<const double> x) const {
  check_dim(dim_, x.size());
  switch (family_) {
    case PotentialFamily::LogSumExp: {
      double m = -kInf;
      std::vector<double> d(exponents_d_.size());
      for (std::size_t j = 0; j < d.size(); ++j) m = std::max(m, d[j] = dot_d(exponents_d_[j], x));
      double s = 0;
      for (double v : d) s += std::exp(v - m);
      return (m + std::log(s)) / static_cast<double>(k_);
    }
    case PotentialFamily::ScaledFubiniStudy: {
      double m = 0;
      for (double v : x) m = std::max(m, v);
      double s = std::exp(-m);
      for (double v : x) s += std::exp(v - m);
      return to_double(lambda_) * (m + std::log(s));
    }
    case PotentialFamily::Affine:
      return dot_d(exponents_d_.front(), x) + to_double(offset_);
  }
  return 0;
}

std::vector<double> SmoothToricPotential::gradient(std::span<const double> x) const {
  check_dim(dim_, x.size());
  std::vector<double> g(dim_, 0.0);
  switch (family_) {
    case PotentialFamily::LogSumExp: {
      double m = -kInf;
      std::vector<double> d(exponents_d_.size());
      for (std::size_t j = 0; j < d.size(); ++j) m = std::max(m, d[j] = dot_d(exponents_d_[j], x));
      double s = 0;
      for (std::size_t j = 0; j < d.size(); ++j) {
        double w = std::exp(d[j] - m);
        s += w;
        for (std::size_t i = 0; i < dim_; ++i) g[i] += w * exponents_d_[j][i];
      }
      for (auto& v : g) v /= s * static_cast<double>(k_);
      break;
    }
    case PotentialFamily::ScaledFubiniStudy: {
      double m = 0;
      for (double v : x) m = std::max(m, v);
      double s = std::exp(-m);
      for (std::size_t i = 0; i < dim_; ++i) s += (g[i] = std::exp(x[i] - m));
      for (auto& v : g) v *= to_double(lambda_) / s;
      break;
    }
    case PotentialFamily::Affine:
      g = exponents_d_.front();
      break;
  }
  return g;
}

MaxAffineFunction SmoothToricPotential::shadow() const {
  if (family_ == PotentialFamily::Affine) return MaxAffineFunction({{exponents_.front(), offset_}});
  return MaxAffineFunction::support_function(slope_polytope_);
}

std::pair<double, double> SmoothToricPotential::shadow_gap() const {
  switch (family_) {
    case PotentialFamily::LogSumExp:
      return {0.0, std::log(static_cast<double>(exponents_.size())) / static_cast<double>(k_)};
    case PotentialFamily::ScaledFubiniStudy:
      return {0.0, to_double(lambda_) * std::log(static_cast<double>(dim_ + 1))};
    case PotentialFamily::Affine:
      return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

double eval(const ConvexFunction& f, std::span<const double> x) {
  return std::visit([&](const auto& g) { return g.eval(x); }, f);
}

std::size_t dim(const ConvexFunction& f) {
  return std::visit([](const auto& g) { return g.dim(); }, f);
}

const Polytope& slope_polytope(const ConvexFunction& f) {
  return std::visit([](const auto& g) -> const Polytope& { return g.slope_polytope(); }, f);
}

// ------------------------------------------------------------ bounded differences

bool BoundedDifferenceCertificate::bounded() const { return std::isfinite(sup_bound) && std::isfinite(inf_bound); }

namespace {

struct ExactSup {
  std::optional<Rational> value;  // nullopt = +infinity
  std::optional<RatVec> recession;
  std::vector<RatVec> witnesses;
};

// Direction d with <d, alpha> > max over S of <d, .>.
RatVec separating_direction(const Polytope& s, const RatVec& alpha) {
  for (const auto& e : s.equations()) {
    Rational v = dot(e.normal, alpha);
    if (v > e.offset) return e.normal;
    if (v < e.offset) return Rational(-1) * e.normal;
  }
  for (const auto& f : s.facets())
    if (!f.contains(alpha)) return f.normal;
  throw Error(ErrorCode::DegenerateInput, "point is inside the slope polytope");
}

// sup_x f(x) - g(x) = max over pieces (a, c) of f of c + g*(a).
ExactSup exact_sup(const MaxAffineFunction& f, const MaxAffineFunction& g) {
  std::vector<RatVec> pts;
  RatVec w;
  for (const auto& p : g.pieces()) {
    pts.push_back(p.slope);
    w.push_back(-p.offset);
  }
  ExactSup out;
  for (const auto& piece : f.pieces()) {
    auto r = lp::lower_envelope(pts, w, piece.slope);
    if (r.status != lp::Status::Optimal) {
      out.value.reset();
      out.recession = separating_direction(g.slope_polytope(), piece.slope);
      out.witnesses = {piece.slope};
      return out;
    }
    Rational v = piece.offset + r.value;
    if (!out.value || v > *out.value) {
      out.value = v;
      out.witnesses = {piece.slope};
    } else if (v == *out.value) {
      out.witnesses.push_back(piece.slope);
    }
  }
  return out;
}

BoundedDifferenceCertificate exact_certificate(const MaxAffineFunction& f, const MaxAffineFunction& g) {
  BoundedDifferenceCertificate c;
  c.method = "exact-LP";
  auto up = exact_sup(f, g);
  auto down = exact_sup(g, f);
  if (up.value) {
    c.sup_exact = *up.value;
    c.sup_bound = to_double(*up.value);
  } else {
    c.sup_bound = kInf;
    c.sup_recession = up.recession;
  }
  if (down.value) {
    c.inf_exact = -*down.value;
    c.inf_bound = to_double(*c.inf_exact);
  } else {
    c.inf_bound = -kInf;
    c.inf_recession = down.recession;
  }
  c.witnesses = up.witnesses;
  for (auto& w : down.witnesses) c.witnesses.push_back(std::move(w));
  return c;
}

std::optional<MaxAffineFunction> as_max_affine(const ConvexFunction& f) {
  if (auto* m = std::get_if<MaxAffineFunction>(&f)) return *m;
  const auto& s = std::get<SmoothToricPotential>(f);
  if (s.family() == PotentialFamily::Affine) return s.shadow();
  return std::nullopt;
}

}  // namespace

BoundedDifferenceCertificate sup_difference(const ConvexFunction& f, const ConvexFunction& g) {
  check_dim(dim(f), dim(g));
  auto fm = as_max_affine(f);
  auto gm = as_max_affine(g);
  if (fm && gm) return exact_certificate(*fm, *gm);
  if (!fm && !gm)
    throw Error(ErrorCode::IncomparableFamilies, "cannot compare two non-polyhedral smooth potentials");

  // One side is smooth: compare its shadow exactly, then widen by the gap.
  const auto& smooth = std::get<SmoothToricPotential>(fm ? g : f);
  auto [lo, hi] = smooth.shadow_gap();
  BoundedDifferenceCertificate c = fm ? exact_certificate(*fm, smooth.shadow()) : exact_certificate(smooth.shadow(), *gm);
  if (fm) {
    // f - g = (f - shadow) - gap
    c.sup_bound -= lo;
    c.inf_bound -= hi;
  } else {
    c.sup_bound += hi;
    c.inf_bound += lo;
  }
  c.sup_exact.reset();
  c.inf_exact.reset();
  c.method = smooth.family() == PotentialFamily::LogSumExp ? "lattice-count" : "exact-LP";
  c.error_budget = std::ldexp(1.0, -40);
  return c;
}

// ------------------------------------------------------------ Legendre

std::optional<Rational> LegendreConjugate::value(const RatVec& y) const {
  check_dim(domain.dim(), y.size());
  auto r = lp::lower_envelope(points, values, y);
  if (r.status != lp::Status::Optimal) return std::nullopt;
  return r.value;
}

MaxAffineFunction LegendreConjugate::conjugate() const {
  std::vector<AffinePiece> pieces;
  for (const auto& p : points) pieces.push_back({p, -*value(p)});
  return MaxAffineFunction(std::move(pieces)).pruned();
}

LegendreConjugate legendre(const MaxAffineFunction& f) {
  LegendreConjugate c;
  c.domain = f.slope_polytope();
  for (const auto& p : f.pieces()) {
    c.points.push_back(p.slope);
    c.values.push_back(-p.offset);
  }
  return c;
}

// ------------------------------------------------------------ radial decomposition

std::optional<MaxAffineFunction> radial_component(const MaxAffineFunction& f, const Rational& lambda) {
  // inf_t max_i (l_i(x) + t (s_i - lambda)) is the max over the vertices of
  // {mu >= 0 : sum mu = 1, sum mu (s - lambda) = 0} of sum mu l_i(x); those
  // vertices are single pieces with s_i = lambda and pairs straddling it.
  const auto& ps = f.pieces();
  std::vector<Rational> s;
  for (const auto& p : ps) s.push_back(coordinate_sum(p.slope));
  std::vector<AffinePiece> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (s[i] == lambda) out.push_back(ps[i]);
    if (s[i] >= lambda) continue;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (s[j] <= lambda) continue;
      Rational mi = (s[j] - lambda) / (s[j] - s[i]);
      Rational mj = (lambda - s[i]) / (s[j] - s[i]);
      out.push_back({mi * ps[i].slope + mj * ps[j].slope, mi * ps[i].offset + mj * ps[j].offset});
    }
  }
  if (out.empty()) return std::nullopt;
  return MaxAffineFunction(std::move(out)).pruned();
}

MaxAffineFunction reassemble(const std::map<Rational, MaxAffineFunction>& components) {
  std::vector<AffinePiece> pieces;
  for (const auto& [lambda, f] : components) pieces.insert(pieces.end(), f.pieces().begin(), f.pieces().end());
  if (pieces.empty()) throw Error(ErrorCode::EmptyInput, "nothing to reassemble");
  return MaxAffineFunction(std::move(pieces)).pruned();
}

MaxAffineFunction reassemble(const std::map<Rational, std::optional<MaxAffineFunction>>& components) {
  std::map<Rational, MaxAffineFunction> finite;
  for (const auto& [lambda, f] : components)
    if (f) finite.emplace(lambda, *f);
  return reassemble(finite);
}

// ------------------------------------------------------------ growth comparison

GrowthComparison grows_slower(const ConvexFunction& f, const ConvexFunction& g) {
  auto family = [](const ConvexFunction& h) -> std::optional<PotentialFamily> {
    if (auto* s = std::get_if<SmoothToricPotential>(&h)) return s->family();
    return std::nullopt;
  };
  auto ff = family(f);
  auto gf = family(g);
  bool f_ok = !ff || *ff != PotentialFamily::LogSumExp;
  bool g_ok = !gf || *gf != PotentialFamily::ScaledFubiniStudy;
  if (!f_ok || !g_ok)
    throw Error(ErrorCode::IncomparableFamilies,
                "grows_slower compares a max-affine or Fubini-Study function against a max-affine or log-sum-exp one");
  check_dim(dim(f), dim(g));
  GrowthComparison c;
  c.violations = inclusion_violations(slope_polytope(f), slope_polytope(g));
  c.slower = strict_inclusion(slope_polytope(f), slope_polytope(g));
  return c;
}

double regularized_max(double a, double b, double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::NonpositiveEpsilon, "regularisation width must be positive");
  double s = a - b;
  if (std::abs(s) >= eps) return std::max(a, b);
  return (a + b) / 2 + (s * s + eps * eps) / (4 * eps);
}

}  // namespace growthlab
