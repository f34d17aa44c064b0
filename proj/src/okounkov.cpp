#include "growthlab/okounkov.hpp"

#include "growthlab/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace growthlab {

bool is_permutation_of(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto i : perm) {
    if (i >= n || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

RatVec MonomialOrder::to_flag(const RatVec& a) const {
  if (permutation.empty()) return a;
  if (!is_permutation_of(permutation, a.size()))
    throw Error(ErrorCode::DimensionMismatch, "flag permutation does not match the exponent dimension");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[permutation[i]];
  return out;
}

std::strong_ordering MonomialOrder::compare(const RatVec& a, const RatVec& b) const {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "exponents of different dimension");
  if (kind == OrderKind::Deglex) {
    Rational da = coordinate_sum(a), db = coordinate_sum(b);
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  RatVec fa = to_flag(a), fb = to_flag(b);
  if (fa == fb) return std::strong_ordering::equal;
  return fa < fb ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string MonomialOrder::name() const {
  std::string s = kind == OrderKind::Lex ? "lex" : "deglex";
  if (!permutation.empty()) {
    s += "[";
    for (std::size_t i = 0; i < permutation.size(); ++i) s += (i ? "," : "") + std::to_string(permutation[i]);
    s += "]";
  }
  return s;
}

RatVec valuation(std::span<const RatVec> support, const MonomialOrder& order) {
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "valuation of the zero section");
  const RatVec* best = &support.front();
  for (const auto& a : support)
    if (order.compare(a, *best) < 0) best = &a;
  return order.to_flag(*best);
}

GradedMonomialSeries GradedMonomialSeries::toric(const Polytope& p, long k_max) {
  GradedMonomialSeries s;
  s.dim = p.dim();
  for (long k = 1; k <= k_max; ++k) s.degrees[k] = lattice_points(p, k);
  return s;
}

GradedMonomialSeries GradedMonomialSeries::restricted(const Polytope& p, long k_max, std::size_t coord,
                                                      const Rational& fraction) {
  if (coord >= p.dim()) throw Error(ErrorCode::DimensionMismatch, "restriction coordinate out of range");
  GradedMonomialSeries s;
  s.dim = p.dim();
  for (long k = 1; k <= k_max; ++k) {
    Rational bound = ceil(fraction * k);
    auto& w = s.degrees[k];
    for (auto& a : lattice_points(p, k))
      if (a[coord] >= bound) w.push_back(std::move(a));
  }
  return s;
}

bool GradedMonomialSeries::multiplicative() const {
  for (const auto& [j, wj] : degrees) {
    for (const auto& [k, wk] : degrees) {
      if (k < j) continue;
      auto it = degrees.find(j + k);
      if (it == degrees.end()) continue;
      std::set<RatVec> target(it->second.begin(), it->second.end());
      for (const auto& a : wj)
        for (const auto& b : wk)
          if (!target.count(a + b)) return false;
    }
  }
  return true;
}

OkounkovBody okounkov_body(const GradedMonomialSeries& series, const MonomialOrder& order, long k_max) {
  OkounkovBody body;
  body.order = order;
  std::vector<RatVec> all;
  long top = 0;
  for (const auto& [k, w] : series.degrees) {
    if (k < 1 || k > k_max || w.empty()) continue;
    // Each monomial is its own section, so every exponent is a valuation.
    std::vector<RatVec> pts;
    for (const auto& a : w) pts.push_back(Rational(1, k) * order.to_flag(a));
    body.hull_at_k.emplace(k, Polytope::convex_hull(pts, series.dim));
    for (const auto& v : body.hull_at_k.at(k).vertices()) all.push_back(v);
    top = k;
  }
  if (all.empty()) throw Error(ErrorCode::EmptyInput, "series has no sections up to the requested degree");
  body.limit = Polytope::convex_hull(all, series.dim);
  body.stabilized = body.hull_at_k.at(top) == body.limit;
  return body;
}

Polytope infinitesimal_map(const Polytope& b) {
  std::vector<RatVec> image;
  for (const auto& v : b.vertices()) {
    RatVec f(v.size());
    f[0] = coordinate_sum(v);
    for (std::size_t i = 1; i < v.size(); ++i) f[i] = v[i - 1];
    image.push_back(std::move(f));
  }
  return Polytope::convex_hull(image, b.dim());
}

VolumeIdentity volume_identity_check(const OkounkovBody& body, const Rational& vol_L) {
  Rational nfact = 1;
  for (std::size_t i = 2; i <= body.limit.dim(); ++i) nfact *= i;
  VolumeIdentity r;
  r.vol_L = vol_L;
  r.normalized_volume = nfact * volume(body.limit);
  r.equal = r.normalized_volume == vol_L;
  for (const auto& [k, h] : body.hull_at_k) r.gaps[k] = abs(nfact * volume(h) - vol_L);
  std::optional<Rational> prev;
  for (long k = 1; r.gaps.count(k); k *= 2) {
    if (prev && r.gaps.at(k) > *prev) r.gaps_nonincreasing = false;
    prev = r.gaps.at(k);
  }
  return r;
}

Rational seshadri_from_body(const Polytope& b) { return simplex_inclusion(b); }

namespace {

bool interior(const Polytope& p, const RatVec& y) {
  if (!p.is_full_dimensional()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(), [&](const HalfSpace& f) { return f.slack(y) > 0; });
}

double lse_conjugate(const SmoothToricPotential& u, const std::vector<double>& y, int& iterations) {
  const std::size_t n = u.dim();
  const auto& ex = u.exponents();
  const double k = static_cast<double>(u.k());
  Eigen::MatrixXd A(ex.size(), n);
  for (std::size_t j = 0; j < ex.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) A(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = to_double(ex[j][i]);
  Eigen::VectorXd yv = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));
  auto phi = [&](const Eigen::VectorXd& x) {
    std::vector<double> xs(x.data(), x.data() + n);
    return yv.dot(x) - u.eval(xs);
  };
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (iterations = 0; iterations < 500; ++iterations) {
    Eigen::VectorXd d = A * x;
    double m = d.maxCoeff();
    Eigen::VectorXd w = (d.array() - m).exp();
    w /= w.sum();
    Eigen::VectorXd mean = A.transpose() * w;
    Eigen::VectorXd grad = yv - mean / k;
    if (grad.lpNorm<Eigen::Infinity>() < 1e-12) return phi(x);
    Eigen::MatrixXd centered = A.rowwise() - mean.transpose();
    Eigen::MatrixXd hess = centered.transpose() * w.asDiagonal() * centered / k;
    Eigen::VectorXd step = hess.ldlt().solve(grad);
    double f0 = phi(x), t = 1;
    while (t > 1e-12 && phi(x + t * step) < f0 - 1e-15 * std::max(1.0, std::abs(f0))) t /= 2;
    x += t * step;
  }
  throw Error(ErrorCode::NonConvergence, "Newton iteration for the conjugate did not converge");
}

}  // namespace

ChebyshevValue chebyshev_transform(const ConvexFunction& u, const RatVec& y) {
  if (dim(u) != y.size()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from potential");
  ChebyshevValue r;
  if (auto* m = std::get_if<MaxAffineFunction>(&u)) {
    r.method = "exact-LP";
    auto v = legendre(*m).value(y);
    if (!v) {
      r.lower = r.upper = std::numeric_limits<double>::infinity();
      return r;
    }
    r.exact = *v;
    r.value = r.lower = r.upper = to_double(*v);
    return r;
  }
  const auto& s = std::get<SmoothToricPotential>(u);
  auto shadow = legendre(s.shadow()).value(y);
  if (!shadow) {
    r.lower = r.upper = std::numeric_limits<double>::infinity();
    r.method = "exact-LP";
    return r;
  }
  auto [lo, hi] = s.shadow_gap();
  r.lower = to_double(*shadow) - hi;
  r.upper = to_double(*shadow) - lo;
  switch (s.family()) {
    case PotentialFamily::Affine:
      r.method = "exact-LP";
      r.exact = *shadow;
      r.value = to_double(*shadow);
      break;
    case PotentialFamily::ScaledFubiniStudy: {
      r.method = "closed-form";
      double lambda = to_double(s.lambda());
      if (lambda == 0) {
        r.value = 0;
        break;
      }
      auto xlogx = [](double q) { return q > 0 ? q * std::log(q) : 0.0; };
      double q0 = 1, total = 0;
      for (const auto& c : y) {
        double q = to_double(c) / lambda;
        q0 -= q;
        total += xlogx(q);
      }
      r.value = lambda * (total + xlogx(std::max(q0, 0.0)));
      break;
    }
    case PotentialFamily::LogSumExp: {
      if (!interior(s.slope_polytope(), y))
        throw Error(ErrorCode::DomainError, "log-sum-exp conjugate is evaluated on the interior only");
      r.method = "newton";
      r.value = lse_conjugate(s, to_double(y), r.iterations);
      break;
    }
  }
  return r;
}

}  // namespace growthlab
