#include "growthlab/growth.hpp"

#include "float_hull.hpp"
#include "growthlab/error.hpp"
#include "growthlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace growthlab {

namespace {

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<std::vector<double>> sample_gradients(const SmoothToricPotential& u, std::size_t samples,
                                                  std::uint64_t seed, double radius) {
  const std::size_t n = u.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  std::vector<std::vector<double>> out;
  out.reserve(samples);
  std::vector<double> x(n);
  for (std::size_t s = 0; s < samples; ++s) {
    double norm = 0;
    for (auto& c : x) {
      c = normal(rng);
      norm += c * c;
    }
    norm = std::sqrt(norm);
    double r = radius * std::pow(uniform(rng), 1.0 / static_cast<double>(n));
    for (auto& c : x) c *= norm > 0 ? r / norm : 0;
    out.push_back(u.gradient(x));
  }
  return out;
}

std::vector<std::vector<double>> reduce_cloud(const std::vector<std::vector<double>>& cloud) {
  if (cloud.front().size() == 3) return fhull::extreme_candidates(cloud, 4096);
  return cloud;
}

}  // namespace

const SmoothToricPotential& GrowthCondition::approximant(long k) const {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (levels[i] == k) return approximants[i];
  throw Error(ErrorCode::UnknownLevel, "level " + std::to_string(k) + " is not among the approximants");
}

GrowthCondition build(const Polytope& p, const RatVec& vertex, std::vector<long> levels) {
  if (vertex.size() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "vertex dimension differs from polytope");
  auto report = is_delzant(p);
  for (const auto& v : report.vertices) {
    if (!v.delzant) {
      nlohmann::json w{{"vertex", to_json(v.vertex)}, {"generators", to_json(v.generators)}};
      throw Error(ErrorCode::NotDelzantVertex, "polytope is not Delzant at " + to_string(v.vertex), w.dump());
    }
  }
  if (!p.has_vertex(vertex))
    throw Error(ErrorCode::NotDelzantVertex, to_string(vertex) + " is not a vertex",
                nlohmann::json{{"vertex", to_json(vertex)}}.dump());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (long k : levels)
    if (k < 1) throw Error(ErrorCode::DomainError, "levels must be positive");

  auto nz = normalize_at_vertex(p, vertex);
  GrowthCondition gc{p,
                     vertex,
                     nz.map,
                     nz.polytope,
                     MaxAffineFunction::support_function(nz.polytope),
                     levels,
                     {},
                     0,
                     {}};
  gc.c_max = coordinate_sum(gc.polytope.vertices().front());
  for (const auto& v : gc.polytope.vertices()) gc.c_max = std::max(gc.c_max, coordinate_sum(v));
  for (long k : levels) {
    gc.approximants.push_back(SmoothToricPotential::logsumexp(gc.polytope, k));
    gc.o1_certificates.push_back(sup_difference(gc.approximants.back(), gc.representative));
  }
  return gc;
}

Polytope recover_polytope(const GrowthCondition& gc) {
  std::vector<RatVec> slopes;
  for (const auto& p : gc.representative.pieces()) slopes.push_back(p.slope);
  return Polytope::convex_hull(slopes, gc.dim());
}

SampledRecovery recover_polytope_sampled(const GrowthCondition& gc, long k, std::size_t samples, std::uint64_t seed,
                                         double radius) {
  if (samples == 0) throw Error(ErrorCode::DomainError, "need at least one sample");
  auto u = SmoothToricPotential::logsumexp(gc.polytope, k);
  auto cloud = sample_gradients(u, samples, seed, radius);
  SampledRecovery r;
  r.hull = fhull::hull_vertices(reduce_cloud(cloud));
  if (r.hull.empty()) r.hull = fhull::extreme_candidates(cloud, 64);
  // The gradient image lies inside P, so only the vertices of P can be far
  // from the sampled hull.
  for (const auto& v : gc.polytope.vertices()) {
    auto vd = to_double(v);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& g : cloud) {
      double d = 0;
      for (std::size_t i = 0; i < vd.size(); ++i) d += (g[i] - vd[i]) * (g[i] - vd[i]);
      best = std::min(best, d);
    }
    r.hausdorff_bound = std::max(r.hausdorff_bound, std::sqrt(best));
  }
  r.tolerance = static_cast<double>(gc.dim()) * std::log(static_cast<double>(u.lattice_count())) /
                static_cast<double>(k);
  r.k = k;
  r.samples = samples;
  r.seed = seed;
  return r;
}

double gradient_image_volume(const SmoothToricPotential& u, std::size_t samples, std::uint64_t seed, double radius) {
  if (samples == 0) throw Error(ErrorCode::DomainError, "need at least one sample");
  auto cloud = sample_gradients(u, samples, seed, radius);
  return fhull::hull_volume(reduce_cloud(cloud));
}

VolumeReport volume_theorem_A(const GrowthCondition& gc, const VolumeOptions& options) {
  VolumeReport r;
  r.volume_polytope = volume(gc.polytope);
  r.volume_MA = factorial(gc.dim()) * r.volume_polytope;
  r.k = options.k;
  r.samples = options.samples;
  r.seed = options.seed;
  if (options.numerical && gc.dim() <= 3) {
    auto u = SmoothToricPotential::logsumexp(gc.polytope, options.k);
    double est = to_double(factorial(gc.dim())) * gradient_image_volume(u, options.samples, options.seed, options.radius);
    r.volume_numerical = est;
    r.relative_error = std::abs(est - to_double(r.volume_MA)) / to_double(r.volume_MA);
  }
  return r;
}

bool fubini_study_dominated(const GrowthCondition& gc, const Rational& lambda) {
  auto fs = SmoothToricPotential::fubini_study(gc.dim(), lambda);
  return std::isfinite(sup_difference(fs, gc.representative).sup_bound);
}

SeshadriReport seshadri_theorem_B(const GrowthCondition& gc) {
  SeshadriReport r;
  r.seshadri_lp = simplex_inclusion(gc.polytope);
  const Rational width = Rational(1) / Rational(Integer(1) << 40);
  Rational lo = 0, hi = gc.c_max + 1;
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (fubini_study_dominated(gc, mid))
      lo = mid;
    else
      hi = mid;
    ++r.iterations;
  }
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  Rational snapped = simplest_between(lo, hi);
  r.seshadri_domination = fubini_study_dominated(gc, snapped) ? snapped : lo;
  double vol = to_double(factorial(gc.dim()) * volume(gc.polytope));
  r.upper_bound = std::pow(vol, 1.0 / static_cast<double>(gc.dim()));
  r.slack = r.upper_bound - to_double(r.seshadri_lp);
  return r;
}

std::vector<Rational> vertex_levels(const Polytope& p) {
  std::vector<Rational> out;
  for (const auto& v : p.vertices()) out.push_back(coordinate_sum(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<Rational, std::optional<MaxAffineFunction>> decompose(const GrowthCondition& gc,
                                                               std::vector<Rational> levels) {
  if (levels.empty()) levels = vertex_levels(gc.polytope);
  std::map<Rational, std::optional<MaxAffineFunction>> out;
  for (const auto& lambda : levels) out.emplace(lambda, radial_component(gc.representative, lambda));
  return out;
}

BoundedDifferenceCertificate equivalence_theorem_1(const GrowthCondition& gc, long k) {
  const auto& u = gc.approximant(k);
  return sup_difference(u, gc.representative);
}

BoundedDifferenceCertificate equivalence_theorem_1(const GrowthCondition& gc, long k, long m) {
  const auto& uk = gc.approximant(k);
  const auto& um = gc.approximant(m);
  BoundedDifferenceCertificate c;
  c.method = "lattice-count";
  c.error_budget = std::ldexp(1.0, -40);
  if (k == m) {
    c.sup_exact = 0;
    c.inf_exact = 0;
    return c;
  }
  c.sup_bound = uk.shadow_gap().second - um.shadow_gap().first;
  c.inf_bound = uk.shadow_gap().first - um.shadow_gap().second;
  return c;
}

}  // namespace growthlab
