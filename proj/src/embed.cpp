#include "growthlab/embed.hpp"

#include "growthlab/error.hpp"
#include "growthlab/io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

namespace growthlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ln |u_i|^2 for u uniform on the unit sphere of C^n: the squared moduli are
// Dirichlet(1, ..., 1).
std::vector<double> log_weights(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  double total = 0;
  for (auto& v : w) total += (v = std::max(e(rng), 1e-300));
  for (auto& v : w) v = std::log(v / total);
  return w;
}

std::vector<double> along(const std::vector<double>& logw, double s) {
  std::vector<double> x(logw);
  for (auto& v : x) v += s;
  return x;
}

}  // namespace

GluedPotential::GluedPotential(SmoothToricPotential source, MaxAffineFunction target, double C, double epsilon)
    : source_(std::move(source)), target_(std::move(target)), C_(C), epsilon_(epsilon) {
  if (!(epsilon > 0)) throw Error(ErrorCode::NonpositiveEpsilon, "regularisation width must be positive");
  if (source_.dim() != target_.dim()) throw Error(ErrorCode::DimensionMismatch, "source and target dimensions differ");
}

double GluedPotential::eval(std::span<const double> x) const {
  return regularized_max(shifted_source(x), target_.eval(x), epsilon_);
}

GluedPotential fit_ball(const GrowthCondition& gc, const SmoothToricPotential& source, double R,
                        const FitOptions& options) {
  if (!(R > 0)) throw Error(ErrorCode::DomainError, "ball radius must be positive");
  if (!(options.epsilon > 0)) throw Error(ErrorCode::NonpositiveEpsilon, "regularisation width must be positive");
  const std::size_t n = gc.dim();
  if (source.dim() != n) throw Error(ErrorCode::DimensionMismatch, "source dimension differs from the polytope");

  auto cmp = grows_slower(source, gc.representative);
  if (!cmp.slower) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& v : cmp.violations) w.push_back(to_json(v));
    throw Error(ErrorCode::GrowthViolation, "source does not grow slower than the growth condition",
                nlohmann::json{{"violations", w}}.dump());
  }
  auto obstruction = volume_obstruction(source, gc);
  if (!obstruction.passed)
    throw Error(ErrorCode::GrowthViolation, "source volume exceeds the Monge-Ampere volume",
                nlohmann::json{{"source_volume", to_json(obstruction.source_volume)},
                               {"volume_MA", to_json(obstruction.volume_MA)}}
                    .dump());
  const Polytope& S = source.slope_polytope();
  if (!S.contains(zeros(n)))
    throw Error(ErrorCode::DomainError, "source slope polytope must contain the origin");

  const double eps = options.epsilon;
  const double slack = eps + options.margin;
  const double rho = 2 * std::log(R);
  auto [lo_s, hi_s] = source.shadow_gap();

  // On X_R every x_i <= rho, so with m = max(0, max x_i):
  // h_P(x) <= c_max m and h_S(x) >= mu m.
  GluingCertificate cert;
  cert.R = R;
  cert.epsilon = eps;
  cert.margin = options.margin;
  cert.seed = options.seed;
  cert.source_simplex_scale = simplex_scale_inside(S);
  double room = std::max(0.0, to_double(gc.c_max - cert.source_simplex_scale));
  const double C = room * std::max(0.0, rho) - lo_s + slack;
  cert.C = C;

  // For every vertex v of S and every i, v + eta e_i lies in P, hence
  // h_P(x) >= h_S(x) + eta max_i x_i, and max_i x_i >= ln(r^2 / n) at |z| = r.
  std::optional<Rational> eta;
  for (const auto& f : gc.polytope.facets())
    for (const auto& v : S.vertices())
      for (std::size_t i = 0; i < n; ++i)
        if (f.normal[i] > 0) {
          Rational room_i = f.slack(v) / f.normal[i];
          if (!eta || room_i < *eta) eta = room_i;
        }
  if (!eta || *eta <= 0) throw Error(ErrorCode::NonConvergence, "no room between source and target polytopes");
  cert.eta = *eta;
  double K = C + slack + hi_s;
  double log_rp = std::max(std::log(R), (K / to_double(*eta) + std::log(static_cast<double>(n))) / 2);
  if (!(log_rp <= options.log_horizon)) throw Error(ErrorCode::NonConvergence, "outer radius beyond the horizon");
  cert.log_R_prime = log_rp;
  cert.R_prime = log_rp < 700 ? std::exp(log_rp) : kInf;
  const double rho_p = 2 * log_rp;

  GluedPotential glued(source, gc.representative, C, eps);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double dn = static_cast<double>(n);

  // Inner region: z uniform in B_R.
  {
    RegionCheck& c = cert.inner_check;
    c.min_margin = kInf;
    c.passed = true;
    double worst = -kInf;
    for (std::size_t s = 0; s < options.region_samples; ++s) {
      double lr2 = rho + std::log(std::max(uniform(rng), 1e-300)) / dn;
      auto x = along(log_weights(rng, n), lr2);
      double a = glued.shifted_source(x), b = glued.target().eval(x);
      c.min_margin = std::min(c.min_margin, a - b);
      worst = std::max(worst, b - source.eval(x));
      c.passed = c.passed && a - b > eps && glued.eval(x) == a;
      ++c.points;
    }
    cert.C_estimate = worst + slack;
  }
  // Outer region: |z| between R' and 4 R'.
  {
    RegionCheck& c = cert.outer_check;
    c.min_margin = kInf;
    c.passed = true;
    for (std::size_t s = 0; s < options.region_samples; ++s) {
      double lr2 = rho_p + 2 * std::log(1 + 3 * uniform(rng));
      auto x = along(log_weights(rng, n), lr2);
      double a = glued.shifted_source(x), b = glued.target().eval(x);
      c.min_margin = std::min(c.min_margin, b - a);
      c.passed = c.passed && b - a > eps && glued.eval(x) == b;
      ++c.points;
    }
  }
  // Band: along rays, locate where source + C meets the target.
  {
    BandCheck& c = cert.band_check;
    c.min_excess = kInf;
    c.max_excess = -kInf;
    c.min_log_radius = kInf;
    c.max_log_radius = -kInf;
    c.passed = true;
    cert.log_R_prime_estimate = -kInf;
    for (std::size_t r = 0; r < options.band_rays; ++r) {
      auto logw = log_weights(rng, n);
      auto diff = [&](double s) {
        auto x = along(logw, s);
        return glued.shifted_source(x) - glued.target().eval(x);
      };
      if (!(diff(rho) > eps) || !(diff(rho_p) < -eps)) {
        c.passed = false;
        continue;
      }
      double lo = rho, hi = rho_p;
      for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi)); ++it) {
        double mid = (lo + hi) / 2;
        (diff(mid) > 0 ? lo : hi) = mid;
      }
      auto x = along(logw, lo);
      double a = glued.shifted_source(x), b = glued.target().eval(x);
      double excess = glued.eval(x) - std::max(a, b);
      c.min_excess = std::min(c.min_excess, excess);
      c.max_excess = std::max(c.max_excess, excess);
      c.min_log_radius = std::min(c.min_log_radius, lo / 2);
      c.max_log_radius = std::max(c.max_log_radius, lo / 2);
      c.passed = c.passed && excess >= 0 && excess <= eps / 4 + 1e-12;
      // Last point where the target is not yet ahead by the full slack.
      double elo = lo, ehi = rho_p;
      for (int it = 0; it < 200 && ehi - elo > 1e-12 * std::max(1.0, std::abs(ehi)); ++it) {
        double mid = (elo + ehi) / 2;
        (diff(mid) > -slack ? elo : ehi) = mid;
      }
      cert.log_R_prime_estimate = std::max(cert.log_R_prime_estimate, ehi / 2);
      ++c.rays;
    }
  }
  // Midpoint convexity over pairs drawn from all three regions.
  {
    ConvexityCheck& c = cert.convexity_check;
    c.min_slack = kInf;
    auto draw = [&]() {
      int region = static_cast<int>(uniform(rng) * 3);
      double lr2;
      if (region == 0)
        lr2 = rho + std::log(std::max(uniform(rng), 1e-300)) / dn;
      else if (region == 1)
        lr2 = rho + (rho_p - rho) * uniform(rng);
      else
        lr2 = rho_p + 2 * std::log(1 + 3 * uniform(rng));
      return along(log_weights(rng, n), lr2);
    };
    for (std::size_t p = 0; p < options.convexity_pairs; ++p) {
      auto x = draw(), y = draw();
      std::vector<double> mid(n);
      for (std::size_t i = 0; i < n; ++i) mid[i] = (x[i] + y[i]) / 2;
      double s = (glued.eval(x) + glued.eval(y)) / 2 - glued.eval(mid);
      c.min_slack = std::min(c.min_slack, s);
      ++c.pairs;
    }
    c.passed = c.min_slack >= -1e-12;
  }
  glued.certificate = cert;
  return glued;
}

std::vector<ProfileRow> radial_profile(const GluedPotential& g, double t0, double t1, std::size_t steps) {
  std::vector<ProfileRow> rows;
  const std::size_t n = g.source().dim();
  for (std::size_t i = 0; i <= steps; ++i) {
    double t = steps ? t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(steps) : t0;
    std::vector<double> x(n, t);
    rows.push_back({t, g.shifted_source(x), g.target().eval(x), g.eval(x)});
  }
  return rows;
}

GromovReport gromov_lower_bound(const GrowthCondition& gc) {
  GromovReport r;
  r.width_lower_bound = seshadri_theorem_B(gc).seshadri_lp;
  r.radius = std::sqrt(to_double(r.width_lower_bound) / std::numbers::pi);
  return r;
}

VolumeObstruction volume_obstruction(const SmoothToricPotential& source, const GrowthCondition& gc) {
  Rational nfact = 1;
  for (std::size_t i = 2; i <= gc.dim(); ++i) nfact *= i;
  VolumeObstruction v;
  v.source_volume = nfact * volume(source.slope_polytope());
  v.volume_MA = nfact * volume(gc.polytope);
  v.passed = v.source_volume <= v.volume_MA;
  return v;
}

}  // namespace growthlab
