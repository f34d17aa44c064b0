// Gluing a smooth source potential into the growth representative with the
// regularised max, in logarithmic coordinates x_i = ln|z_i|^2. The z-ball
// B_R becomes X_R = {x : sum_i exp(x_i) <= R^2}.

#ifndef GROWTHLAB_EMBED_HPP
#define GROWTHLAB_EMBED_HPP

#include "growthlab/convexfn.hpp"
#include "growthlab/growth.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace growthlab {

struct RegionCheck {
  /// Smallest margin seen (source + C - target inside, the reverse outside).
  double min_margin = 0;
  std::size_t points = 0;
  /// Every sampled point took the exact branch.
  bool passed = false;
};

struct BandCheck {
  std::size_t rays = 0;
  /// min and max of glued - max(source + C, target) at the crossings.
  double min_excess = 0;
  double max_excess = 0;
  /// Range of ln|z| where source + C = target along the sampled rays.
  double min_log_radius = 0;
  double max_log_radius = 0;
  bool passed = false;
};

struct ConvexityCheck {
  std::size_t pairs = 0;
  double min_slack = 0;
  bool passed = false;
};

struct GluingCertificate {
  double R = 0;
  double C = 0;
  double R_prime = 0;  // +inf when exp(log_R_prime) overflows
  double log_R_prime = 0;
  double epsilon = 0.25;
  double margin = 1;
  /// Largest lambda with lambda * Sigma inside the source slope polytope.
  Rational source_simplex_scale;
  /// Smallest room eta with v + eta e_i in the target polytope for every
  /// source vertex v.
  Rational eta;
  /// Sampled estimates (not certified) of the smallest admissible C and R'.
  double C_estimate = 0;
  double log_R_prime_estimate = 0;
  RegionCheck inner_check;
  BandCheck band_check;
  RegionCheck outer_check;
  ConvexityCheck convexity_check;
  std::uint64_t seed = 0;

  bool passed() const {
    return inner_check.passed && band_check.passed && outer_check.passed && convexity_check.passed;
  }
};

class GluedPotential {
 public:
  GluedPotential(SmoothToricPotential source, MaxAffineFunction target, double C, double epsilon);

  const SmoothToricPotential& source() const { return source_; }
  const MaxAffineFunction& target() const { return target_; }
  double C() const { return C_; }
  double epsilon() const { return epsilon_; }

  /// regularized_max(source + C, target).
  double eval(std::span<const double> x) const;
  double shifted_source(std::span<const double> x) const { return source_.eval(x) + C_; }

  GluingCertificate certificate;

 private:
  SmoothToricPotential source_;
  MaxAffineFunction target_;
  double C_;
  double epsilon_;
};

struct FitOptions {
  double epsilon = 0.25;
  double margin = 1;
  std::uint64_t seed = 0;
  std::size_t region_samples = 1000;
  std::size_t band_rays = 256;
  std::size_t convexity_pairs = 10000;
  /// Upper limit for ln R'.
  double log_horizon = 1e6;
};

/// Throws Error(GrowthViolation) with the violating vertices and facets when
/// the source does not grow slower than the representative, Error(DomainError)
/// for R <= 0 or a source slope polytope without the origin, and
/// Error(NonConvergence) when R' exceeds the horizon.
GluedPotential fit_ball(const GrowthCondition& gc, const SmoothToricPotential& source, double R,
                        const FitOptions& options = {});

struct ProfileRow {
  double t;
  double source;
  double target;
  double glued;
};

/// Values along x = t (1, ..., 1) for `steps` + 1 equally spaced t.
std::vector<ProfileRow> radial_profile(const GluedPotential& g, double t0, double t1, std::size_t steps);

struct GromovReport {
  Rational width_lower_bound;  // the Seshadri constant
  /// r with pi r^2 = width_lower_bound.
  double radius = 0;
};

GromovReport gromov_lower_bound(const GrowthCondition& gc);

struct VolumeObstruction {
  Rational source_volume;  // n! vol of the source slope polytope
  Rational volume_MA;
  bool passed = false;
};

VolumeObstruction volume_obstruction(const SmoothToricPotential& source, const GrowthCondition& gc);

}  // namespace growthlab

#endif  // GROWTHLAB_EMBED_HPP
