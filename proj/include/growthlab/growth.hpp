// The canonical toric growth condition h_P + O(1) at a vertex, with its
// smooth log-sum-exp approximants, volume and Seshadri routes, and the
// radial decomposition of the representative.

#ifndef GROWTHLAB_GROWTH_HPP
#define GROWTHLAB_GROWTH_HPP

#include "growthlab/convexfn.hpp"
#include "growthlab/polytope.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace growthlab {

struct GrowthCondition {
  Polytope source;
  RatVec vertex;
  UnimodularMap map;
  /// The polytope normalised at `vertex`.
  Polytope polytope;
  /// h of `polytope`.
  MaxAffineFunction representative;
  std::vector<long> levels;
  std::vector<SmoothToricPotential> approximants;
  /// Largest coordinate sum over `polytope`.
  Rational c_max;
  /// o1_certificates[i] bounds approximants[i] - representative.
  std::vector<BoundedDifferenceCertificate> o1_certificates;

  std::size_t dim() const { return polytope.dim(); }
  /// Throws Error(UnknownLevel).
  const SmoothToricPotential& approximant(long k) const;
};

/// Normalises p at `vertex` and attaches u_k for every k in `levels`.
/// Throws Error(NotLatticePolytope) and Error(NotDelzantVertex) when p is
/// not a Delzant lattice polytope or `vertex` is not one of its vertices.
GrowthCondition build(const Polytope& p, const RatVec& vertex, std::vector<long> levels = {1, 2, 4});

/// Hull of the slopes of the representative; equals gc.polytope.
Polytope recover_polytope(const GrowthCondition& gc);

struct SampledRecovery {
  std::vector<std::vector<double>> hull;
  /// Upper bound on the Hausdorff distance to gc.polytope.
  double hausdorff_bound = 0;
  /// n ln N(k) / k.
  double tolerance = 0;
  long k = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Gradients of u_k at uniform samples of the x-space ball of `radius`.
SampledRecovery recover_polytope_sampled(const GrowthCondition& gc, long k, std::size_t samples, std::uint64_t seed,
                                         double radius = 50);

struct VolumeOptions {
  long k = 4;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  double radius = 50;
  bool numerical = true;
};

struct VolumeReport {
  Rational volume_polytope;
  /// n! vol(P): the total Monge-Ampere mass.
  Rational volume_MA;
  /// Monte-Carlo gradient-image estimate of volume_MA.
  std::optional<double> volume_numerical;
  double relative_error = 0;
  long k = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

VolumeReport volume_theorem_A(const GrowthCondition& gc, const VolumeOptions& options = {});

/// Monte-Carlo estimate of the gradient-image volume of `u` (dimension 1-3).
double gradient_image_volume(const SmoothToricPotential& u, std::size_t samples, std::uint64_t seed,
                             double radius = 50);

struct SeshadriReport {
  Rational seshadri_lp;
  Rational seshadri_domination;
  /// Final bisection bracket: lo is dominated, hi is not.
  Rational bracket_lo;
  Rational bracket_hi;
  int iterations = 0;
  /// (n! vol)^(1/n).
  double upper_bound = 0;
  double slack = 0;
};

/// Simplex inclusion and growth domination by bisection to width 2^-40.
SeshadriReport seshadri_theorem_B(const GrowthCondition& gc);

/// Whether lambda ln(1 + sum e^x) <= h + O(1) for the representative h.
bool fubini_study_dominated(const GrowthCondition& gc, const Rational& lambda);

/// Distinct coordinate sums of the vertices of p, ascending.
std::vector<Rational> vertex_levels(const Polytope& p);

/// Radial components of the representative; nullopt stands for -infinity.
/// With no levels given, uses vertex_levels(gc.polytope).
std::map<Rational, std::optional<MaxAffineFunction>> decompose(const GrowthCondition& gc,
                                                               std::vector<Rational> levels = {});

/// Bound on u_k - h_P from the stored approximant.
BoundedDifferenceCertificate equivalence_theorem_1(const GrowthCondition& gc, long k);
/// Bound on u_k - u_m through the shared comparison with h_P.
BoundedDifferenceCertificate equivalence_theorem_1(const GrowthCondition& gc, long k, long m);

}  // namespace growthlab

#endif  // GROWTHLAB_GROWTH_HPP
