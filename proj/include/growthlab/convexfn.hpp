// Convex functions on R^n: finite maxima of affine forms, smooth toric
// potentials, Legendre conjugates, radial decomposition, certified bounds
// on differences and the regularised max used for gluing.

#ifndef GROWTHLAB_CONVEXFN_HPP
#define GROWTHLAB_CONVEXFN_HPP

#include "growthlab/polytope.hpp"
#include "growthlab/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace growthlab {

/// x -> <slope, x> + offset.
struct AffinePiece {
  RatVec slope;
  Rational offset;

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
  friend bool operator<(const AffinePiece& a, const AffinePiece& b) {
    return a.slope != b.slope ? a.slope < b.slope : a.offset < b.offset;
  }
};

/// max_i (<slope_i, x> + offset_i). Pieces are kept sorted; the slope
/// polytope is computed once at construction.
class MaxAffineFunction {
 public:
  /// Throws Error(EmptyInput) for no pieces, Error(DimensionMismatch) for
  /// slopes of different lengths.
  explicit MaxAffineFunction(std::vector<AffinePiece> pieces);

  /// h_P(x) = max over vertices v of <v, x>.
  static MaxAffineFunction support_function(const Polytope& p);

  std::size_t dim() const { return slope_polytope_.dim(); }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const Polytope& slope_polytope() const { return slope_polytope_; }

  double eval(std::span<const double> x) const;
  Rational eval(const RatVec& x) const;

  /// Drops every piece that is never the unique maximum.
  MaxAffineFunction pruned() const;
  MaxAffineFunction shifted(const Rational& c) const;

  friend bool operator==(const MaxAffineFunction& a, const MaxAffineFunction& b) { return a.pieces_ == b.pieces_; }

 private:
  std::vector<AffinePiece> pieces_;
  std::vector<std::vector<double>> slopes_d_;
  std::vector<double> offsets_d_;
  Polytope slope_polytope_;
};

enum class PotentialFamily { LogSumExp, ScaledFubiniStudy, Affine };

const char* to_string(PotentialFamily f);

/// Smooth convex potentials with a polyhedral shadow h_S, where S is the
/// slope polytope: shadow_gap() bounds potential - h_S from both sides.
class SmoothToricPotential {
 public:
  /// u_k(x) = (1/k) ln sum_{a in kP cap Z^n} exp(<a, x>). Throws
  /// Error(NotNormalized) unless P is a lattice polytope normalised at 0.
  static SmoothToricPotential logsumexp(const Polytope& p, long k);
  /// lambda ln(1 + sum_i exp(x_i)); lambda >= 0.
  static SmoothToricPotential fubini_study(std::size_t dim, const Rational& lambda);
  static SmoothToricPotential affine(RatVec slope, const Rational& offset);

  PotentialFamily family() const { return family_; }
  std::size_t dim() const { return dim_; }
  long k() const { return k_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& offset() const { return offset_; }
  /// Exponent set (LogSumExp) or the single slope (Affine).
  const std::vector<RatVec>& exponents() const { return exponents_; }
  /// P for LogSumExp, lambda * Sigma for Fubini-Study, {slope} for Affine.
  const Polytope& slope_polytope() const { return slope_polytope_; }
  /// Number of exponents for LogSumExp.
  std::size_t lattice_count() const { return exponents_.size(); }

  double eval(std::span<const double> x) const;
  std::vector<double> gradient(std::span<const double> x) const;

  /// Polyhedral function the potential differs from by a bounded amount.
  MaxAffineFunction shadow() const;
  /// [lo, hi] with lo <= potential - shadow <= hi everywhere.
  std::pair<double, double> shadow_gap() const;

 private:
  PotentialFamily family_ = PotentialFamily::Affine;
  std::size_t dim_ = 0;
  long k_ = 0;
  Rational lambda_;
  Rational offset_;
  std::vector<RatVec> exponents_;
  std::vector<std::vector<double>> exponents_d_;
  Polytope slope_polytope_;
};

using ConvexFunction = std::variant<MaxAffineFunction, SmoothToricPotential>;

/// Throws Error(DimensionMismatch).
double eval(const ConvexFunction& f, std::span<const double> x);
std::size_t dim(const ConvexFunction& f);
const Polytope& slope_polytope(const ConvexFunction& f);

/// Certifies inf_bound <= f - g <= sup_bound on all of R^n. Infinite bounds
/// are +-infinity and carry a direction along which the bound is violated.
struct BoundedDifferenceCertificate {
  double sup_bound = 0;
  double inf_bound = 0;
  std::optional<Rational> sup_exact;
  std::optional<Rational> inf_exact;
  std::string method;  // "exact-LP", "lattice-count" or "grid+recession"
  std::optional<RatVec> sup_recession;
  std::optional<RatVec> inf_recession;
  /// Points where the exact extremes are attained (slopes of active pieces).
  std::vector<RatVec> witnesses;
  double error_budget = 0;

  bool bounded() const;
};

/// Bounds f - g for MaxAffine pairs (exact) and for a MaxAffine function
/// against a smooth potential (exact shadow bound plus the analytic gap).
/// Throws Error(IncomparableFamilies) for two smooth potentials and
/// Error(DimensionMismatch).
BoundedDifferenceCertificate sup_difference(const ConvexFunction& f, const ConvexFunction& g);

/// Legendre conjugate of a max-affine function: +infinity off `domain`, on
/// it the lower convex envelope of the lifted points (slope_j, -offset_j).
struct LegendreConjugate {
  Polytope domain;
  std::vector<RatVec> points;
  RatVec values;

  /// nullopt means +infinity.
  std::optional<Rational> value(const RatVec& y) const;
  /// x -> sup_y <x, y> - f*(y) as a max-affine function.
  MaxAffineFunction conjugate() const;
};

LegendreConjugate legendre(const MaxAffineFunction& f);

/// v(x) = inf_t f(x + t(1,...,1)) - lambda t, computed exactly; nullopt when
/// v is identically -infinity (lambda outside the coordinate-sum range of
/// the slopes).
std::optional<MaxAffineFunction> radial_component(const MaxAffineFunction& f, const Rational& lambda);

/// Pointwise maximum of the components, pruned. Components given as nullopt
/// (-infinity) are skipped. Throws Error(EmptyInput) when nothing is left.
MaxAffineFunction reassemble(const std::map<Rational, MaxAffineFunction>& components);
MaxAffineFunction reassemble(const std::map<Rational, std::optional<MaxAffineFunction>>& components);

struct GrowthComparison {
  bool slower = false;
  /// Vertices of slope(f) on or beyond facets of slope(g).
  std::vector<InclusionViolation> violations;
};

/// Whether g - f is bounded below and proper, decided by strict inclusion
/// of slope polytopes. f must be max-affine or Fubini-Study, g max-affine or
/// log-sum-exp; otherwise Error(IncomparableFamilies).
GrowthComparison grows_slower(const ConvexFunction& f, const ConvexFunction& g);

/// (a + b)/2 + rho(a - b) with rho(s) = |s|/2 for |s| >= eps and
/// (s^2 + eps^2)/(4 eps) otherwise. Throws Error(NonpositiveEpsilon).
double regularized_max(double a, double b, double eps);

}  // namespace growthlab

#endif  // GROWTHLAB_CONVEXFN_HPP
