// Monomial orders, valuations and Okounkov bodies of graded monomial
// series, the infinitesimal F-map, and the Chebyshev transform of toric
// potentials.

#ifndef GROWTHLAB_OKOUNKOV_HPP
#define GROWTHLAB_OKOUNKOV_HPP

#include "growthlab/convexfn.hpp"
#include "growthlab/polytope.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace growthlab {

enum class OrderKind { Lex, Deglex };

/// Lex or deglex on exponents read in flag order: position i of the flag
/// holds coordinate permutation[i]. An empty permutation is the identity.
struct MonomialOrder {
  OrderKind kind = OrderKind::Deglex;
  std::vector<std::size_t> permutation;

  /// Throws Error(DimensionMismatch).
  std::strong_ordering compare(const RatVec& a, const RatVec& b) const;
  /// Exponent rewritten in flag coordinates. Throws Error(DimensionMismatch)
  /// when the permutation does not match.
  RatVec to_flag(const RatVec& a) const;
  std::string name() const;
};

/// Checks that `perm` is a permutation of 0..n-1.
bool is_permutation_of(const std::vector<std::size_t>& perm, std::size_t n);

/// Smallest exponent of `support` under `order`, in flag coordinates.
/// Throws Error(EmptySupport).
RatVec valuation(std::span<const RatVec> support, const MonomialOrder& order);

/// Degree k -> exponents of the monomials spanning the degree-k piece.
struct GradedMonomialSeries {
  std::size_t dim = 0;
  std::map<long, std::vector<RatVec>> degrees;

  /// W_k = lattice points of kP for k = 1..k_max.
  static GradedMonomialSeries toric(const Polytope& p, long k_max);
  /// W_k = {a in kP : a_coord >= ceil(fraction * k)}.
  static GradedMonomialSeries restricted(const Polytope& p, long k_max, std::size_t coord, const Rational& fraction);

  /// W_j + W_k is contained in W_{j+k} whenever all three are stored.
  bool multiplicative() const;
};

struct OkounkovBody {
  MonomialOrder order;
  /// Hull of the normalised valuations v/k of degree k.
  std::map<long, Polytope> hull_at_k;
  /// Hull of all stored levels.
  Polytope limit;
  /// The top level already equals `limit`.
  bool stabilized = false;
};

/// Throws Error(EmptyInput) when no degree up to k_max is stored.
OkounkovBody okounkov_body(const GradedMonomialSeries& series, const MonomialOrder& order, long k_max);

/// Image under F(a) = (|a|, a_1, ..., a_{n-1}).
Polytope infinitesimal_map(const Polytope& b);

struct VolumeIdentity {
  Rational normalized_volume;  // n! vol(limit)
  Rational vol_L;
  bool equal = false;
  /// |n! vol(hull_at_k) - vol_L| per stored level.
  std::map<long, Rational> gaps;
  /// Gaps are nonincreasing along the doubling chain 1, 2, 4, ...
  bool gaps_nonincreasing = true;
};

VolumeIdentity volume_identity_check(const OkounkovBody& body, const Rational& vol_L);

/// Largest lambda with lambda * Sigma inside b. Throws Error(NotNormalized).
Rational seshadri_from_body(const Polytope& b);

struct ChebyshevValue {
  /// nullopt means +infinity (y outside the slope polytope).
  std::optional<double> value;
  std::optional<Rational> exact;
  /// Certified range from the polyhedral shadow.
  double lower = 0;
  double upper = 0;
  std::string method;  // "exact-LP", "closed-form" or "newton"
  int iterations = 0;
};

/// u*(y) = sup_x <y, x> - u(x). Log-sum-exp potentials need y in the
/// interior of their slope polytope (Error(DomainError) on the boundary);
/// Error(NonConvergence) if Newton's method stalls.
ChebyshevValue chebyshev_transform(const ConvexFunction& u, const RatVec& y);

}  // namespace growthlab

#endif  // GROWTHLAB_OKOUNKOV_HPP
