// Exact rational convex polytopes with both vertex and inequality
// descriptions.
//
// A Polytope always carries its vertices (sorted lexicographically), its
// facet inequalities and, when it is not full-dimensional, the equations
// of its affine hull. Facets of a lower-dimensional polytope are
// inequalities on ambient coordinates that are valid on the affine hull.
// The empty polytope is an ordinary value.

#ifndef GROWTHLAB_POLYTOPE_HPP
#define GROWTHLAB_POLYTOPE_HPP

#include "growthlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace growthlab {

/// {x : <normal, x> <= offset}, or the hyperplane <normal, x> = offset when
/// used as an equation. Normals produced by this library are primitive
/// integer vectors.
struct HalfSpace {
  RatVec normal;
  Rational offset;

  Rational slack(const RatVec& x) const { return offset - dot(normal, x); }
  bool contains(const RatVec& x) const { return dot(normal, x) <= offset; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal != b.normal) return a.normal < b.normal ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.offset != b.offset) return a.offset < b.offset ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

class Polytope {
 public:
  Polytope() = default;

  static Polytope empty(std::size_t dim);

  /// Convex hull of arbitrary points; the result may be lower-dimensional.
  static Polytope convex_hull(std::span<const RatVec> points, std::size_t dim);

  /// Polytope {x : <a, x> <= b for all given half-spaces}. Throws
  /// Error(DegenerateInput) when the region is unbounded.
  static Polytope from_inequalities(std::size_t dim, std::span<const HalfSpace> halfspaces);

  std::size_t dim() const { return dim_; }
  /// Dimension of the affine hull; -1 for the empty polytope.
  int affine_dim() const { return affine_dim_; }
  bool is_empty() const { return vertices_.empty(); }
  bool is_full_dimensional() const { return affine_dim_ == static_cast<int>(dim_); }

  const std::vector<RatVec>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<HalfSpace>& equations() const { return equations_; }
  /// vertex_facets()[i] lists the facets tight at vertex i.
  const std::vector<std::vector<std::size_t>>& vertex_facets() const { return vertex_facets_; }

  bool contains(const RatVec& x) const;
  bool is_lattice() const;
  bool has_vertex(const RatVec& v) const;
  std::optional<std::size_t> vertex_index(const RatVec& v) const;

  /// Pairs of vertex indices spanning an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Support function max_{y in P} <y, direction>; requires P nonempty.
  Rational support(const RatVec& direction) const;

  Polytope scaled(const Rational& factor) const;
  Polytope translated(const RatVec& shift) const;
  /// Image under x -> m x (m square).
  Polytope transformed(const RatMatrix& m) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<HalfSpace> facets_;
  std::vector<HalfSpace> equations_;
  std::vector<std::vector<std::size_t>> vertex_facets_;

  void index_incidences();
};

/// Extreme rays of the pointed cone {y : rows y <= 0} by the double
/// description method; requires rank(rows) = dimension of y. Rays are
/// returned as primitive integer vectors.
std::vector<RatVec> extreme_rays(const RatMatrix& rows);

/// Full-dimensional convex hull. Throws Error(DegenerateInput) when the
/// affine span of `points` is not all of Q^n, Error(EmptyInput) when empty.
Polytope hull(std::span<const RatVec> points);

struct VertexVerdict {
  RatVec vertex;
  /// Primitive edge generators at the vertex, sorted lexicographically.
  std::vector<RatVec> generators;
  /// Determinant of the generator matrix (rows = generators) when there are
  /// exactly n generators.
  std::optional<Rational> determinant;
  bool delzant = false;
};

struct DelzantReport {
  std::vector<VertexVerdict> vertices;
  bool delzant = false;
};

/// Per-vertex smoothness check. Throws Error(NotLatticePolytope).
DelzantReport is_delzant(const Polytope& p);

/// x -> matrix (x - origin), with matrix in GL(n, Z).
struct UnimodularMap {
  RatMatrix matrix;
  RatVec origin;

  RatVec apply(const RatVec& x) const;
  RatVec inverse_apply(const RatVec& y) const;
};

struct Normalization {
  Polytope polytope;
  UnimodularMap map;
};

/// Moves the Delzant vertex v to the origin and its edges onto the
/// coordinate axes: the primitive edge generators, sorted lexicographically
/// in descending order, are sent to e_1, ..., e_n. A polytope already in
/// normal position at the origin gets the identity map. Throws Error(NotDelzantVertex).
Normalization normalize_at_vertex(const Polytope& p, const RatVec& v);

/// True when 0 is a vertex and p lies in the nonnegative orthant.
bool is_normalized(const Polytope& p);

/// Integer points of k P in lexicographic order.
std::vector<RatVec> lattice_points(const Polytope& p, long k = 1);

/// Exact Lebesgue volume; 0 for lower-dimensional input.
Rational volume(const Polytope& p);

/// Lattice-normalised volume of a polytope whose affine hull is a rational
/// hyperplane (codimension one); e.g. the slices produced by slice().
/// Throws Error(DegenerateInput) for other codimensions.
Rational relative_volume(const Polytope& p);

/// sup{lambda >= 0 : lambda * Sigma is contained in p}. Throws
/// Error(NotNormalized) unless is_normalized(p).
Rational simplex_inclusion(const Polytope& p);

/// Same quantity for any polytope containing the origin.
Rational simplex_scale_inside(const Polytope& p);

/// p intersected with {x : x_1 + ... + x_n = level}; possibly empty.
Polytope slice(const Polytope& p, const Rational& level);

/// A vertex of A and a facet of B that it violates (or touches, when the
/// facet does not pass through the origin).
struct InclusionViolation {
  RatVec vertex;
  HalfSpace facet;
  bool outside = false;  // strictly violates rather than touches
};

/// All violations of "A is strictly inside B away from the origin":
/// every vertex of A satisfies every facet of B, strictly for the facets of
/// B that do not pass through the origin.
std::vector<InclusionViolation> inclusion_violations(const Polytope& a, const Polytope& b);

/// A is contained in B and avoids every facet of B that does not contain
/// the origin. For B with the origin in its interior (or outside B) this is
/// A inside int(B); at a normalised vertex the coordinate facets through 0
/// may be touched.
bool strict_inclusion(const Polytope& a, const Polytope& b);

}  // namespace growthlab

#endif  // GROWTHLAB_POLYTOPE_HPP
