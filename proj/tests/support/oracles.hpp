// Independent reference computations for the test suite. Nothing here calls
// the library's hull, volume or LP code; only the Rational type is shared.

#ifndef GROWTHLAB_TESTS_ORACLES_HPP
#define GROWTHLAB_TESTS_ORACLES_HPP

#include "growthlab/rational.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using growthlab::RatVec;
using growthlab::Rational;

struct Facet {
  RatVec normal;  // primitive integer
  Rational offset;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  }
};

/// Every hyperplane through n affinely independent input points that has all
/// points on one side, for full-dimensional point sets in dimension 2 or 3.
std::vector<Facet> brute_force_facets(const std::vector<RatVec>& points);

/// Input points that are the unique maximiser of some facet-normal
/// combination: points tight on at least n facets with independent normals.
std::vector<RatVec> vertices_from_facets(const std::vector<RatVec>& points, const std::vector<Facet>& facets);

/// Exact area by the shoelace formula after an exact angular sort (n = 2),
/// or exact volume by coning facet polygons from the centroid (n = 3).
Rational volume(const std::vector<RatVec>& vertices, const std::vector<Facet>& facets);

/// Integer points of k P by scanning the bounding box of the vertices.
std::size_t lattice_count(const std::vector<RatVec>& vertices, const std::vector<Facet>& facets, long k);

/// Lattice points on the boundary of a lattice polygon, from edge gcds.
std::size_t boundary_lattice_count(const std::vector<RatVec>& polygon_vertices, long k);

/// Random Delzant lattice polytope in dimension 2 or 3: a box, simplex,
/// trapezoid or prism with some corners chopped, moved by a random
/// unimodular map and a random translation.
std::vector<RatVec> random_delzant(std::mt19937_64& rng, std::size_t dim);

/// Random rational points with small numerators and denominators.
std::vector<RatVec> random_points(std::mt19937_64& rng, std::size_t count, std::size_t dim);

/// sup_x (y x - f(x)) for a convex f on the line, by golden-section search on
/// [-bound, bound].
double conjugate_1d(const std::function<double(double)>& f, double y, double bound = 1e3);

/// inf_t g(t) for convex g, by a coarse grid on [lo, hi] then golden section.
double convex_inf(const std::function<double(double)>& g, double lo, double hi);

/// sup_x (<y, x> - u(x)) over the box [-bound, bound]^2 by nested golden
/// section (concave objective).
double conjugate_2d(const std::function<double(double, double)>& u, double y1, double y2, double bound = 40);

}  // namespace oracle

#endif  // GROWTHLAB_TESTS_ORACLES_HPP
