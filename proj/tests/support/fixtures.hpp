// Small polytopes used across the test suite.

#ifndef GROWTHLAB_TESTS_FIXTURES_HPP
#define GROWTHLAB_TESTS_FIXTURES_HPP

#include "growthlab/polytope.hpp"

#include <initializer_list>
#include <vector>

namespace fixtures {

using growthlab::Polytope;
using growthlab::RatVec;
using growthlab::Rational;
using growthlab::operator*;

inline Polytope from_points(std::initializer_list<RatVec> pts) {
  std::vector<RatVec> v(pts);
  return growthlab::hull(v);
}

/// k times the standard simplex in dimension n.
inline Polytope simplex(std::size_t n, const Rational& k = 1) {
  std::vector<RatVec> v{growthlab::zeros(n)};
  for (std::size_t i = 0; i < n; ++i) v.push_back(k * growthlab::unit(n, i));
  return growthlab::hull(v);
}

/// [0, a]^n.
inline Polytope cube(std::size_t n, const Rational& a) {
  std::vector<RatVec> v;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVec p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? a : Rational(0);
    v.push_back(p);
  }
  return growthlab::hull(v);
}

inline Polytope square() { return cube(2, 2); }

/// conv{(0,0),(3,0),(1,1),(0,1)}.
inline Polytope trapezoid() { return from_points({{0, 0}, {3, 0}, {1, 1}, {0, 1}}); }

inline std::vector<double> point(std::initializer_list<double> x) { return x; }

}  // namespace fixtures

#endif  // GROWTHLAB_TESTS_FIXTURES_HPP
