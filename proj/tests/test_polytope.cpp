#include "fixtures.hpp"
#include "oracles.hpp"

#include "growthlab/error.hpp"
#include "growthlab/polytope.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace growthlab;
using namespace fixtures;

namespace {

std::vector<oracle::Facet> library_facets(const Polytope& p) {
  std::vector<oracle::Facet> out;
  for (const auto& f : p.facets()) out.push_back({f.normal, f.offset});
  std::sort(out.begin(), out.end());
  return out;
}

bool has_facet(const Polytope& p, const RatVec& normal, const Rational& offset) {
  return std::any_of(p.facets().begin(), p.facets().end(),
                     [&](const HalfSpace& h) { return h.normal == normal && h.offset == offset; });
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(simplest_between(Rational(1, 3), Rational(2, 3)) == Rational(1, 2));
  CHECK(primitive(RatVec{Rational(2, 3), Rational(-4, 3)}) == RatVec{1, -2});
}

TEST_CASE("matrix inverse and determinant") {
  RatMatrix b{{0, 0, -1}, {1, 0, -1}, {0, 1, -1}};
  RatMatrix inv = inverse(b);
  CHECK(inv == RatMatrix{{-1, 1, 0}, {-1, 0, 1}, {-1, 0, 0}});
  CHECK(determinant(b) == -1);
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), Error);
  auto ns = nullspace(RatMatrix{{1, 1, 1}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(coordinate_sum(v) == 0);
}

TEST_CASE("hull of the standard simplex") {
  Polytope s = from_points({{0, 0}, {1, 0}, {0, 1}});
  CHECK(s.vertices().size() == 3);
  CHECK(s.facets().size() == 3);
  CHECK(has_facet(s, {-1, 0}, 0));
  CHECK(has_facet(s, {0, -1}, 0));
  CHECK(has_facet(s, {1, 1}, 1));
}

TEST_CASE("hull drops interior points") {
  Polytope q = from_points({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}});
  CHECK(q == square());
  CHECK(q.vertices().size() == 4);
}

TEST_CASE("hull of a lower-dimensional set is rejected") {
  std::vector<RatVec> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK_THROWS_AS(hull(line), Error);
  std::vector<RatVec> none;
  CHECK_THROWS_AS(hull(none), Error);
  Polytope seg = Polytope::convex_hull(line, 2);
  CHECK(seg.affine_dim() == 1);
  CHECK(seg.vertices().size() == 2);
}

TEST_CASE("hull facets match brute-force enumeration on random 3-D points") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = oracle::random_points(rng, 10, 3);
    auto facets = oracle::brute_force_facets(pts);
    auto verts = oracle::vertices_from_facets(pts, facets);
    Polytope p = hull(pts);
    CHECK(library_facets(p) == facets);
    CHECK(p.vertices() == verts);
  }
}

TEST_CASE("H and V descriptions regenerate each other") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polytope p = hull(oracle::random_delzant(rng, n));
    CHECK(hull(p.vertices()) == p);
    Polytope q = Polytope::from_inequalities(n, p.facets());
    CHECK(q == p);
    CHECK(q.facets() == p.facets());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) CHECK(p.vertex_facets()[i].size() >= n);
  }
}

TEST_CASE("unbounded inequality systems are rejected") {
  std::vector<HalfSpace> quadrant{{{-1, 0}, 0}, {{0, -1}, 0}};
  CHECK_THROWS_AS(Polytope::from_inequalities(2, quadrant), Error);
}

TEST_CASE("Delzant verdicts") {
  auto s = is_delzant(simplex(2));
  CHECK(s.delzant);
  CHECK(s.vertices.size() == 3);

  auto bad = is_delzant(from_points({{0, 0}, {2, 0}, {0, 1}}));
  CHECK_FALSE(bad.delzant);
  for (const auto& v : bad.vertices) {
    if (v.vertex == RatVec{0, 1}) {
      CHECK_FALSE(v.delzant);
      CHECK(v.generators == std::vector<RatVec>{{0, -1}, {2, -1}});
      CHECK(*v.determinant == 2);
    } else {
      CHECK(v.delzant);
    }
  }

  auto t = is_delzant(trapezoid());
  CHECK(t.delzant);
  for (const auto& v : t.vertices) CHECK(abs(*v.determinant) == 1);

  CHECK_THROWS_AS(is_delzant(from_points({{0, 0}, {Rational(1, 2), 0}, {0, 1}})), Error);
}

TEST_CASE("a 3-D vertex with four edges is not Delzant") {
  Polytope pyramid = from_points({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}});
  auto r = is_delzant(pyramid);
  CHECK_FALSE(r.delzant);
  for (const auto& v : r.vertices)
    if (v.vertex == RatVec{1, 1, 1}) CHECK(v.generators.size() == 4);
}

TEST_CASE("normalisation at a vertex") {
  auto n1 = normalize_at_vertex(simplex(2), {1, 0});
  CHECK(n1.polytope == simplex(2));
  CHECK(abs(determinant(n1.map.matrix)) == 1);
  Polytope s2 = simplex(2);
  for (const auto& v : s2.vertices()) CHECK(n1.map.inverse_apply(n1.map.apply(v)) == v);

  auto n2 = normalize_at_vertex(square(), {2, 2});
  CHECK(n2.polytope == square());

  auto n3 = normalize_at_vertex(trapezoid(), {0, 0});
  CHECK(n3.polytope == trapezoid());
  CHECK(n3.map.matrix == RatMatrix{{1, 0}, {0, 1}});

  CHECK_THROWS_AS(normalize_at_vertex(from_points({{0, 0}, {2, 0}, {0, 1}}), {0, 1}), Error);
  CHECK_THROWS_AS(normalize_at_vertex(square(), {1, 1}), Error);
}

TEST_CASE("normalisation always lands on the coordinate axes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polytope p = hull(oracle::random_delzant(rng, n));
    REQUIRE(is_delzant(p).delzant);
    for (const auto& v : p.vertices()) {
      auto norm = normalize_at_vertex(p, v);
      CHECK(is_normalized(norm.polytope));
      CHECK(volume(norm.polytope) == volume(p));
      for (const auto& verdict : is_delzant(norm.polytope).vertices) {
        if (!is_zero(verdict.vertex)) continue;
        std::vector<RatVec> axes;
        for (std::size_t i = 0; i < n; ++i) axes.push_back(unit(n, i));
        std::sort(axes.begin(), axes.end());
        CHECK(verdict.generators == axes);
      }
    }
  }
}

TEST_CASE("lattice point counts") {
  CHECK(lattice_points(simplex(2), 2).size() == 6);
  CHECK(lattice_points(square(), 1).size() == 9);
  auto t = lattice_points(trapezoid(), 1);
  CHECK(t == std::vector<RatVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {3, 0}});
  CHECK(lattice_points(simplex(3), 3).size() == 20);
}

TEST_CASE("lattice counts obey Pick's theorem on random polygons") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Polytope p = hull(oracle::random_delzant(rng, 2));
    for (long k = 1; k <= 3; ++k) {
      std::size_t total = lattice_points(p, k).size();
      std::size_t boundary = oracle::boundary_lattice_count(p.vertices(), k);
      Rational interior = Rational(static_cast<long>(total)) - static_cast<long>(boundary);
      CHECK(volume(p.scaled(k)) == interior + Rational(static_cast<long>(boundary), 2) - 1);
    }
  }
}

TEST_CASE("volumes") {
  CHECK(volume(simplex(2)) == Rational(1, 2));
  CHECK(volume(square()) == 4);
  CHECK(volume(trapezoid()) == 2);
  CHECK(volume(simplex(3)) == Rational(1, 6));
  CHECK(volume(Polytope::convex_hull(std::vector<RatVec>{{0, 0}, {1, 1}}, 2)) == 0);
}

TEST_CASE("volume scales by k^n") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polytope p = hull(oracle::random_delzant(rng, n));
    Rational v = volume(p);
    for (long k = 1; k <= 3; ++k) {
      Rational kn = 1;
      for (std::size_t i = 0; i < n; ++i) kn *= k;
      CHECK(volume(p.scaled(k)) == kn * v);
    }
  }
}

TEST_CASE("simplex inclusion") {
  CHECK(simplex_inclusion(simplex(2)) == 1);
  CHECK(simplex_inclusion(square()) == 2);
  CHECK(simplex_inclusion(trapezoid()) == 1);
  CHECK_THROWS_AS(simplex_inclusion(square().translated({1, 1})), Error);
}

TEST_CASE("simplex inclusion agrees with bisection over membership") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polytope p = hull(oracle::random_delzant(rng, n));
    Polytope q = normalize_at_vertex(p, p.vertices().front()).polytope;
    auto fits = [&](const Rational& lambda) {
      for (std::size_t i = 0; i < n; ++i)
        if (!q.contains(lambda * unit(n, i))) return false;
      return true;
    };
    Rational lo = 0, hi = 64;
    while (hi - lo > Rational(1, Integer(1) << 40)) {
      Rational mid = (lo + hi) / 2;
      (fits(mid) ? lo : hi) = mid;
    }
    Rational exact = simplex_inclusion(q);
    CHECK(lo <= exact);
    CHECK(exact <= hi);
  }
}

TEST_CASE("slices") {
  CHECK(slice(simplex(2), 1).vertices() == std::vector<RatVec>{{0, 1}, {1, 0}});
  CHECK(slice(square(), 3).vertices() == std::vector<RatVec>{{1, 2}, {2, 1}});
  CHECK(slice(simplex(2), 2).is_empty());
  CHECK(slice(simplex(2), 0).vertices() == std::vector<RatVec>{{0, 0}});
  CHECK(relative_volume(slice(square(), 2)) == 2);
}

TEST_CASE("strict inclusion") {
  CHECK(strict_inclusion(simplex(2, Rational(3, 2)), square()));
  CHECK_FALSE(strict_inclusion(simplex(2), simplex(2)));
  CHECK_FALSE(strict_inclusion(simplex(2, 2), trapezoid()));
  auto viol = inclusion_violations(simplex(2, 2), trapezoid());
  bool found = std::any_of(viol.begin(), viol.end(), [](const InclusionViolation& v) {
    return v.vertex == RatVec{0, 2} && v.outside;
  });
  CHECK(found);
}

TEST_CASE("empty polytope is a value") {
  Polytope e = Polytope::empty(2);
  CHECK(e.is_empty());
  CHECK(e.affine_dim() == -1);
  CHECK(volume(e) == 0);
}
