#include "fixtures.hpp"
#include "oracles.hpp"

#include "growthlab/error.hpp"
#include "growthlab/growth.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace growthlab;
using namespace fixtures;

TEST_CASE("build the growth condition of the simplex") {
  auto gc = build(simplex(2), {0, 0}, {4, 1, 2, 2});
  CHECK(gc.levels == std::vector<long>{1, 2, 4});
  CHECK(gc.c_max == 1);
  CHECK(gc.polytope == simplex(2));
  CHECK(gc.representative.slope_polytope() == simplex(2));
  const double expected[] = {std::log(3.0), std::log(6.0) / 2, std::log(15.0) / 4};
  REQUIRE(gc.o1_certificates.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(gc.o1_certificates[i].inf_bound == 0);
    CHECK(gc.o1_certificates[i].sup_bound == doctest::Approx(expected[i]).epsilon(1e-14));
  }
  CHECK(gc.approximant(2).lattice_count() == 6);
  CHECK_THROWS_AS(gc.approximant(3), Error);
}

TEST_CASE("build normalises at the requested vertex") {
  auto sq = build(square(), {2, 2}, {1});
  CHECK(sq.polytope == square());
  CHECK(sq.c_max == 4);
  auto t = build(trapezoid(), {0, 0}, {1});
  CHECK(t.c_max == 3);
  auto t2 = build(trapezoid(), {3, 0}, {1});
  CHECK(is_normalized(t2.polytope));
  CHECK(volume(t2.polytope) == 2);
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(build(from_points({{0, 0}, {2, 0}, {0, 1}}), {0, 0}), Error);
  CHECK_THROWS_AS(build(square(), {1, 1}), Error);
  CHECK_THROWS_AS(build(square(), {0, 0, 0}), Error);
  try {
    build(from_points({{0, 0}, {2, 0}, {0, 1}}), {0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDelzantVertex);
    CHECK(e.witness().find("\"vertex\"") != std::string::npos);
  }
}

TEST_CASE("recover the polytope from the gradient image") {
  CHECK(recover_polytope(build(simplex(2), {0, 0}, {1})) == simplex(2));
  CHECK(recover_polytope(build(trapezoid(), {0, 0}, {1})) == trapezoid());
  auto r = recover_polytope_sampled(build(square(), {0, 0}, {4}), 4, 10000, 3);
  CHECK(r.hausdorff_bound < 0.5);
  CHECK(r.hausdorff_bound <= r.tolerance);
  for (const auto& v : r.hull)
    for (double c : v) {
      CHECK(c >= -1e-9);
      CHECK(c <= 2 + 1e-9);
    }
}

TEST_CASE("Monge-Ampere volume") {
  CHECK(volume_theorem_A(build(simplex(2), {0, 0}, {1}), {.numerical = false}).volume_MA == 1);
  CHECK(volume_theorem_A(build(square(), {0, 0}, {1}), {.numerical = false}).volume_MA == 8);
  CHECK(volume_theorem_A(build(trapezoid(), {0, 0}, {1}), {.numerical = false}).volume_MA == 4);
  for (long a : {1, 2, 5})
    CHECK(volume_theorem_A(build(from_points({{0}, {a}}), {0}, {1}), {.numerical = false}).volume_MA == a);
}

TEST_CASE("Monte-Carlo volume route") {
  auto r = volume_theorem_A(build(square(), {0, 0}, {1}), {.k = 4, .samples = 100000, .seed = 1});
  REQUIRE(r.volume_numerical.has_value());
  CHECK(r.relative_error < 0.02);
  auto a = volume_theorem_A(build(square(), {0, 0}, {1}), {.k = 4, .samples = 2000, .seed = 5});
  auto b = volume_theorem_A(build(square(), {0, 0}, {1}), {.k = 4, .samples = 2000, .seed = 5});
  CHECK(*a.volume_numerical == *b.volume_numerical);
}

TEST_CASE("Seshadri constant by two routes") {
  struct Case {
    Polytope p;
    Rational eps;
    double upper;
  };
  for (const auto& c : {Case{simplex(2), 1, 1.0}, Case{square(), 2, std::sqrt(8.0)}, Case{trapezoid(), 1, 2.0}}) {
    auto r = seshadri_theorem_B(build(c.p, c.p.vertices().front(), {1}));
    CHECK(r.seshadri_lp == c.eps);
    CHECK(r.seshadri_domination == c.eps);
    CHECK(r.bracket_lo <= c.eps);
    CHECK(c.eps <= r.bracket_hi);
    CHECK(r.upper_bound == doctest::Approx(c.upper).epsilon(1e-12));
    CHECK(r.slack >= -1e-12);
  }
}

TEST_CASE("Seshadri routes agree and respect the volume bound on random polytopes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polytope p = hull(oracle::random_delzant(rng, n));
    auto gc = build(p, p.vertices().back(), {1});
    auto r = seshadri_theorem_B(gc);
    CHECK(r.seshadri_lp == r.seshadri_domination);
    CHECK(to_double(r.seshadri_lp) <= r.upper_bound + std::ldexp(1.0, -20));
  }
}

TEST_CASE("volume does not depend on the vertex") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 2;
    Polytope p = hull(oracle::random_delzant(rng, n));
    Rational first = -1;
    for (const auto& v : p.vertices()) {
      Rational vm = volume_theorem_A(build(p, v, {1}), {.numerical = false}).volume_MA;
      if (first < 0) first = vm;
      CHECK(vm == first);
    }
  }
}

TEST_CASE("nested polytopes have ordered invariants") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<long> size(1, 4);
  for (int trial = 0; trial < 20; ++trial) {
    long a = size(rng), b = size(rng), da = size(rng) - 1, db = size(rng) - 1;
    Polytope inner = from_points({{0, 0}, {a, 0}, {a, b}, {0, b}});
    Polytope outer = from_points({{0, 0}, {a + da, 0}, {a + da, b + db}, {0, b + db}});
    auto gi = build(inner, {0, 0}, {1}), go = build(outer, {0, 0}, {1});
    CHECK(seshadri_theorem_B(gi).seshadri_lp <= seshadri_theorem_B(go).seshadri_lp);
    CHECK(volume_theorem_A(gi, {.numerical = false}).volume_MA <= volume_theorem_A(go, {.numerical = false}).volume_MA);
  }
}

TEST_CASE("decomposition into radial components") {
  auto gs = build(simplex(2), {0, 0}, {1});
  auto parts = decompose(gs, {1, 2});
  CHECK(*parts.at(1) == MaxAffineFunction({{{0, 1}, 0}, {{1, 0}, 0}}));
  CHECK_FALSE(parts.at(2).has_value());

  auto gq = build(square(), {0, 0}, {1});
  auto all = decompose(gq, {0, 1, 2, 3, 4});
  CHECK(reassemble(all) == gq.representative.pruned());
  CHECK(vertex_levels(square()) == std::vector<Rational>{0, 2, 4});
  CHECK(reassemble(decompose(gq)) == gq.representative.pruned());

  std::mt19937_64 rng(53);
  auto gt = build(trapezoid(), {0, 0}, {1});
  auto re = reassemble(decompose(gt));
  std::uniform_int_distribution<long> num(-30, 30), den(1, 5);
  for (int i = 0; i < 1000; ++i) {
    RatVec x{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    CHECK(re.eval(x) == gt.representative.eval(x));
  }
}

TEST_CASE("equivalence of approximants") {
  auto gs = build(simplex(2), {0, 0}, {1, 2});
  auto c = equivalence_theorem_1(gs, 1, 2);
  CHECK(c.bounded());
  CHECK(c.sup_bound - c.inf_bound <= std::log(3.0) + std::log(6.0) / 2 + 1e-12);
  auto same = equivalence_theorem_1(gs, 2, 2);
  CHECK(same.sup_bound == 0);
  CHECK(same.inf_bound == 0);
  CHECK_THROWS_AS(equivalence_theorem_1(gs, 3), Error);

  auto gt = build(trapezoid(), {0, 0}, {1});
  auto ct = equivalence_theorem_1(gt, 1);
  CHECK(ct.inf_bound == 0);
  CHECK(ct.sup_bound == doctest::Approx(std::log(6.0)));

  // The certified band really contains u_1 - u_2 at sampled points.
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> x{u(rng), u(rng)};
    double d = gs.approximant(1).eval(x) - gs.approximant(2).eval(x);
    CHECK(d <= c.sup_bound + 1e-10);
    CHECK(d >= c.inf_bound - 1e-10);
  }
}
