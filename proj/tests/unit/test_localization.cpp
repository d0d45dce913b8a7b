#include "doctest.h"
#include "eqorbit/localization.hpp"

using namespace eqorbit;

TEST_CASE("P^1 with two fixed points") {
  auto w = points_weight_symbols();
  auto amb = make_symbols({"H"});
  auto u = SparsePoly::variable(w, "u"), v = SparsePoly::variable(w, "v");
  std::vector<FixedLocus> loci = {
      {"p0", FixedLocus::Kind::Point, {{"H", -u}}, {{v - u, 0}}},
      {"p1", FixedLocus::Kind::Point, {{"H", -v}}, {{u - v, 0}}},
  };
  auto h = SparsePoly::variable(amb, "H");
  CHECK(ab_integrate(loci, SparsePoly::constant(amb, 1), w).is_zero());
  CHECK(ab_integrate(loci, h, w) == SparsePoly::constant(w, 1));
  CHECK(ab_integrate(loci, h * h, w) == -(u + v));
  CHECK(ab_contributions(loci, h, w).size() == 2);
}

TEST_CASE("rational sums with linear denominators") {
  auto t = make_symbols({"u", "v"});
  auto u = SparsePoly::variable(t, "u"), v = SparsePoly::variable(t, "v");
  auto one = SparsePoly::constant(t, 1);
  CHECK(sum_rational_terms({{one, {u - v}}, {one, {v - u}}}, t).is_zero());
  CHECK(sum_rational_terms({{u, {u - v}}, {v, {v - u}}}, t) == one);
  CHECK(sum_rational_terms({{u * u, {u - v}}, {v * v, {v - u}}}, t) == u + v);
  CHECK(sum_rational_terms({{u * v * Rational(2), {u * Rational(2)}}}, t) == v);
  CHECK_THROWS_AS(sum_rational_terms({{one, {u}}}, t), ConsistencyError);
}

TEST_CASE("Grassmannian intersection numbers") {
  // G(2,4): sigma_1^4 = 2, sigma_11^2 = 1
  auto g24 = grassmann_chern_numbers(2, 4, {{4, 0}, {0, 2}, {2, 1}});
  CHECK(g24[0] == 2);
  CHECK(g24[1] == 1);
  CHECK(g24[2] == 1);
  // G(3,5) = G(2,5): deg = 5
  auto g35 = grassmann_chern_numbers(3, 5, {{6, 0, 0}, {4, 1, 0}, {2, 2, 0}, {3, 0, 1}, {1, 1, 1}, {0, 0, 2}});
  CHECK(g35 == std::vector<Rational>{5, 3, 2, 1, 1, 1});
  CHECK(grassmann_chern_numbers_pieri(3, 5, {{6, 0, 0}, {4, 1, 0}, {2, 2, 0}, {3, 0, 1}, {1, 1, 1}, {0, 0, 2}}) == g35);
  // G(1,3) = P^2 with c1(S) = -H
  CHECK(grassmann_chern_numbers(1, 3, {{2}})[0] == 1);
  CHECK_THROWS_AS(grassmann_chern_numbers(3, 5, {{5, 0, 0}}), UsageError);
  CHECK_THROWS_AS(grassmann_chern_numbers(3, 3, {{0, 0, 0}}), UsageError);
  auto c = make_symbols(std::vector<Symbol>{{"c1", 1}, {"c2", 2}, {"c3", 3}});
  CHECK(grassmann_integrate(3, 5, parse_poly(c, "c1^6 - c3^2")) == 4);
}

TEST_CASE("points on P^1 by localization") {
  auto uv = make_symbols({"u", "v"});
  CHECK(points_localization({1, 1, 1}) == SparsePoly::constant(uv, 6));
  CHECK(points_localization({2, 1, 1}) == parse_poly(uv, "24*u + 24*v"));
  CHECK(points_localization({1, 1, 1, 1}) == parse_poly(uv, "48*u + 48*v"));
  CHECK(p1_points_fixed_loci({1, 1, 1}).size() == 8);
  CHECK_THROWS_AS(p1_points_fixed_loci({1, 1}), UsageError);
  CHECK_THROWS_AS(p1_points_fixed_loci({1, 0, 1}), UsageError);
}

TEST_CASE("phi integrand is a polynomial in t") {
  auto t = make_symbols({"u", "v", "t"});
  // d = 1: ((t+v)(t+u) - uv)/t = t + u + v
  CHECK(points_phi(1, t, "t") == parse_poly(t, "t + u + v"));
}
