#include "doctest.h"
#include "eqorbit/chow_tower.hpp"

using namespace eqorbit;

TEST_CASE("P^n over a point: x^{n+1} = 0 and int x^n = 1") {
  auto t = make_symbols({"x"});
  for (int n = 1; n <= 4; ++n) {
    RingTower tower = RingTower(t, {}).extend(BundleClass::trivial(t, n + 1), "x");
    auto x = SparsePoly::variable(t, "x");
    CHECK(tower.fiber_dimension() == n);
    CHECK(tower.normal_form(x.pow(n + 1)).is_zero());
    CHECK(tower.integrate_to_base(x.pow(n)) == SparsePoly::constant(t, 1));
    CHECK(tower.integrate_to_base(x.pow(n - 1)).is_zero());
  }
}

TEST_CASE("Segre classes of a rank-2 bundle") {
  auto t = chern_symbols_with(2, {"x"});
  auto v = BundleClass::from_chern(2, {SparsePoly::variable(t, "c1"), SparsePoly::variable(t, "c2")});
  RingTower tower = RingTower(t, {"c1", "c2"}).extend(v, "x");
  auto x = SparsePoly::variable(t, "x");
  CHECK(tower.relation(0) == parse_poly(t, "x^2 + c1*x + c2"));
  CHECK(tower.fiber_integrate(x) == SparsePoly::constant(t, 1));
  CHECK(tower.fiber_integrate(x.pow(2)) == parse_poly(t, "-c1"));
  CHECK(tower.fiber_integrate(x.pow(3)) == parse_poly(t, "c1^2 - c2"));
  CHECK(tower.fiber_integrate(x.pow(4)) == parse_poly(t, "-c1^3 + 2*c1*c2"));
  auto pw = tower.integrate_powers(SparsePoly::constant(t, 1), x, 5);
  REQUIRE(pw.size() == 5);
  CHECK(pw[3] == parse_poly(t, "c1^2 - c2"));
}

TEST_CASE("P^1 x P^1: int x1 x2 = 1") {
  auto t = make_symbols({"x1", "x2"});
  RingTower tower = RingTower(t, {})
                        .extend(BundleClass::trivial(t, 2), "x1")
                        .extend(BundleClass::trivial(t, 2), "x2");
  auto x1 = SparsePoly::variable(t, "x1"), x2 = SparsePoly::variable(t, "x2");
  CHECK(tower.integrate_to_base(x1 * x2) == SparsePoly::constant(t, 1));
  CHECK(tower.integrate_to_base((x1 + x2).pow(2)) == SparsePoly::constant(t, 2));
  CHECK(tower.drop_top().levels().size() == 1);
  auto j = tower.describe();
  CHECK(j["levels"].size() == 2);
  CHECK(j["levels"][1]["symbol"] == "x2");
}

TEST_CASE("tower errors") {
  auto t = chern_symbols_with(2, {"x", "y"});
  RingTower base(t, {"c1", "c2"});
  CHECK_THROWS_AS(base.fiber_integrate(SparsePoly::constant(t, 1)), UsageError);
  CHECK_THROWS_AS(base.drop_top(), UsageError);
  CHECK_THROWS_AS(base.extend(BundleClass::trivial(t, 2), "c1"), UsageError);
  RingTower one = base.extend(BundleClass::trivial(t, 2), "x");
  CHECK_THROWS_AS(one.extend(BundleClass::trivial(t, 2), "x"), UsageError);
  // c_1 = x^2 is not reduced modulo x^2 = 0
  auto bad = BundleClass::from_chern(1, {SparsePoly::variable(t, "x").pow(2) * Rational(0) +
                                         SparsePoly::variable(t, "c1")});
  CHECK_NOTHROW(one.extend(bad, "y"));
  auto bad2 = BundleClass::from_chern(2, {SparsePoly::variable(t, "c1"), SparsePoly::variable(t, "x").pow(2)});
  CHECK_THROWS_AS(one.extend(bad2, "y"), UsageError);
  auto self = BundleClass::from_chern(1, {SparsePoly::variable(t, "y")});
  CHECK_THROWS_AS(one.extend(self, "y"), UsageError);
  CHECK_THROWS_AS(RingTower(t, {"nope"}), UsageError);
}

TEST_CASE("extend appends a missing hyperplane symbol") {
  auto t = chern_symbols(2);
  auto v = BundleClass::from_chern(2, {SparsePoly::variable(t, "c1"), SparsePoly::variable(t, "c2")});
  RingTower tower = RingTower(t, {"c1", "c2"}).extend(v, "h");
  CHECK(tower.symbols()->contains("h"));
  auto h = SparsePoly::variable(tower.symbols(), "h");
  CHECK(tower.fiber_integrate(h.pow(2)).rebase(t) == parse_poly(t, "-c1"));
}

TEST_CASE("property: normal form is idempotent and multiplicative on a two-level tower") {
  auto t = make_symbols({"a", "b", "x", "y"});
  auto a = SparsePoly::variable(t, "a"), b = SparsePoly::variable(t, "b");
  auto x = SparsePoly::variable(t, "x"), y = SparsePoly::variable(t, "y");
  RingTower tower = RingTower(t, {"a", "b"}).extend(BundleClass::from_roots({a, b, a + b}), "x");
  auto e = elementary_symmetric({x + a, x - b});
  tower = tower.extend(BundleClass::from_chern(2, {tower.normal_form(e[1]), tower.normal_form(e[2])}), "y");
  unsigned seed = 99;
  auto rnd = [&](int m) {
    seed = seed * 1103515245u + 12345u;
    return static_cast<int>((seed >> 16) % static_cast<unsigned>(m));
  };
  for (int i = 0; i < 25; ++i) {
    SparsePoly p(t), q(t);
    for (int k = 0; k < 3; ++k) {
      p += SparsePoly::monomial(t, {unsigned(rnd(2)), unsigned(rnd(2)), unsigned(rnd(5)), unsigned(rnd(4))}, rnd(9) - 4);
      q += SparsePoly::monomial(t, {unsigned(rnd(2)), unsigned(rnd(2)), unsigned(rnd(5)), unsigned(rnd(4))}, rnd(9) - 4);
    }
    auto np = tower.normal_form(p);
    CHECK(tower.normal_form(np) == np);
    CHECK(np.degree_in("x") < 3);
    CHECK(np.degree_in("y") < 2);
    CHECK(tower.normal_form(np * tower.normal_form(q)) == tower.normal_form(p * q));
    CHECK(tower.integrate_to_base(a * p) == a * tower.integrate_to_base(p));
  }
}
