#include <fstream>

#include "doctest.h"
#include "eqorbit/chern_calc.hpp"
#include "eqorbit/orbit_classes.hpp"

using namespace eqorbit;

namespace {
SparsePoly c3(const char* s) { return parse_poly(chern_symbols(3), s); }
const char* const kD6 = "64*(18*c1^6+33*c1^4*c2+12*c1^2*c2^2-85*c1^3*c3-11*c1*c2*c3-7*c3^2)";
std::string fixture() { return std::string(EQORBIT_TEST_DATA) + "/kazarian_a2_a3.json"; }
}  // namespace

TEST_CASE("Kazarian pushforwards for quartics") {
  CHECK(kazarian_class(kazarian_local("A6"), 4) == c3("112*(9*c1^3+12*c1*c2-11*c3)*(2*c1^3+c1*c2+c3)"));
  CHECK(kazarian_class(kazarian_local("D6"), 4) == c3(kD6));
  CHECK(kazarian_class(kazarian_local("E6"), 4) == c3("48*(2*c1^3+c1*c2+c3)*(9*c1^3-6*c1*c2+7*c3)"));
  CHECK_THROWS_AS(kazarian_local("A7"), UsageError);
  CHECK_THROWS_AS(kazarian_class(kazarian_local("A6"), 0), UsageError);
}

TEST_CASE("user Kazarian classes") {
  CHECK_THROWS_AS(parse_kazarian_local("X", "u + c1^2"), UsageError);  // not homogeneous
  CHECK_THROWS_AS(parse_kazarian_local("X", "c1^2"), UsageError);      // no factor of u
  CHECK_THROWS_AS(parse_kazarian_list(nlohmann::json::parse(R"({"name":"A2"})")), UsageError);
  CHECK_THROWS_AS(parse_kazarian_list(nlohmann::json::parse(R"([{"name":"A2"}])")), UsageError);
  CHECK_THROWS_AS(load_kazarian_file("/nonexistent/kazarian.json"), UsageError);
  auto list = load_kazarian_file(fixture());
  REQUIRE(list.size() == 2);
  CHECK(list[0].name == "A2");
  // cusp locus: cuspidal cubics and the classical degree 12(d-1)(d-2)
  CHECK(kazarian_class(list[0], 3) == c3("24*c1^2"));
  for (int d = 3; d <= 6; ++d) {
    auto P = plane_projectivize(kazarian_class(list[0], d), d);
    CHECK(h_coefficient_at_zero(P, 2) == 12 * (d - 1) * (d - 2));
  }
  // tacnode locus: degree 50d^2 - 192d + 168
  CHECK(kazarian_class(list[1], 3) == c3("-36*c1^3-18*c1*c2"));
  for (int d = 3; d <= 5; ++d) {
    auto P = plane_projectivize(kazarian_class(list[1], d), d);
    CHECK(h_coefficient_at_zero(P, 3) == 50 * d * d - 192 * d + 168);
  }
}

TEST_CASE("multiplication maps") {
  CHECK(mult_map_class(std::vector<int>{1, 1, 1, 1}, 24, 4) ==
        c3("16*(18*c1^6+33*c1^4*c2+12*c1^2*c2^2+131*c1^3*c3+153*c1*c2*c3-147*c3^2)"));
  CHECK(mult_map_class(std::vector<int>{1, 1, 1}, 6, 3) == c3("-(12*c1^3+6*c1*c2+27*c3)"));
  CHECK(mult_map_class(std::vector<MultMapFactor>{{2, 1}, {1, 1}}, 1, 3) == c3("18*c1^2+9*c2"));
  CHECK(mult_map_class(std::vector<MultMapFactor>{{1, 3}}, 1, 3) ==
        c3("-(72*c1^3*c2^2+36*c1*c2^3+36*c1^4*c3-162*c1^2*c2*c3+243*c1*c3^2)"));
  CHECK(concurrent_lines_class() == c3("12*c1^4+6*c1^2*c2+27*c1*c3"));
  CHECK_THROWS_AS(mult_map_class(std::vector<int>{1, 1}, 1, 3), UsageError);
  CHECK_THROWS_AS(mult_map_class(std::vector<int>{}, 1, 3), UsageError);
  CHECK_THROWS_AS(mult_map_class(std::vector<int>{1, 1, 1}, 0, 3), UsageError);
  // the triangle map has degree 6; dividing by 4 is not integral
  CHECK_THROWS_AS(mult_map_class(std::vector<int>{1, 1, 1}, 4, 3), ConsistencyError);
}

TEST_CASE("W-variety classes for quartics") {
  auto w = w_variety_classes(4);
  CHECK(w.o_cbn == c3(kD6));
  CHECK(w.o_can == c3("192*(18*c1^6+33*c1^4*c2+12*c1^2*c2^2+19*c1^3*c3-7*c1*c2*c3-35*c3^2)"));
  CHECK(w.z_multiplicity >= 1);
  CHECK(w.tower["levels"].size() == 3);
  CHECK_THROWS_AS(w_variety_classes(3), UsageError);
}

TEST_CASE("predegree closed forms") {
  CHECK(predegree_poly_cbn(4) == 308);
  CHECK(predegree_poly_cflex(4) == 1980);
  for (int d = 4; d <= 6; ++d) {
    CHECK(w_variety_cbn_degree(d) == predegree_poly_cbn(d));
    CHECK(w_variety_flex_degree(d) == predegree_poly_cflex(d));
  }
  CHECK_THROWS_AS(predegree_poly_cbn(3), UsageError);
}

TEST_CASE("points on P^1") {
  auto uv = make_symbols({"u", "v"});
  CHECK(points_class({1, 1, 1}) == SparsePoly::constant(uv, 6));
  CHECK(points_class({2, 1, 1}) == parse_poly(uv, "24*u+24*v"));
  CHECK(flip_sign(points_class({2, 1, 1})) == parse_poly(uv, "-24*u-24*v"));
  auto uvh = make_symbols({"u", "v", "H"});
  CHECK(points_class_distinct(4) == parse_poly(uvh, "24*(H+2*u+2*v)"));
  for (int n = 3; n <= 6; ++n)
    CHECK(points_projectivize(points_class(std::vector<int>(n, 1)), n) == points_class_distinct(n));
  CHECK_THROWS_AS(points_class({1, 1}), UsageError);
  CHECK_THROWS_AS(points_class({1, 0, 1}), UsageError);
}

TEST_CASE("partitions") {
  CHECK(partitions(4, 1).size() == 5);
  CHECK(partitions(6, 3).size() == 7);
  CHECK(partitions(8, 3).size() == 17);
  CHECK(partitions(5, 3).front() == std::vector<int>{3, 1, 1});
  std::size_t total = 0;
  for (int d = 3; d <= 8; ++d) total += partitions(d, 3).size();
  CHECK(total == 42);
}

TEST_CASE("hypersurface classes and projectivization") {
  auto h = chern_symbols_with(3, {"H"});
  CHECK(plane_projectivize(hypersurface_class(12), 3) == parse_poly(h, "12*H-12*c1"));
  CHECK_THROWS_AS(hypersurface_class(0), UsageError);
  CHECK(plane_section_count(c3("8*112*3*(9*c1^3+12*c1*c2-11*c3)*(2*c1^3+c1*c2+c3)")) == 510720);
}

TEST_CASE("engine rows") {
  OrbitEngine e;
  auto a6 = e.compute("A6");
  CHECK(a6.predegree == 1785);
  CHECK(a6.aut_order == 3);
  CHECK(a6.factored.to_string() == "336(9c1^3+12c1c2-11c3)(2c1^3+c1c2+c3)");
  CHECK(e.compute("general").predegree == 14280);
  CHECK(e.compute("E6").predegree == 294);
  CHECK(e.compute("D6").affine_p == e.w_variety().o_cbn * Rational(3));
  CHECK(e.compute("flex").affine_p == e.compute("AN").affine_p + e.compute("D6").affine_p * Rational(2));
  CHECK(e.compute("cubic:conic+line").affine_p == c3("18*c1^2+9*c2"));
  CHECK(e.compute("cubic:conic+line").aut_infinite);
  CHECK(e.compute("points:1,1,1").affine_p.to_string() == "6");
  CHECK(e.compute("points:1,2,1").id == "points:2,1,1");
  CHECK(e.quartic_table().size() == quartic_row_ids().size());
  CHECK(e.cubic_table().size() == cubic_row_ids().size() - 2);
  auto sections = e.section_counts();
  CHECK(*sections.back().section_count == 510720);
}

TEST_CASE("engine errors") {
  OrbitEngine e;
  CHECK_THROWS_AS(e.compute("bogus"), UsageError);
  CHECK_THROWS_AS(e.compute("points:"), UsageError);
  CHECK_THROWS_AS(e.compute("points:1,x"), UsageError);
  CHECK_THROWS_AS(e.compute("points:1,1"), UsageError);
  CHECK_THROWS_AS(e.compute("cubic:cuspidal"), UsageError);
  CHECK_THROWS_AS(e.compute("cubic:nothing"), UsageError);
  CHECK_THROWS_AS(e.compute("kazarian:A6"), UsageError);
  CHECK_THROWS_AS(e.compute("kazarian:A6:0"), UsageError);
}

TEST_CASE("conditional cubic rows with user classes") {
  OrbitEngine e(load_kazarian_file(fixture()));
  CHECK(e.compute("cubic:cuspidal").affine_p == c3("24*c1^2"));
  CHECK(e.compute("cubic:conic+tangent").affine_p == c3("-36*c1^3-18*c1*c2"));
  CHECK(e.cubic_table().size() == cubic_row_ids().size());
  CHECK(e.compute("kazarian:A2:4").predegree == 72);
}

TEST_CASE("factored display") {
  auto f = primitive_split(c3("-6*c1^2-3*c2"));
  CHECK(f.to_string() == "-3(2c1^2+c2)");
  CHECK(f.expand(chern_symbols(3)) == c3("-6*c1^2-3*c2"));
  CHECK(primitive_split(c3("24*c1^2")).to_string() == "24c1^2");
  CHECK(primitive_split(c3("7")).to_string() == "7");
  CHECK(primitive_split(c3("0")).to_string() == "0");
}
