#include "doctest.h"
#include "eqorbit/verify.hpp"

using namespace eqorbit;

TEST_CASE("text rendering of the A6 row and three points") {
  OrbitEngine e;
  RenderOptions opt;
  auto text = render_class(e.compute("A6"), opt);
  CHECK(text.find("p = 336(9c1^3+12c1c2-11c3)(2c1^3+c1c2+c3)") != std::string::npos);
  CHECK(text.find("predegree = 1785") != std::string::npos);
  CHECK(text.find("aut = 3") != std::string::npos);
  CHECK(render_class(e.compute("points:1,1,1"), opt).find("p(-u,-v) = 6") != std::string::npos);
  opt.flip_sign = true;
  CHECK(render_class(e.compute("points:2,1,1"), opt).find("p = -24(u+v)") != std::string::npos);
}

TEST_CASE("affine/projective views") {
  OrbitEngine e;
  RenderOptions opt;
  opt.view = View::Projective;
  auto text = render_class(e.compute("cubic:conic+line"), opt);
  CHECK(text.find("P = 18c1^2-42c1H+9c2+21H^2") != std::string::npos);
  CHECK(text.find("p = ") == std::string::npos);
  opt.view = View::Affine;
  opt.format = Format::Json;
  auto j = nlohmann::json::parse(render_class(e.compute("cubic:conic+line"), opt));
  CHECK(j.contains("p"));
  CHECK_FALSE(j.contains("P"));
}

TEST_CASE("JSON round-trips through the canonical polynomial form") {
  OrbitEngine e;
  RenderOptions opt;
  opt.format = Format::Json;
  for (const char* id : {"A6", "quadrilateral", "cubic:triangle", "points:3,2,1"}) {
    auto r = e.compute(id);
    auto j = nlohmann::json::parse(render_class(r, opt));
    CHECK(SparsePoly::from_json(j["p"]) == r.affine_p);
    CHECK(SparsePoly::from_json(j["P"]) == r.projective_P);
    CHECK(j["predegree"] == r.predegree.get_str());
    CHECK_FALSE(j["provenance"].get<std::string>().empty());
  }
  auto j = nlohmann::json::parse(render_class(e.compute("cubic:triangle"), opt));
  CHECK(j["aut"] == "infinity");
  j = nlohmann::json::parse(render_class(e.compute("general"), opt));
  CHECK(j["aut"].is_null());
}

TEST_CASE("table formats") {
  OrbitEngine e;
  auto rows = e.cubic_table();
  RenderOptions opt;
  opt.format = Format::Csv;
  auto csv = render_table("cubics", rows, opt);
  CHECK(csv.rfind("id,name,p,P,predegree,aut,section_count,provenance\n", 0) == 0);
  CHECK(csv.find("cubic:conic+line,Conic plus line,18c1^2+9c2,") != std::string::npos);
  CHECK(csv.find("\"Smooth cubic (j != 0, 1728)\"") != std::string::npos);
  opt.format = Format::Latex;
  auto tex = render_table("cubics", rows, opt);
  CHECK(tex.find("\\begin{tabular}") != std::string::npos);
  CHECK(tex.find("9\\left(2 c_{1}^{2} + c_{2}\\right)") != std::string::npos);
  opt.format = Format::Json;
  auto j = nlohmann::json::parse(render_table("sections", e.section_counts(), opt, {"note"}));
  CHECK(j["rows"].back()["section_count"] == "510720");
  CHECK(j["footnotes"][0] == "note");
  CHECK_THROWS_AS(parse_format("yaml"), UsageError);
}

TEST_CASE("rendering is deterministic") {
  OrbitEngine e1, e2;
  RenderOptions opt;
  opt.format = Format::Json;
  CHECK(render_table("quartics", e1.quartic_table(), opt) == render_table("quartics", e2.quartic_table(), opt));
}

TEST_CASE("verification suites") {
  auto r = run_verify("cubics");
  REQUIRE(r.size() == 1);
  CHECK(all_ok(r));
  int skipped = 0;
  for (const auto& c : r[0].checks) skipped += c.skipped;
  CHECK(skipped == 2);
  CHECK(render_verify(r, Format::Text).find("all checks passed") != std::string::npos);

  VerifyOptions bad;
  bad.inject_fault = true;
  auto f = run_verify("quartics", bad);
  CHECK_FALSE(all_ok(f));
  REQUIRE(f[0].first_failure() != nullptr);
  CHECK(f[0].first_failure()->name == "Kazarian A6 pushforward");
  auto j = nlohmann::json::parse(render_verify(f, Format::Json));
  CHECK(j["ok"] == false);
  CHECK(j["first_failure"]["computed_json"]["terms"].size() + 1 == j["first_failure"]["expected_json"]["terms"].size());

  CHECK_THROWS_AS(run_verify("bogus"), UsageError);
  CHECK(suite_names().size() == 6);
}
