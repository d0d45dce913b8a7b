#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eqorbit/orbit_classes.hpp"
#include "eqorbit/render.hpp"
#include "eqorbit/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::vector<std::string> section_footnotes(const std::vector<eqorbit::OrbitClassResult>& rows) {
  eqorbit::Rational general, flex, tricusp;
  for (const auto& r : rows) {
    if (r.id == "general") general = *r.section_count;
    if (r.id == "flex") flex = *r.section_count;
    if (r.id == "nodal(0,3)") tricusp = *r.section_count;
  }
  eqorbit::Rational per_curve = tricusp / 6;
  return {"tricuspidal quartic (6 automorphisms): " + general.get_str() + " - 3*" + flex.get_str() + " = " +
              eqorbit::Rational(general - 3 * flex).get_str() + " = 6*" + per_curve.get_str(),
          "nodal(a,b) rows use 8 p_A6 - 2a p_D6 - b p_flex (a nodes, b cusps)"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant orbit classes of plane curves and point configurations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string kazarian_file;
  bool affine = false, projective = false, flip = false;
  app.add_option("--format", format, "Output format: text|json|csv|latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));
  app.add_option("--kazarian-file", kazarian_file, "JSON list of {name, polynomial} local classes");
  auto* aff = app.add_flag("--affine", affine, "Show only the affine class p");
  auto* proj = app.add_flag("--projective", projective, "Show only the projective class P");
  aff->excludes(proj);
  app.add_flag("--flip-sign", flip, "Points rows: show p(u,v) instead of p(-u,-v)");

  auto* cls = app.add_subcommand("class", "Compute one orbit class");
  std::string id;
  cls->add_option("id", id, "Curve identifier, e.g. A6, general, nodal(0,3), cubic:triangle, points:2,1,1")
      ->required();

  auto* table = app.add_subcommand("table", "Emit a table");
  std::string which;
  table->add_option("which", which, "quartics|cubics|sections")
      ->required()
      ->check(CLI::IsMember({"quartics", "cubics", "sections"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite_pos, suite_opt;
  bool inject = false;
  verify->add_option("suite_name", suite_pos, "all|points|quartics|cubics|predegrees|crosschecks|properties");
  verify->add_option("--suite", suite_opt, "Same as the positional suite");
  verify->add_flag("--inject-fault", inject, "Corrupt one expected constant per suite (exercises the failure path)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    eqorbit::RenderOptions opt;
    opt.format = eqorbit::parse_format(format);
    opt.view = affine ? eqorbit::View::Affine : (projective ? eqorbit::View::Projective : eqorbit::View::Both);
    opt.flip_sign = flip;
    std::vector<eqorbit::KazarianLocalClass> user;
    if (!kazarian_file.empty()) user = eqorbit::load_kazarian_file(kazarian_file);

    if (*cls) {
      eqorbit::OrbitEngine engine(user);
      std::cout << eqorbit::render_class(engine.compute(id), opt);
      return kOk;
    }
    if (*table) {
      eqorbit::OrbitEngine engine(user);
      if (which == "quartics") {
        std::cout << eqorbit::render_table(which, engine.quartic_table(), opt);
      } else if (which == "cubics") {
        std::vector<std::string> notes;
        if (!engine.user_class("A2") || !engine.user_class("A3"))
          notes.push_back("cuspidal and conic+tangent rows are conditional: supply A2/A3 local classes via --kazarian-file");
        std::cout << eqorbit::render_table(which, engine.cubic_table(), opt, notes);
      } else {
        auto rows = engine.section_counts();
        std::cout << eqorbit::render_table(which, rows, opt, section_footnotes(rows));
      }
      return kOk;
    }
    if (!suite_pos.empty() && !suite_opt.empty() && suite_pos != suite_opt)
      throw eqorbit::UsageError("conflicting suites '" + suite_pos + "' and '" + suite_opt + "'");
    std::string suite = !suite_opt.empty() ? suite_opt : (!suite_pos.empty() ? suite_pos : "all");
    eqorbit::VerifyOptions vopt{user, inject};
    auto reports = eqorbit::run_verify(suite, vopt);
    std::cout << eqorbit::render_verify(reports, opt.format);
    return eqorbit::all_ok(reports) ? kOk : kFailure;
  } catch (const eqorbit::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFailure;
  }
}
