#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eqorbit/orbit_classes.hpp"
#include "eqorbit/render.hpp"
#include "eqorbit/verify.hpp"

namespace py = pybind11;
using namespace eqorbit;

namespace {

std::vector<KazarianLocalClass> user_classes(const std::string& path) {
  return path.empty() ? std::vector<KazarianLocalClass>{} : load_kazarian_file(path);
}

RenderOptions json_options(bool flip) {
  RenderOptions opt;
  opt.format = Format::Json;
  opt.flip_sign = flip;
  return opt;
}

std::string compute_json(const std::string& id, const std::string& kazarian_file, bool flip_sign) {
  OrbitEngine engine(user_classes(kazarian_file));
  return result_to_json(engine.compute(id), json_options(flip_sign)).dump();
}

std::string table_json(const std::string& which, const std::string& kazarian_file) {
  OrbitEngine engine(user_classes(kazarian_file));
  std::vector<OrbitClassResult> rows;
  if (which == "quartics")
    rows = engine.quartic_table();
  else if (which == "cubics")
    rows = engine.cubic_table();
  else if (which == "sections")
    rows = engine.section_counts();
  else
    throw UsageError("unknown table '" + which + "'");
  return render_table(which, rows, json_options(false));
}

std::string verify_json(const std::string& suite, const std::string& kazarian_file) {
  VerifyOptions opt;
  opt.user_classes = user_classes(kazarian_file);
  std::vector<SuiteReport> reports;
  {
    py::gil_scoped_release release;
    reports = run_verify(suite, opt);
  }
  return render_verify(reports, Format::Json);
}

std::string canonical_poly(const std::vector<std::pair<std::string, int>>& symbols, const std::string& text) {
  std::vector<Symbol> s;
  for (const auto& [name, degree] : symbols) s.push_back({name, degree});
  return parse_poly(make_symbols(std::move(s)), text).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact equivariant orbit classes (JSON-returning core)";
  m.def("compute_json", &compute_json, py::arg("id"), py::arg("kazarian_file") = "",
        py::arg("flip_sign") = false);
  m.def("table_json", &table_json, py::arg("which"), py::arg("kazarian_file") = "");
  m.def("verify_json", &verify_json, py::arg("suite") = "all", py::arg("kazarian_file") = "");
  m.def("canonical_poly", &canonical_poly, py::arg("symbols"), py::arg("text"));
}
