#include "eqorbit/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "eqorbit/chern_calc.hpp"
#include "eqorbit/chow_tower.hpp"
#include "eqorbit/localization.hpp"

namespace eqorbit {

bool SuiteReport::ok() const { return first_failure() == nullptr; }

const Check* SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"points",      "quartics",    "cubics",
                                                 "predegrees", "crosschecks", "properties"};
  return names;
}

bool all_ok(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.ok()) return false;
  return true;
}

namespace {

using PolyFn = std::function<SparsePoly()>;

Check new_check(const std::string& suite, const std::string& name) {
  Check c;
  c.suite = suite;
  c.name = name;
  return c;
}
using RatFn = std::function<Rational()>;

Check compare_polys(const std::string& suite, const std::string& name, const PolyFn& lhs,
                    const PolyFn& rhs, bool corrupt) {
  Check c = new_check(suite, name);
  try {
    SparsePoly a = lhs();
    SparsePoly b = rhs();
    if (corrupt) b += SparsePoly::constant(b.symbols(), 1);
    b = b.rebase(a.symbols());
    c.ok = a == b;
    c.lhs = a.to_string();
    c.rhs = b.to_string();
    c.lhs_json = a.to_json();
    c.rhs_json = b.to_json();
  } catch (const std::exception& e) {
    c.ok = false;
    c.lhs = std::string("error: ") + e.what();
    c.lhs_json = c.lhs;
  }
  return c;
}

Check compare_numbers(const std::string& suite, const std::string& name, const RatFn& lhs,
                      const RatFn& rhs, bool corrupt) {
  Check c = new_check(suite, name);
  try {
    Rational a = lhs();
    Rational b = rhs();
    if (corrupt) b += 1;
    c.ok = a == b;
    c.lhs = a.get_str();
    c.rhs = b.get_str();
    c.lhs_json = c.lhs;
    c.rhs_json = c.rhs;
  } catch (const std::exception& e) {
    c.ok = false;
    c.lhs = std::string("error: ") + e.what();
    c.lhs_json = c.lhs;
  }
  return c;
}

class Recorder {
 public:
  Recorder(std::string suite, bool fault) : suite_(std::move(suite)), fault_(fault) {}

  void poly(const std::string& name, const PolyFn& lhs, const PolyFn& rhs) {
    checks_.push_back(compare_polys(suite_, name, lhs, rhs, take_fault()));
  }
  void number(const std::string& name, const RatFn& lhs, const RatFn& rhs) {
    checks_.push_back(compare_numbers(suite_, name, lhs, rhs, take_fault()));
  }
  void truth(const std::string& name, const std::function<bool()>& pred) {
    Check c = new_check(suite_, name);
    try {
      c.ok = pred();
      c.lhs = c.ok ? "true" : "false";
    } catch (const std::exception& e) {
      c.lhs = std::string("error: ") + e.what();
    }
    c.rhs = "true";
    c.lhs_json = c.lhs;
    c.rhs_json = c.rhs;
    checks_.push_back(std::move(c));
  }
  void skip(const std::string& name, const std::string& reason) {
    Check c = new_check(suite_, name);
    c.ok = c.skipped = true;
    c.lhs = "skipped";
    c.rhs = reason;
    c.lhs_json = c.lhs;
    c.rhs_json = c.rhs;
    checks_.push_back(std::move(c));
  }
  void add(Check c) { checks_.push_back(std::move(c)); }
  bool take_fault() {
    bool f = fault_;
    fault_ = false;
    return f;
  }
  const std::string& suite() const { return suite_; }
  std::vector<Check> release() { return std::move(checks_); }

 private:
  std::string suite_;
  bool fault_;
  std::vector<Check> checks_;
};

SparsePoly c3(const std::string& text) { return parse_poly(chern_symbols(3), text); }

// ---------------------------------------------------------------- quartics

const char* const kA6 = "112*(9*c1^3+12*c1*c2-11*c3)*(2*c1^3+c1*c2+c3)";
const char* const kD6 = "64*(18*c1^6+33*c1^4*c2+12*c1^2*c2^2-85*c1^3*c3-11*c1*c2*c3-7*c3^2)";
const char* const kE6 = "48*(2*c1^3+c1*c2+c3)*(9*c1^3-6*c1*c2+7*c3)";
const char* const kAN = "192*(18*c1^6+33*c1^4*c2+12*c1^2*c2^2+19*c1^3*c3-7*c1*c2*c3-35*c3^2)";
const char* const kQ = "16*(18*c1^6+33*c1^4*c2+12*c1^2*c2^2+131*c1^3*c3+153*c1*c2*c3-147*c3^2)";

void quartics_suite(OrbitEngine& e, Recorder& rec) {
  rec.poly("Kazarian A6 pushforward", [&] { return e.kazarian("A6"); }, [] { return c3(kA6); });
  rec.poly("Kazarian D6 pushforward", [&] { return e.kazarian("D6"); }, [] { return c3(kD6); });
  rec.poly("Kazarian E6 pushforward", [&] { return e.kazarian("E6"); }, [] { return c3(kE6); });
  rec.poly("four lines class after division by 24", [&] { return e.four_lines(); }, [] { return c3(kQ); });
  rec.truth("four lines division by 24 integral", [&] { return e.four_lines().has_integer_coefficients(); });
  rec.poly("W-variety [O_CBN]", [&] { return e.w_variety().o_cbn; }, [] { return c3(kD6); });
  rec.poly("W-variety [O_CAN]", [&] { return e.w_variety().o_can; }, [] { return c3(kAN); });
  rec.poly("3 [O_CBN] = p_D6", [&] { return e.w_variety().o_cbn * Rational(3); },
           [&] { return e.compute("D6").affine_p; });

  const std::vector<std::pair<std::string, std::pair<long, const char*>>> base = {
      {"A6", {3, kA6}}, {"D6", {3, kD6}}, {"E6", {2, kE6}}, {"AN", {2, kAN}}, {"quadrilateral", {24, kQ}}};
  for (const auto& [id, v] : base) {
    rec.poly("row " + id + " = #Aut * displayed class", [&, id = id] { return e.compute(id).affine_p; },
             [v = v] { return c3(v.second) * Rational(v.first); });
    rec.number("row " + id + " automorphism order", [&, id = id]() -> Rational { return Rational(*e.compute(id).aut_order); },
               [v = v]() -> Rational { return Rational(v.first); });
  }

  auto p = [&](const std::string& id) { return e.compute(id).affine_p; };
  rec.poly("flex = AN + 2 D6", [&] { return p("flex"); }, [&] { return p("AN") + p("D6") * Rational(2); });
  rec.truth("(8 A6 - Q) / 4 integral",
            [&] { return ((p("A6") * Rational(8) - p("quadrilateral")) / Rational(4)).has_integer_coefficients(); });
  rec.poly("4 D4 = 8 A6 - Q", [&] { return p("D4") * Rational(4); },
           [&] { return p("A6") * Rational(8) - p("quadrilateral"); });
  rec.poly("two lines plus conic = Q + 2 D4", [&] { return p("2lines+conic"); },
           [&] { return p("quadrilateral") + p("D4") * Rational(2); });
  rec.poly("line plus cubic = Q + 3 D4", [&] { return p("line+cubic"); },
           [&] { return p("quadrilateral") + p("D4") * Rational(3); });
  rec.poly("general = 8 A6", [&] { return p("general"); }, [&] { return p("A6") * Rational(8); });
  rec.poly("nodal(1,0) = 8 A6 - 2 D6", [&] { return p("nodal(1,0)"); },
           [&] { return p("A6") * Rational(8) - p("D6") * Rational(2); });
  rec.poly("nodal(0,1) = 8 A6 - flex", [&] { return p("nodal(0,1)"); },
           [&] { return p("A6") * Rational(8) - p("flex"); });
  rec.poly("smooth(1) = 8 A6 - E6", [&] { return p("smooth(1)"); },
           [&] { return p("A6") * Rational(8) - p("E6"); });
  for (int n = 3; n <= 5; ++n)
    rec.poly("A" + std::to_string(n) + " = " + std::to_string(7 - n) + " A6",
             [&, n] { return p("A" + std::to_string(n)); }, [&, n] { return p("A6") * Rational(7 - n); });
  rec.truth("every quartic row has integer coefficients", [&] {
    for (const auto& id : quartic_row_ids())
      if (!p(id).has_integer_coefficients()) return false;
    return true;
  });

  const std::vector<std::pair<std::string, long>> sections = {
      {"A6", 3 * 21280},         {"D6", 3 * 7040},          {"E6", 2 * 4800},
      {"AN", 2 * 36480},         {"flex", 2 * 57600},       {"quadrilateral", 24 * 5600},
      {"D4", 94080},             {"2lines+conic", 322560},  {"line+cubic", 416640},
      {"nodal(1,0)", 510720 - 2 * 3 * 7040},                {"smooth(1)", 510720 - 2 * 4800},
      {"general", 510720}};
  for (const auto& [id, n] : sections)
    rec.number("plane sections " + id, [&, id = id]() -> Rational { return plane_section_count(p(id)); },
               [n = n]() -> Rational { return Rational(n); });
  rec.number("tricuspidal sections: general - 3 flex = 6 * 27520",
             [&]() -> Rational { return plane_section_count(p("general")) - 3 * plane_section_count(p("flex")); },
             []() -> Rational { return Rational(6 * 27520); });
  rec.number("tricuspidal row nodal(0,3)", [&]() -> Rational { return plane_section_count(p("nodal(0,3)")); },
             []() -> Rational { return Rational(6 * 27520); });
}

// ---------------------------------------------------------------- cubics

void cubics_suite(OrbitEngine& e, Recorder& rec) {
  const std::vector<std::pair<std::string, const char*>> rows = {
      {"triple-line", "-(72*c1^3*c2^2+36*c1*c2^3+36*c1^4*c3-162*c1^2*c2*c3+243*c1*c3^2)"},
      {"double-line+line", "-(72*c1^3*c2+36*c1*c2^2-108*c1^2*c3)"},
      {"concurrent-lines", "12*c1^4+6*c1^2*c2+27*c1*c3"},
      {"conic+tangent", "-36*c1^3-18*c1*c2"},
      {"triangle", "-(12*c1^3+6*c1*c2+27*c3)"},
      {"conic+line", "18*c1^2+9*c2"},
      {"cuspidal", "24*c1^2"},
      {"nodal", "(-12*c1)*6"},
      {"smooth", "(-12*c1)*18"},
      {"smooth-j1728", "(-6*c1)*36"},
      {"smooth-j0", "(-4*c1)*54"},
  };
  for (const auto& [row, expected] : rows) {
    const std::string id = "cubic:" + row;
    if (row == "cuspidal" || row == "conic+tangent") {
      const std::string local = row == "cuspidal" ? "A2" : "A3";
      if (!e.user_class(local)) {
        rec.skip("row " + id, "conditional: needs a user-supplied " + local + " local class");
        continue;
      }
    }
    rec.poly("row " + id, [&, id = id] { return e.compute(id).affine_p; },
             [expected = expected] { return c3(expected); });
  }
  const std::vector<std::pair<std::string, const char*>> orbits = {
      {"nodal", "-12*c1"}, {"smooth", "-12*c1"}, {"smooth-j1728", "-6*c1"}, {"smooth-j0", "-4*c1"}};
  for (const auto& [row, cls] : orbits)
    rec.poly("orbit class [O] of cubic:" + row,
             [&, row = row] { return e.compute("cubic:" + row).factored.factors.at(0); },
             [cls = cls] { return c3(cls); });
  rec.poly("j-divisor projectivizes to 12(H - c1)", [] { return plane_projectivize(hypersurface_class(12), 3); },
           [] { return parse_poly(chern_symbols_with(3, {"H"}), "12*(H-c1)"); });
  rec.number("smooth cubic predegree", [&]() -> Rational { return e.compute("cubic:smooth").predegree; },
             []() -> Rational { return Rational(216); });
  rec.number("nodal cubic predegree", [&]() -> Rational { return e.compute("cubic:nodal").predegree; },
             []() -> Rational { return Rational(72); });
  rec.truth("triangle division by 6 integral",
            [] { return mult_map_class(std::vector<int>{1, 1, 1}, 6, 3).has_integer_coefficients(); });
  rec.truth("concurrent lines division by 6 integral",
            [] { return concurrent_lines_class().has_integer_coefficients(); });
  for (const auto& id : cubic_row_ids()) {
    if ((id == "cubic:cuspidal" && !e.user_class("A2")) || (id == "cubic:conic+tangent" && !e.user_class("A3")))
      continue;
    rec.truth("affinize(projectivize(p)) = p for " + id, [&, id = id] {
      auto r = e.compute(id);
      return chern_shift(r.projective_P, 3, ShiftDirection::Affinize, {}, false)
                 .rebase(chern_symbols_with(3, {"H"})) == r.affine_p.rebase(chern_symbols_with(3, {"H"}));
    });
  }
}

// ---------------------------------------------------------------- points

int partition_count(int d) {
  static const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  return p[d];
}

void points_suite(Recorder& rec) {
  std::vector<std::vector<int>> all;
  for (int d = 3; d <= 8; ++d)
    for (auto& m : partitions(d, 3)) all.push_back(m);
  rec.number("partitions with at least 3 parts, d <= 8", [&]() -> Rational { return Rational(static_cast<long>(all.size())); },
             []() -> Rational {
               long n = 0;
               for (int d = 3; d <= 8; ++d) n += partition_count(d) - 1 - d / 2;
               return Rational(n);
             });

  const std::string suite = rec.suite();
  std::vector<std::future<std::vector<Check>>> jobs;
  for (const auto& m : all) {
    jobs.push_back(std::async(std::launch::async, [m, suite] {
      std::string label;
      for (std::size_t i = 0; i < m.size(); ++i) label += (i ? "," : "") + std::to_string(m[i]);
      std::vector<Check> out;
      SparsePoly closed;
      out.push_back(compare_polys(
          suite, "closed formula = localization for " + label, [&] { return closed = points_class(m); },
          [&] { return points_localization(m); }, false));
      int d = 0;
      for (int x : m) d += x;
      Check h = new_check(suite, "homogeneous of degree d-3 for " + label);
      auto hd = closed.homogeneous_degree();
      h.ok = !closed.is_zero() && hd && *hd == d - 3;
      h.lhs = hd ? std::to_string(*hd) : "inhomogeneous";
      h.rhs = std::to_string(d - 3);
      h.lhs_json = h.lhs;
      h.rhs_json = h.rhs;
      out.push_back(std::move(h));
      out.push_back(compare_polys(
          suite, "symmetric in u, v for " + label, [&] { return closed; },
          [&] {
            const auto& t = closed.symbols();
            return closed.substitute({{"u", SparsePoly::variable(t, "v")}, {"v", SparsePoly::variable(t, "u")}});
          },
          false));
      return out;
    }));
  }
  for (auto& j : jobs)
    for (auto& c : j.get()) rec.add(std::move(c));

  for (int n = 3; n <= 8; ++n)
    rec.poly("multiplicity-one product, n = " + std::to_string(n),
             [n] { return points_projectivize(points_class(std::vector<int>(n, 1)), n); },
             [n] { return points_class_distinct(n); });
}

// ---------------------------------------------------------------- predegrees

void predegrees_suite(OrbitEngine& e, Recorder& rec) {
  rec.number("general quartic", [&]() -> Rational { return e.compute("general").predegree; }, []() -> Rational { return Rational(14280); });
  rec.number("C_A6", [&]() -> Rational { return e.compute("A6").predegree; }, []() -> Rational { return Rational(1785); });
  rec.number("8 * C_A6 = general", [&]() -> Rational { return 8 * e.compute("A6").predegree; },
             [&]() -> Rational { return e.compute("general").predegree; });
  rec.number("C_E6", [&]() -> Rational { return e.compute("E6").predegree; }, []() -> Rational { return Rational(294); });
  rec.number("degree of O_CBN from p_D6 / 3",
             [&]() -> Rational { return h_coefficient_at_zero(plane_projectivize(e.compute("D6").affine_p / Rational(3), 4), 6); },
             []() -> Rational { return Rational(308); });
  rec.number("C_D6 = 3 * cbn(4)", [&]() -> Rational { return e.compute("D6").predegree; },
             []() -> Rational { return 3 * predegree_poly_cbn(4); });
  rec.number("C_flex = 2 * cflex(4)", [&]() -> Rational { return e.compute("flex").predegree; },
             []() -> Rational { return 2 * predegree_poly_cflex(4); });
  for (int n = 3; n <= 5; ++n)
    rec.number("C_A" + std::to_string(n) + " = " + std::to_string(7 - n) + " * 1785",
               [&, n]() -> Rational { return e.compute("A" + std::to_string(n)).predegree; },
               [n]() -> Rational { return Rational((7 - n) * 1785); });
  for (int d = 4; d <= 12; ++d) {
    Rational dd = d;
    rec.number("24(35d^2-174d+213) = 6 cbn(d), d = " + std::to_string(d),
               [dd]() -> Rational { return 24 * (35 * dd * dd - 174 * dd + 213); }, [d]() -> Rational { return 6 * predegree_poly_cbn(d); });
    rec.number("72(28d^2-144d+183) = 2 cflex(d), d = " + std::to_string(d),
               [dd]() -> Rational { return 72 * (28 * dd * dd - 144 * dd + 183); }, [d]() -> Rational { return 2 * predegree_poly_cflex(d); });
  }
  for (int d = 4; d <= 7; ++d) {
    rec.number("W-variety tower cbn degree, d = " + std::to_string(d), [d]() -> Rational { return w_variety_cbn_degree(d); },
               [d]() -> Rational { return predegree_poly_cbn(d); });
    rec.number("W-variety tower cflex degree, d = " + std::to_string(d), [d]() -> Rational { return w_variety_flex_degree(d); },
               [d]() -> Rational { return predegree_poly_cflex(d); });
  }
}

// ---------------------------------------------------------------- crosschecks

std::vector<std::vector<unsigned>> weighted_monomials(int k, int degree) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(k, 0);
  std::function<void(int, int)> rec = [&](int i, int rest) {
    if (i == 0) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int e = rest / i; e >= 0; --e) {
      cur[i - 1] = static_cast<unsigned>(e);
      rec(i - 1, rest - e * i);
    }
    cur[i - 1] = 0;
  };
  rec(k, degree);
  return out;
}

void crosschecks_suite(OrbitEngine& e, Recorder& rec) {
  rec.poly("Kazarian D6 = W-variety [O_CBN]", [&] { return e.kazarian("D6"); }, [&] { return e.w_variety().o_cbn; });
  rec.poly("3 [O_CBN] = p_D6", [&] { return e.w_variety().o_cbn * Rational(3); },
           [&] { return e.compute("D6").affine_p; });

  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {3, 6}, {2, 5}}) {
    auto monos = weighted_monomials(k, k * (n - k));
    std::string g = "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
    auto loc = grassmann_chern_numbers(k, n, monos);
    auto pieri = grassmann_chern_numbers_pieri(k, n, monos);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      std::string m;
      for (int j = 0; j < k; ++j)
        if (monos[i][j]) m += "c" + std::to_string(j + 1) + (monos[i][j] > 1 ? "^" + std::to_string(monos[i][j]) : "");
      rec.number(g + " localization = Pieri for " + m, [&, i]() -> Rational { return loc[i]; }, [&, i]() -> Rational { return pieri[i]; });
    }
  }
  rec.number("sections of the general quartic via Pieri", [&]() -> Rational {
    SparsePoly p = e.compute("general").affine_p;
    std::vector<std::vector<unsigned>> monos;
    std::vector<Rational> coeffs;
    for (const auto& t : p.terms()) {
      monos.push_back({t.mono.exps[0], t.mono.exps[1], t.mono.exps[2]});
      coeffs.push_back(t.coeff);
    }
    auto vals = grassmann_chern_numbers_pieri(3, 5, monos);
    Rational s = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) s += coeffs[i] * vals[i];
    return s;
  }, []() -> Rational { return Rational(510720); });

  // P^1 with torus weights u, v at the two fixed points.
  auto weights = points_weight_symbols();
  auto ambient = make_symbols({"H"});
  SparsePoly u = SparsePoly::variable(weights, "u"), v = SparsePoly::variable(weights, "v");
  std::vector<FixedLocus> loci = {
      {"p0", FixedLocus::Kind::Point, {{"H", -u}}, {{v - u, 0}}},
      {"p1", FixedLocus::Kind::Point, {{"H", -v}}, {{u - v, 0}}},
  };
  SparsePoly h = SparsePoly::variable(ambient, "H");
  rec.poly("P^1 localization: int 1 = 0", [&] { return ab_integrate(loci, SparsePoly::constant(ambient, 1), weights); },
           [&] { return SparsePoly(weights); });
  rec.poly("P^1 localization: int H = 1", [&] { return ab_integrate(loci, h, weights); },
           [&] { return SparsePoly::constant(weights, 1); });
  rec.poly("P^1 localization: int H^2 = -(u+v)", [&] { return ab_integrate(loci, h * h, weights); },
           [&] { return -(u + v); });
  rec.poly("Kazarian A6 at d = 4 via engine = direct", [&] { return e.kazarian("A6"); },
           [] { return kazarian_class(kazarian_local("A6"), 4); });
}

// ---------------------------------------------------------------- properties

SparsePoly complete_homogeneous(const std::vector<SparsePoly>& roots, unsigned k, const Symbols& t) {
  // h_k(x_1..x_n) = sum_j x_n^j h_{k-j}(x_1..x_{n-1})
  std::vector<SparsePoly> h(k + 1, SparsePoly(t));
  h[0] = SparsePoly::constant(t, 1);
  for (const auto& x : roots) {
    std::vector<SparsePoly> next(k + 1, SparsePoly(t));
    for (unsigned m = 0; m <= k; ++m) {
      SparsePoly xp = SparsePoly::constant(t, 1);
      for (unsigned j = 0; j <= m; ++j) {
        next[m] += xp * h[m - j];
        xp *= x;
      }
    }
    h = std::move(next);
  }
  return h[k];
}

void properties_suite(Recorder& rec) {
  std::mt19937 rng(20240607u);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto t = make_symbols({"a", "b", "c", "x1", "x2"});
  auto var = [&](const char* n) { return SparsePoly::variable(t, n); };
  auto linear = [&](const std::vector<const char*>& names) {
    SparsePoly p(t);
    while (p.is_zero())
      for (auto n : names) p += var(n) * Rational(uni(-3, 3));
    return p;
  };
  auto random_poly = [&](int levels) {
    SparsePoly p(t);
    for (int i = 0; i < 4; ++i) {
      std::vector<unsigned> e = {static_cast<unsigned>(uni(0, 2)), static_cast<unsigned>(uni(0, 2)),
                                 static_cast<unsigned>(uni(0, 2)), static_cast<unsigned>(uni(0, 4)),
                                 levels > 1 ? static_cast<unsigned>(uni(0, 4)) : 0u};
      p += SparsePoly::monomial(t, e, uni(-5, 5));
    }
    return p;
  };

  int failures = 0;
  std::vector<Check> first_bad;
  auto note = [&](Check c) {
    if (!c.ok && first_bad.empty()) first_bad.push_back(c);
    if (!c.ok) ++failures;
  };
  int segre = 0, idem = 0, mult = 0, proj = 0, powers = 0, ses = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::string tag = "tower " + std::to_string(trial);
    const int r1 = uni(1, 4);
    std::vector<SparsePoly> roots1;
    for (int i = 0; i < r1; ++i) roots1.push_back(linear({"a", "b", "c"}));
    RingTower tower = RingTower(t, {"a", "b", "c"}).extend(BundleClass::from_roots(roots1), "x1");
    const int levels = trial % 2 ? 2 : 1;
    std::vector<SparsePoly> roots2;
    if (levels == 2) {
      const int r2 = uni(1, 3);
      for (int i = 0; i < r2; ++i) roots2.push_back(linear({"a", "b", "x1"}));
      auto e2 = elementary_symmetric(roots2);
      std::vector<SparsePoly> ch;
      for (int i = 1; i <= r2; ++i) ch.push_back(tower.normal_form(e2[i]));
      tower = tower.extend(BundleClass::from_chern(r2, ch), "x2");
    }
    const auto& top_roots = levels == 2 ? roots2 : roots1;
    const int rt = static_cast<int>(top_roots.size());
    const char* top = levels == 2 ? "x2" : "x1";
    for (unsigned k = 0; k <= 4; ++k) {
      ++segre;
      note(compare_polys(rec.suite(), tag + ": Segre oracle k = " + std::to_string(k),
                         [&] { return tower.fiber_integrate(var(top).pow(rt - 1 + k)); },
                         [&] {
                           SparsePoly hk = complete_homogeneous(top_roots, k, t);
                           return tower.normal_form(k % 2 ? -hk : hk);
                         },
                         false));
    }
    SparsePoly p = random_poly(levels), q = random_poly(levels);
    ++idem;
    note(compare_polys(rec.suite(), tag + ": normal form idempotent",
                       [&] { return tower.normal_form(tower.normal_form(p)); },
                       [&] { return tower.normal_form(p); }, false));
    ++mult;
    note(compare_polys(rec.suite(), tag + ": normal form multiplicative",
                       [&] { return tower.normal_form(tower.normal_form(p) * tower.normal_form(q)); },
                       [&] { return tower.normal_form(p * q); }, false));
    ++proj;
    SparsePoly b = linear({"a", "b", "c"}) * linear({"a", "b", "c"});
    note(compare_polys(rec.suite(), tag + ": projection formula",
                       [&] { return tower.integrate_to_base(b * p); },
                       [&] { return b * tower.integrate_to_base(p); }, false));
    ++powers;
    SparsePoly h = linear({"a", "x1"}) + (levels == 2 ? var("x2") : SparsePoly(t));
    note(compare_polys(rec.suite(), tag + ": integrate_powers matches integrate_to_base",
                       [&] { return tower.integrate_powers(p, h, 4)[3]; },
                       [&] { return tower.integrate_to_base(p * h.pow(3)); }, false));
    ++ses;
    note(compare_polys(rec.suite(), tag + ": ses_complement(V + L, L) = V",
                       [&] {
                         auto v = BundleClass::from_roots(roots1);
                         auto l = BundleClass::line(linear({"a", "b"}));
                         return ses_complement(direct_sum(v, l), l).total;
                       },
                       [&] { return BundleClass::from_roots(roots1).total; }, false));
  }
  auto summary = [&](const std::string& name, int n) {
    rec.number(name, [n]() -> Rational { return Rational(n); }, []() -> Rational { return Rational(100); });
  };
  summary("randomized towers checked for idempotence", idem);
  summary("randomized towers checked for multiplicativity", mult);
  summary("randomized towers checked for the projection formula", proj);
  summary("randomized towers checked for integrate_powers", powers);
  summary("randomized ses round trips", ses);
  rec.number("Segre-oracle comparisons (5 per tower)", [segre]() -> Rational { return Rational(segre); }, []() -> Rational { return Rational(500); });
  if (!first_bad.empty()) rec.add(first_bad.front());
  rec.number("failing randomized property checks", [failures]() -> Rational { return Rational(failures); }, []() -> Rational { return Rational(0); });

  // Random point configurations: the localization sum must divide exactly.
  std::vector<std::vector<int>> configs;
  for (int i = 0; i < 12; ++i) {
    int n = uni(3, 5);
    std::vector<int> m;
    for (int j = 0; j < n; ++j) m.push_back(uni(1, 3));
    std::sort(m.rbegin(), m.rend());
    configs.push_back(m);
  }
  for (const auto& m : configs) {
    std::string label;
    for (std::size_t i = 0; i < m.size(); ++i) label += (i ? "," : "") + std::to_string(m[i]);
    rec.poly("exact localization sum for " + label, [m] { return points_localization(m); },
             [m] { return points_class(m); });
  }
  rec.truth("relation divisions integral: D4 by 4, quadrilateral by 24, triangle by 6", [] {
    OrbitEngine e;
    auto a6 = e.compute("A6").affine_p, q = e.compute("quadrilateral").affine_p;
    return ((a6 * Rational(8) - q) / Rational(4)).has_integer_coefficients() &&
           (q / Rational(24)).has_integer_coefficients() &&
           mult_map_class(std::vector<int>{1, 1, 1}, 6, 3).has_integer_coefficients();
  });
}

}  // namespace

SuiteReport run_suite(const std::string& suite, OrbitEngine& engine, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  Recorder rec(suite, opt.inject_fault);
  if (suite == "quartics")
    quartics_suite(engine, rec);
  else if (suite == "cubics")
    cubics_suite(engine, rec);
  else if (suite == "points")
    points_suite(rec);
  else if (suite == "predegrees")
    predegrees_suite(engine, rec);
  else if (suite == "crosschecks")
    crosschecks_suite(engine, rec);
  else if (suite == "properties")
    properties_suite(rec);
  else
    throw UsageError("unknown suite '" + suite + "'");
  SuiteReport r{suite, rec.release()};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteReport> run_verify(const std::string& selector, const VerifyOptions& opt) {
  std::vector<std::string> which;
  if (selector == "all") {
    which = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), selector) == suite_names().end())
      throw UsageError("unknown suite '" + selector + "' (expected all|points|quartics|cubics|predegrees|crosschecks|properties)");
    which = {selector};
  }
  OrbitEngine engine(opt.user_classes);
  std::vector<SuiteReport> out;
  for (const auto& s : which) out.push_back(run_suite(s, engine, opt));
  return out;
}

std::string render_verify(const std::vector<SuiteReport>& reports, Format format) {
  const Check* fail = nullptr;
  for (const auto& r : reports)
    if (!fail) fail = r.first_failure();
  auto counts = [](const SuiteReport& r) {
    std::array<int, 3> c{0, 0, 0};  // passed, failed, skipped
    for (const auto& k : r.checks) ++c[k.skipped ? 2 : (k.ok ? 0 : 1)];
    return c;
  };
  std::ostringstream out;
  if (format == Format::Json) {
    nlohmann::json j;
    j["ok"] = fail == nullptr;
    j["suites"] = nlohmann::json::array();
    for (const auto& r : reports) {
      auto c = counts(r);
      nlohmann::json s{{"suite", r.suite}, {"passed", c[0]}, {"failed", c[1]}, {"skipped", c[2]}};
      s["checks"] = nlohmann::json::array();
      for (const auto& k : r.checks)
        s["checks"].push_back({{"name", k.name}, {"status", k.skipped ? "skipped" : (k.ok ? "pass" : "fail")}});
      j["suites"].push_back(std::move(s));
    }
    if (fail)
      j["first_failure"] = {{"suite", fail->suite},       {"name", fail->name},
                            {"computed", fail->lhs},      {"expected", fail->rhs},
                            {"computed_json", fail->lhs_json}, {"expected_json", fail->rhs_json}};
    out << j.dump(2) << "\n";
    return out.str();
  }
  if (format == Format::Csv) {
    out << "suite,check,status\n";
    for (const auto& r : reports)
      for (const auto& k : r.checks) {
        std::string name = k.name;
        if (name.find_first_of(",\"") != std::string::npos) {
          std::string q = "\"";
          for (char ch : name) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          name = q + "\"";
        }
        out << r.suite << "," << name << "," << (k.skipped ? "skipped" : (k.ok ? "pass" : "fail")) << "\n";
      }
    return out.str();
  }
  const std::string pre = format == Format::Latex ? "% " : "";
  for (const auto& r : reports) {
    auto c = counts(r);
    out << pre << r.suite << ": " << c[0] << " passed";
    if (c[1]) out << ", " << c[1] << " FAILED";
    if (c[2]) out << ", " << c[2] << " skipped";
    out << "\n";
    for (const auto& k : r.checks)
      if (k.skipped) out << pre << "  skipped " << k.name << " (" << k.rhs << ")\n";
  }
  if (fail) {
    out << pre << "first failure: [" << fail->suite << "] " << fail->name << "\n";
    out << pre << "  computed: " << fail->lhs << "\n";
    out << pre << "  expected: " << fail->rhs << "\n";
    out << pre << "  computed (json): " << fail->lhs_json.dump() << "\n";
    out << pre << "  expected (json): " << fail->rhs_json.dump() << "\n";
  } else {
    out << pre << "all checks passed\n";
  }
  return out.str();
}

}  // namespace eqorbit
