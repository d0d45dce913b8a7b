#include "eqorbit/orbit_classes.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <regex>
#include <sstream>

#include "eqorbit/chern_calc.hpp"
#include "eqorbit/localization.hpp"

namespace eqorbit {

namespace {

Symbols c3_table() {
  static const Symbols t = chern_symbols(3);
  return t;
}

Symbols plane_h_table() {
  static const Symbols t = chern_symbols_with(3, {"H"});
  return t;
}

Symbols uv_table() {
  static const Symbols t = make_symbols({"u", "v"});
  return t;
}

Symbols uvh_table() {
  static const Symbols t = make_symbols({"u", "v", "H"});
  return t;
}

int sym_rank(int d) { return (d + 1) * (d + 2) / 2; }

// c_0..c_N of Sym^d V^vee over {c1,c2,c3}, memoized.
const std::vector<SparsePoly>& sym_dual_chern(int d) {
  static std::mutex mu;
  static std::map<int, std::vector<SparsePoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  auto t = c3_table();
  auto v = BundleClass::from_chern(3, {SparsePoly::variable(t, "c1"), SparsePoly::variable(t, "c2"),
                                       SparsePoly::variable(t, "c3")});
  auto s = sym_power(dual(v), d);
  std::vector<SparsePoly> c;
  for (int i = 0; i <= s.rank; ++i) c.push_back(s.chern(i));
  return cache.emplace(d, std::move(c)).first->second;
}

BundleClass base_bundle(const Symbols& t) {
  return BundleClass::from_chern(3, {SparsePoly::variable(t, "c1"), SparsePoly::variable(t, "c2"),
                                     SparsePoly::variable(t, "c3")});
}

// int over the tower of extra * alpha, alpha the Leray complement of P(Sym^d V^vee)
// pulled back along H -> h.
SparsePoly alpha_pushforward(const RingTower& tower, const SparsePoly& extra, const SparsePoly& h,
                             int d) {
  const int n = sym_rank(d);
  const auto& cs = sym_dual_chern(d);
  auto pw = tower.integrate_powers(extra, h, static_cast<unsigned>(n));
  SparsePoly out(c3_table());
  for (int i = 0; i < n; ++i) {
    const auto& p = pw[n - 1 - i];
    if (p.is_zero()) continue;
    out += cs[i] * p.rebase(c3_table());
  }
  return out;
}

SparsePoly relative_canonical(const RingTower& t) {
  SparsePoly k(t.symbols());
  for (const auto& l : t.levels()) {
    k -= l.chern.front();
    k -= SparsePoly::variable(t.symbols(), l.symbol) * Rational(l.rank);
  }
  return k;
}

}  // namespace

SparsePoly Factored::expand(const Symbols& symbols) const {
  SparsePoly p = SparsePoly::constant(symbols, scalar);
  for (const auto& f : factors) p *= f.rebase(symbols);
  return p;
}

std::string Factored::to_string() const {
  std::string s;
  if (factors.empty()) return scalar.get_str();
  if (scalar == -1)
    s = "-";
  else if (scalar != 1)
    s = is_integer(scalar) ? scalar.get_str() : "(" + scalar.get_str() + ")";
  for (const auto& f : factors) {
    if (factors.size() == 1 && s.empty()) return f.to_string();
    if (factors.size() == 1 && f.size() == 1 && f.terms().front().coeff == 1) return s + f.to_string();
    s += "(" + f.to_string() + ")";
  }
  return s;
}

std::string Factored::to_latex() const {
  if (factors.empty()) return scalar.get_str();
  std::string s;
  if (scalar == -1)
    s = "-";
  else if (scalar != 1)
    s = is_integer(scalar) ? scalar.get_str()
                           : "\\frac{" + scalar.get_num().get_str() + "}{" +
                                 scalar.get_den().get_str() + "}";
  for (const auto& f : factors) {
    if (factors.size() == 1 && s.empty()) return f.to_latex();
    if (factors.size() == 1 && f.size() == 1 && f.terms().front().coeff == 1) return s + " " + f.to_latex();
    s += "\\left(" + f.to_latex() + "\\right)";
  }
  return s;
}

Factored primitive_split(const SparsePoly& p) {
  if (p.is_zero()) return {0, {}};
  if (p.is_constant()) return {p.constant_term(), {}};
  Rational c = p.content();
  if (p.terms().front().coeff < 0) c = -c;
  return {c, {p / c}};
}

// ---------------------------------------------------------------- Kazarian

Symbols kazarian_symbols() {
  static const Symbols t = make_symbols(std::vector<Symbol>{{"c1", 1}, {"c2", 2}, {"u", 1}});
  return t;
}

KazarianLocalClass parse_kazarian_local(const std::string& name, const std::string& polynomial) {
  KazarianLocalClass k{name, parse_poly(kazarian_symbols(), polynomial)};
  if (!k.poly.homogeneous_degree())
    throw UsageError("Kazarian class " + name + " is not homogeneous");
  if (!k.poly.is_zero() && !k.poly.substitute({{"u", SparsePoly(kazarian_symbols())}}).is_zero())
    throw UsageError("Kazarian class " + name + " does not vanish at u = 0");
  return k;
}

KazarianLocalClass kazarian_local(const std::string& name) {
  static const std::map<std::string, std::string> known = {
      {"A6",
       "u*(-c1+u)*(c2-c1*u+u^2)*(720*c1^4-1248*c1^2*c2+156*c2^2-1500*c1^3*u+1514*c1*c2*u"
       "+1236*c1^2*u^2-485*c2*u^2-487*c1*u^3+79*u^4)"},
      {"D6", "2*u*(-c1+u)*(4*c2-2*c1*u+u^2)*(c2-c1*u+u^2)*(12*c1^2-6*c2-13*c1*u+4*u^2)"},
      {"E6", "3*u*(-c1+u)*(2*c1^2+c2-3*c1*u+u^2)*(4*c2-2*c1*u+u^2)*(c2-c1*u+u^2)"},
  };
  auto it = known.find(name);
  if (it == known.end()) throw UsageError("no built-in Kazarian class named " + name);
  return parse_kazarian_local(name, it->second);
}

std::vector<KazarianLocalClass> parse_kazarian_list(const nlohmann::json& j) {
  if (!j.is_array()) throw UsageError("Kazarian file must hold a JSON list");
  std::vector<KazarianLocalClass> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("name") || !e.contains("polynomial") ||
        !e.at("name").is_string() || !e.at("polynomial").is_string())
      throw UsageError("Kazarian entries need string fields 'name' and 'polynomial'");
    out.push_back(parse_kazarian_local(e.at("name").get<std::string>(),
                                       e.at("polynomial").get<std::string>()));
  }
  return out;
}

std::vector<KazarianLocalClass> load_kazarian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open Kazarian file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad JSON in " + path + ": " + e.what());
  }
  return parse_kazarian_list(j);
}

SparsePoly kazarian_class(const KazarianLocalClass& local, int d) {
  if (d < 1) throw UsageError("kazarian_class needs d >= 1");
  auto t = chern_symbols_with(3, {"h"});
  RingTower tower = RingTower(t, {"c1", "c2", "c3"}).extend(base_bundle(t), "h");
  SparsePoly h = SparsePoly::variable(t, "h");
  auto norm = [&](const SparsePoly& p) { return tower.normal_form(p); };
  BundleClass tangent =
      ses_complement(twist_line(base_bundle(t), h), BundleClass::trivial(t, 1), norm);
  SparsePoly pulled = local.poly.substitute(
      {{"c1", tangent.chern(1)}, {"c2", tangent.chern(2)}, {"u", h * Rational(d)}}, t);
  return tower.fiber_integrate(pulled).rebase(c3_table());
}

// ---------------------------------------------------------------- multiplication maps

SparsePoly mult_map_class(const std::vector<MultMapFactor>& factors, int map_degree, int total_d) {
  if (factors.empty()) throw UsageError("mult_map_class needs at least one factor");
  if (map_degree < 1) throw UsageError("map degree must be positive");
  int sum = 0;
  for (const auto& f : factors) {
    if (f.form_degree < 1 || f.multiplicity < 1)
      throw UsageError("factor degrees and multiplicities must be positive");
    sum += f.form_degree * f.multiplicity;
  }
  if (sum != total_d)
    throw UsageError("factor degrees sum to " + std::to_string(sum) + ", expected " +
                     std::to_string(total_d));
  std::vector<std::string> hs;
  for (std::size_t i = 0; i < factors.size(); ++i) hs.push_back("h" + std::to_string(i + 1));
  auto t = chern_symbols_with(3, hs);
  RingTower tower(t, {"c1", "c2", "c3"});
  SparsePoly h(t);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    tower = tower.extend(sym_power(dual(base_bundle(t)), factors[i].form_degree), hs[i]);
    h += SparsePoly::variable(t, hs[i]) * Rational(factors[i].multiplicity);
  }
  SparsePoly r = alpha_pushforward(tower, SparsePoly::constant(t, 1), h, total_d) / Rational(map_degree);
  if (!r.has_integer_coefficients())
    throw ConsistencyError("multiplication-map pushforward not divisible by the map degree " +
                           std::to_string(map_degree) + ": " + r.to_string());
  return r;
}

SparsePoly mult_map_class(const std::vector<int>& factor_degrees, int map_degree, int total_d) {
  std::vector<MultMapFactor> f;
  for (int e : factor_degrees) f.push_back({e, 1});
  return mult_map_class(f, map_degree, total_d);
}

RingTower concurrent_lines_tower(int copies) {
  std::vector<std::string> extra{"hp"};
  for (int i = 1; i <= copies; ++i) extra.push_back("k" + std::to_string(i));
  auto t = chern_symbols_with(3, extra);
  RingTower tower = RingTower(t, {"c1", "c2", "c3"}).extend(base_bundle(t), "hp");
  auto norm = [&](const SparsePoly& p) { return tower.normal_form(p); };
  BundleClass k = ses_complement(dual(base_bundle(t)),
                                 BundleClass::line(SparsePoly::variable(t, "hp")), norm);
  RingTower out = tower;
  for (int i = 1; i <= copies; ++i) out = out.extend(k, "k" + std::to_string(i));
  return out;
}

SparsePoly concurrent_lines_class() {
  RingTower tower = concurrent_lines_tower(3);
  const auto& t = tower.symbols();
  SparsePoly h = SparsePoly::variable(t, "k1") + SparsePoly::variable(t, "k2") +
                 SparsePoly::variable(t, "k3");
  SparsePoly r = alpha_pushforward(tower, SparsePoly::constant(t, 1), h, 3) / Rational(6);
  if (!r.has_integer_coefficients())
    throw ConsistencyError("concurrent-lines pushforward not divisible by 6: " + r.to_string());
  return r;
}

// ---------------------------------------------------------------- W-variety

RingTower w_variety_tower() {
  auto t = chern_symbols_with(3, {"H_line", "H_point", "H_curve"});
  RingTower tower = RingTower(t, {"c1", "c2", "c3"});
  BundleClass v = base_bundle(t);
  tower = tower.extend(dual(v), "H_line");
  SparsePoly hl = SparsePoly::variable(t, "H_line");
  SparsePoly hp = SparsePoly::variable(t, "H_point");
  BundleClass s = ses_complement(v, BundleClass::line(hl),
                                 [&](const SparsePoly& p) { return tower.normal_form(p); });
  tower = tower.extend(s, "H_point");
  SparsePoly omega = -s.chern(1) - hp * Rational(2);
  BundleClass jets = jet_bundle(hp * Rational(3), 3, omega);
  BundleClass flex = ses_complement(sym_power(dual(v), 3), jets,
                                    [&](const SparsePoly& p) { return tower.normal_form(p); });
  return tower.extend(flex, "H_curve");
}

WVarietyResult w_variety_classes(int d) {
  if (d < 4) throw UsageError("w_variety_classes needs d >= 4");
  RingTower tower = w_variety_tower();
  const auto& t = tower.symbols();
  auto var = [&](const char* n) { return SparsePoly::variable(t, n); };
  SparsePoly c1 = var("c1"), hl = var("H_line"), hp = var("H_point"), hc = var("H_curve");

  WVarietyResult r;
  r.d = d;
  r.relative_canonical = relative_canonical(tower);
  // Riemann-Hurwitz for W -> P(Sym^3 V^vee), H -> H_curve
  const int n3 = sym_rank(3);
  SparsePoly k_target = -(sym_dual_chern(3)[1].rebase(t) + hc * Rational(n3));
  r.ramification = r.relative_canonical - k_target;

  // Z: the line meets the cubic to order >= 4 (next jet piece twisted by O(1))
  SparsePoly omega = tower.levels()[1].chern.front() * Rational(-1) - hp * Rational(2);
  r.z_class = hc + hp * Rational(3) + omega * Rational(3);

  // R = m_Z Z + 2 W_BN with W_BN of H_curve-degree 1
  Rational rc = r.ramification.coefficient("H_curve", 1).constant_term();
  Rational zc = r.z_class.coefficient("H_curve", 1).constant_term();
  Rational mz = (rc - 2) / zc;
  if (!is_integer(mz) || mz < 1)
    throw ConsistencyError("Riemann-Hurwitz bookkeeping gives non-integral Z multiplicity");
  r.z_multiplicity = static_cast<int>(mz.get_num().get_si());
  r.w_bn = (r.ramification - r.z_class * mz) / Rational(2);
  r.w_an = (hc - c1) * Rational(12) - r.w_bn * Rational(3) - r.z_class * Rational(2);

  const std::vector<std::pair<const char*, std::pair<const SparsePoly*, const char*>>> quoted = {
      {"relative canonical", {&r.relative_canonical, "-7*H_curve+H_line+H_point+7*c1"}},
      {"Z", {&r.z_class, "H_curve-3*H_point+3*H_line-3*c1"}},
      {"ramification", {&r.ramification, "3*H_curve+H_line+H_point-3*c1"}},
      {"W_BN", {&r.w_bn, "H_curve-H_line+2*H_point"}},
      {"W_AN", {&r.w_an, "7*H_curve-3*H_line-6*c1"}},
  };
  for (const auto& [label, pr] : quoted)
    if (*pr.first != parse_poly(t, pr.second))
      throw ConsistencyError(std::string("W-variety ") + label + " class " + pr.first->to_string() +
                             " disagrees with " + pr.second);

  SparsePoly h = hc + hl * Rational(d - 3);
  r.o_cbn = alpha_pushforward(tower, r.w_bn, h, d);
  r.o_can = alpha_pushforward(tower, r.w_an, h, d);
  r.tower = tower.describe();
  return r;
}

Rational w_variety_cbn_degree(int d) {
  if (d < 4) throw UsageError("needs d >= 4");
  RingTower tower = w_variety_tower();
  const auto& t = tower.symbols();
  SparsePoly h = SparsePoly::variable(t, "H_curve") + SparsePoly::variable(t, "H_line") * Rational(d - 3);
  SparsePoly wbn = parse_poly(t, "H_curve-H_line+2*H_point");
  return tower.integrate_powers(wbn, h, 9)[8].constant_term();
}

Rational w_variety_flex_degree(int d) {
  if (d < 4) throw UsageError("needs d >= 4");
  RingTower tower = w_variety_tower();
  const auto& t = tower.symbols();
  SparsePoly hc = SparsePoly::variable(t, "H_curve");
  SparsePoly h = hc + SparsePoly::variable(t, "H_line") * Rational(d - 3);
  return tower.integrate_powers(hc, h, 9)[8].constant_term() * Rational(12);
}

Rational predegree_poly_cbn(int d) {
  if (d < 4) throw UsageError("predegree_poly_cbn needs d >= 4");
  Rational e = d - 3;
  return 24 + 144 * e + 140 * e * e;
}

Rational predegree_poly_cflex(int d) {
  if (d < 4) throw UsageError("predegree_poly_cflex needs d >= 4");
  Rational e = d - 3;
  return 12 * (9 + 72 * e + 84 * e * e);
}

// ---------------------------------------------------------------- points

SparsePoly points_class(const std::vector<int>& multiplicities) {
  const int n = static_cast<int>(multiplicities.size());
  if (n < 3) throw UsageError("points_class needs at least 3 points");
  for (int m : multiplicities)
    if (m < 1) throw UsageError("multiplicities must be positive");
  const int d = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  auto t = uv_table();
  SparsePoly u = SparsePoly::variable(t, "u"), v = SparsePoly::variable(t, "v");
  SparsePoly g0 = SparsePoly::constant(t, 1);
  for (int i = 0; i <= d; ++i) g0 *= u * Rational(i) + v * Rational(d - i);
  SparsePoly diff = u - v;
  std::vector<RationalTerm> terms;
  terms.push_back({g0 * ratio(n - 2, d), {u, v, diff, diff}});
  for (int m : multiplicities) {
    if (2 * m == d) continue;
    terms.push_back({g0 * Rational(2 * m - d),
                     {v * Rational(m) + u * Rational(d - m), u * Rational(m) + v * Rational(d - m), diff,
                      diff}});
  }
  return sum_rational_terms(terms, t);
}

SparsePoly points_class_distinct(int n) {
  if (n < 3) throw UsageError("points_class_distinct needs n >= 3");
  auto t = uvh_table();
  SparsePoly u = SparsePoly::variable(t, "u"), v = SparsePoly::variable(t, "v"),
             h = SparsePoly::variable(t, "H");
  SparsePoly p = SparsePoly::constant(t, Rational(n) * (n - 1) * (n - 2));
  for (int j = 2; j <= n - 2; ++j) p *= h + u * Rational(j) + v * Rational(n - j);
  return p;
}

SparsePoly flip_sign(const SparsePoly& q) {
  const auto& t = q.symbols();
  std::map<std::string, SparsePoly> b;
  for (const char* s : {"u", "v"})
    if (t->contains(s)) b.emplace(s, -SparsePoly::variable(t, s));
  return q.substitute(b);
}

SparsePoly points_projectivize(const SparsePoly& q, int d) {
  return chern_shift(q, -d, ShiftDirection::Projectivize, {"u", "v"}, true, "H").rebase(uvh_table());
}

SparsePoly plane_projectivize(const SparsePoly& p, int d) {
  return chern_shift(p.rebase(c3_table()), d, ShiftDirection::Projectivize, {"c1", "c2", "c3"}, false,
                     "H")
      .rebase(plane_h_table());
}

Rational h_coefficient_at_zero(const SparsePoly& P, unsigned k) {
  SparsePoly c = P.coefficient("H", k);
  for (const auto& t : c.terms()) {
    bool unit = std::all_of(t.mono.exps.begin(), t.mono.exps.end(), [](auto e) { return e == 0; });
    if (unit) return t.coeff;
  }
  return 0;
}

Rational plane_section_count(const SparsePoly& p) { return grassmann_integrate(3, 5, p.rebase(c3_table())); }

SparsePoly hypersurface_class(int k) {
  if (k < 1) throw UsageError("hypersurface degree must be positive");
  return SparsePoly::variable(c3_table(), "c1") * Rational(-k);
}

std::vector<std::vector<int>> partitions(int d, int min_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

// ---------------------------------------------------------------- engine

std::vector<std::string> quartic_row_ids() {
  return {"A6",      "D6",        "E6",        "AN",        "flex",      "quadrilateral",
          "D4",      "2lines+conic", "line+cubic", "A5",      "A4",        "A3",
          "nodal(1,0)", "nodal(0,1)", "nodal(0,3)", "smooth(1)", "general"};
}

std::vector<std::string> cubic_row_ids() {
  return {"cubic:triple-line", "cubic:double-line+line", "cubic:concurrent-lines",
          "cubic:conic+tangent", "cubic:triangle",        "cubic:conic+line",
          "cubic:cuspidal",      "cubic:nodal",           "cubic:smooth",
          "cubic:smooth-j1728",  "cubic:smooth-j0"};
}

OrbitEngine::OrbitEngine() = default;

OrbitEngine::OrbitEngine(std::vector<KazarianLocalClass> user_classes) : user_(std::move(user_classes)) {}

std::optional<KazarianLocalClass> OrbitEngine::user_class(const std::string& name) const {
  for (const auto& k : user_)
    if (k.name == name) return k;
  return std::nullopt;
}

SparsePoly OrbitEngine::kazarian(const std::string& name) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = "kaz:" + name;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  SparsePoly r = kazarian_class(kazarian_local(name), 4);
  memo_.emplace(key, r);
  return r;
}

const WVarietyResult& OrbitEngine::w_variety() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!w_) w_ = std::make_unique<WVarietyResult>(w_variety_classes(4));
  return *w_;
}

SparsePoly OrbitEngine::four_lines() {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = memo_.find("fourlines");
  if (it != memo_.end()) return it->second;
  SparsePoly r = mult_map_class(std::vector<int>{1, 1, 1, 1}, 24, 4);
  memo_.emplace("fourlines", r);
  return r;
}

namespace {

bool parse_two_ints(const std::string& id, const std::string& head, int& a, int& b) {
  std::smatch m;
  std::regex re("^" + head + R"(\((\d+),(\d+)\)$)");
  if (!std::regex_match(id, m, re)) return false;
  a = std::stoi(m[1]);
  b = std::stoi(m[2]);
  return true;
}

bool parse_one_int(const std::string& id, const std::string& head, int& a) {
  std::smatch m;
  std::regex re("^" + head + R"(\((\d+)\)$)");
  if (!std::regex_match(id, m, re)) return false;
  a = std::stoi(m[1]);
  return true;
}

SparsePoly divide_integral(const SparsePoly& p, const Rational& q, const std::string& what) {
  SparsePoly r = p / q;
  if (!r.has_integer_coefficients())
    throw ConsistencyError(what + ": division by " + q.get_str() + " is not integral");
  return r;
}

}  // namespace

SparsePoly OrbitEngine::quartic_p(const std::string& id) {
  if (id == "A6") return kazarian("A6") * Rational(3);
  if (id == "D6") return kazarian("D6") * Rational(3);
  if (id == "E6") return kazarian("E6") * Rational(2);
  if (id == "AN") return w_variety().o_can * Rational(2);
  if (id == "quadrilateral") return four_lines() * Rational(24);
  if (id == "flex") return quartic_p("AN") + quartic_p("D6") * Rational(2);
  if (id == "D4")
    return divide_integral(quartic_p("A6") * Rational(8) - quartic_p("quadrilateral"), 4, "D4 row");
  if (id == "2lines+conic") return quartic_p("quadrilateral") + quartic_p("D4") * Rational(2);
  if (id == "line+cubic") return quartic_p("quadrilateral") + quartic_p("D4") * Rational(3);
  if (id == "general") return quartic_p("A6") * Rational(8);
  for (int n = 3; n <= 5; ++n)
    if (id == "A" + std::to_string(n)) return quartic_p("A6") * Rational(7 - n);
  int a = 0, b = 0;
  if (parse_two_ints(id, "nodal", a, b))
    return quartic_p("A6") * Rational(8) - quartic_p("D6") * Rational(2 * a) -
           quartic_p("flex") * Rational(b);
  if (parse_one_int(id, "smooth", a)) return quartic_p("A6") * Rational(8) - quartic_p("E6") * Rational(a);
  throw UsageError("unknown quartic identifier: " + id);
}

OrbitClassResult OrbitEngine::make_plane(const std::string& id, const std::string& name, int d,
                                         const SparsePoly& p, std::optional<long> aut, bool aut_inf,
                                         const std::string& provenance, std::optional<Factored> fac) {
  OrbitClassResult r;
  r.id = id;
  r.name = name;
  r.d = d;
  r.rank = 3;
  r.affine_p = p.rebase(c3_table());
  r.projective_P = plane_projectivize(r.affine_p, d);
  if (chern_shift(r.projective_P, d, ShiftDirection::Affinize, {}, false).rebase(plane_h_table()) !=
      r.affine_p.rebase(plane_h_table()))
    throw ConsistencyError("affinize(projectivize(p)) != p for " + id);
  // coefficient of H^codim at c = 0: #Aut times the degree of the projective orbit closure
  r.predegree = r.affine_p.is_zero() ? Rational(0)
                                     : h_coefficient_at_zero(r.projective_P, static_cast<unsigned>(r.affine_p.degree()));
  r.aut_order = aut;
  r.aut_infinite = aut_inf;
  r.provenance = provenance;
  if (fac) {
    if (fac->expand(c3_table()) != r.affine_p)
      throw ConsistencyError("stored factorization of " + id + " does not expand to the class");
    r.factored = *fac;
  } else {
    r.factored = primitive_split(r.affine_p);
  }
  if (aut_inf)
    r.notes.push_back(
        "infinite automorphism group: p is the unweighted orbit-closure class [O_C], not #Aut*[O_C]");
  return r;
}

OrbitClassResult OrbitEngine::points_result(const std::vector<int>& m) {
  const int d = std::accumulate(m.begin(), m.end(), 0);
  OrbitClassResult r;
  std::string ids;
  for (std::size_t i = 0; i < m.size(); ++i) ids += (i ? "," : "") + std::to_string(m[i]);
  r.id = "points:" + ids;
  r.name = std::to_string(m.size()) + " points on P^1 with multiplicities " + ids;
  r.d = d;
  r.rank = 2;
  r.flipped = true;
  r.affine_p = points_class(m);
  SparsePoly ab = points_localization(m);
  if (ab != r.affine_p)
    throw ConsistencyError("points " + ids + ": closed formula " + r.affine_p.to_string() +
                           " != localization " + ab.to_string());
  r.projective_P = points_projectivize(r.affine_p, d);
  r.predegree = d >= 3 ? h_coefficient_at_zero(r.projective_P, d - 3) : Rational(0);
  r.provenance = "closed formula; Atiyah-Bott localization on the resolution (agrees)";
  r.factored = primitive_split(r.affine_p);
  r.notes.push_back("affine_p is p_X(-u,-v); use the sign flip for p_X(u,v)");
  return r;
}

OrbitClassResult OrbitEngine::cubic_row(const std::string& row) {
  const std::string id = "cubic:" + row;
  auto inf = [&](const std::string& name, const SparsePoly& p, const std::string& prov) {
    return make_plane(id, name, 3, p, std::nullopt, true, prov);
  };
  if (row == "triple-line")
    return inf("Triple line", mult_map_class(std::vector<MultMapFactor>{{1, 3}}, 1, 3),
               "multiplication map P(V^vee) -> P(Sym^3 V^vee), H -> 3h");
  if (row == "double-line+line")
    return inf("Double line plus line", mult_map_class(std::vector<MultMapFactor>{{1, 2}, {1, 1}}, 1, 3),
               "multiplication map P(V^vee)^2 -> P(Sym^3 V^vee), H -> 2h1+h2");
  if (row == "conic+line")
    return inf("Conic plus line", mult_map_class(std::vector<MultMapFactor>{{2, 1}, {1, 1}}, 1, 3),
               "multiplication map P(Sym^2 V^vee) x P(V^vee) -> P(Sym^3 V^vee)");
  if (row == "triangle")
    return inf("Triangle", mult_map_class(std::vector<int>{1, 1, 1}, 6, 3),
               "multiplication map P(V^vee)^3 -> P(Sym^3 V^vee), degree 6");
  if (row == "concurrent-lines")
    return inf("Three concurrent lines", concurrent_lines_class(),
               "multiplication map from P(K)^3 over P(V), K = ker(V^vee -> O(1)), degree 6");
  if (row == "cuspidal" || row == "conic+tangent") {
    const std::string local = row == "cuspidal" ? "A2" : "A3";
    auto k = user_class(local);
    if (!k)
      throw UsageError("row " + id + " needs a user-supplied " + local +
                       " Kazarian class (--kazarian-file)");
    auto r = inf(row == "cuspidal" ? "Cuspidal cubic" : "Conic plus tangent line", kazarian_class(*k, 3),
                 "Kazarian pushforward of user-supplied " + local + " class, d = 3");
    r.notes.push_back("conditional row: depends on the user-supplied local class " + local);
    return r;
  }
  // j-invariant rows: orbit closures are hypersurfaces in P(Sym^3 V^vee)
  SparsePoly wj = hypersurface_class(12);
  SparsePoly wj_proj = plane_projectivize(wj, 3);
  auto t = plane_h_table();
  if (wj_proj != parse_poly(t, "12*(H-c1)"))
    throw ConsistencyError("j-divisor class does not projectivize to 12(H - c1)");
  auto jrow = [&](const std::string& name, long aut, const std::string& prov) {
    SparsePoly orbit = wj * ratio(18, aut);
    Factored f{Rational(aut), {orbit}};
    auto r = make_plane(id, name, 3, orbit * Rational(aut), aut, false, prov, f);
    return r;
  };
  if (row == "smooth") return jrow("Smooth cubic (j != 0, 1728)", 18, "fixed-j divisor 12(H - c1)");
  if (row == "smooth-j1728")
    return jrow("Smooth cubic with j = 1728", 36, "fixed-j divisor 12(H - c1), counted with ramification 2");
  if (row == "smooth-j0")
    return jrow("Smooth cubic with j = 0", 54, "fixed-j divisor 12(H - c1), counted with ramification 3");
  if (row == "nodal") {
    SparsePoly disc = hypersurface_class(3 * (3 - 1) * (3 - 1));
    Factored f{6, {disc}};
    return make_plane(id, "Irreducible nodal cubic", 3, disc * Rational(6), 6, false,
                      "discriminant hypersurface of degree 3(d-1)^2 = 12", f);
  }
  throw UsageError("unknown cubic row: " + row);
}

OrbitClassResult OrbitEngine::compute(const std::string& id) {
  static const std::map<std::string, std::pair<std::string, long>> named = {
      {"A6", {"General quartic with an A6 singularity", 3}},
      {"D6", {"Nodal cubic union a line tangent to a branch (D6)", 3}},
      {"E6", {"Rational quartic with an E6 singularity", 2}},
      {"AN", {"Nodal cubic union a flex line", 2}},
      {"flex", {"Smooth cubic union a flex line", 2}},
      {"quadrilateral", {"Four general lines", 24}},
  };
  if (id.rfind("points:", 0) == 0) {
    std::vector<int> m;
    std::string rest = id.substr(7);
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 4)
        throw UsageError("bad multiplicity list: " + rest);
      m.push_back(std::stoi(tok));
    }
    if (m.empty()) throw UsageError("empty multiplicity list");
    std::sort(m.rbegin(), m.rend());
    return points_result(m);
  }
  if (id.rfind("cubic:", 0) == 0) return cubic_row(id.substr(6));
  if (id.rfind("kazarian:", 0) == 0) {
    auto rest = id.substr(9);
    auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw UsageError("expected kazarian:<name>:<d>");
    std::string name = rest.substr(0, colon), ds = rest.substr(colon + 1);
    if (ds.empty() || ds.size() > 3 || !std::all_of(ds.begin(), ds.end(), ::isdigit))
      throw UsageError("bad degree in " + id);
    int d = std::stoi(ds);
    if (d < 1) throw UsageError("degree must be positive");
    auto k = user_class(name);
    KazarianLocalClass local = k ? *k : kazarian_local(name);
    auto r = make_plane(id, "Kazarian locus " + name + " in degree " + std::to_string(d), d,
                        kazarian_class(local, d), std::nullopt, false,
                        "Kazarian pushforward along P(V) -> B, u = d*h");
    r.notes.push_back("unweighted locus class; multiply by #Aut for p_C");
    return r;
  }
  auto it = named.find(id);
  if (it != named.end()) {
    std::string prov;
    std::optional<Factored> fac;
    auto t = c3_table();
    if (id == "A6") {
      prov = "3 * Kazarian pushforward of the A6 class, d = 4";
      fac = Factored{336, {parse_poly(t, "9*c1^3+12*c1*c2-11*c3"), parse_poly(t, "2*c1^3+c1*c2+c3")}};
    } else if (id == "D6") {
      prov = "3 * Kazarian pushforward of the D6 class, d = 4 (agrees with 3 * [O_CBN] from the W-variety)";
    } else if (id == "E6") {
      prov = "2 * Kazarian pushforward of the E6 class, d = 4";
      fac = Factored{96, {parse_poly(t, "2*c1^3+c1*c2+c3"), parse_poly(t, "9*c1^3-6*c1*c2+7*c3")}};
    } else if (id == "AN") {
      prov = "2 * [O_CAN] from the W-variety tower";
    } else if (id == "flex") {
      prov = "relation p_AN + 2 p_D6";
    } else {
      prov = "24 * multiplication map P(V^vee)^4 -> P(Sym^4 V^vee) divided by 24";
    }
    auto r = make_plane(id, it->second.first, 4, quartic_p(id), it->second.second, false, prov, fac);
    if (id == "flex") r.notes.push_back("member with specified j-invariant; the orbit family has moduli");
    return r;
  }
  static const std::map<std::string, std::pair<std::string, std::string>> relations = {
      {"D4", {"General quartic with a D4 singularity", "relation (8 p_A6 - p_Q) / 4"}},
      {"2lines+conic", {"Two lines plus a conic", "relation p_Q + 2 p_D4"}},
      {"line+cubic", {"A line plus a general cubic", "relation p_Q + 3 p_D4"}},
      {"general", {"General smooth quartic", "relation 8 p_A6"}},
      {"A5", {"General quartic with an A5 singularity", "relation 2 p_A6"}},
      {"A4", {"General quartic with an A4 singularity", "relation 3 p_A6"}},
      {"A3", {"General quartic with an A3 singularity", "relation 4 p_A6"}},
  };
  auto rt = relations.find(id);
  int a = 0, b = 0;
  std::string name, prov;
  if (rt != relations.end()) {
    name = rt->second.first;
    prov = rt->second.second;
  } else if (parse_two_ints(id, "nodal", a, b)) {
    name = "Quartic with " + std::to_string(a) + " nodes and " + std::to_string(b) +
           " cusps, no hyperflexes";
    prov = "relation 8 p_A6 - 2 delta p_D6 - kappa p_flex";
  } else if (parse_one_int(id, "smooth", a)) {
    name = "Smooth quartic with " + std::to_string(a) + " hyperflexes";
    prov = "relation 8 p_A6 - n p_E6";
  } else {
    throw UsageError("unknown curve identifier: " + id);
  }
  auto r = make_plane(id, name, 4, quartic_p(id), std::nullopt, false, prov);
  r.notes.push_back("family with moduli: counts members with specified moduli");
  return r;
}

std::vector<OrbitClassResult> OrbitEngine::quartic_table() {
  std::vector<OrbitClassResult> out;
  for (const auto& id : quartic_row_ids()) out.push_back(compute(id));
  return out;
}

std::vector<OrbitClassResult> OrbitEngine::cubic_table() {
  std::vector<OrbitClassResult> out;
  for (const auto& id : cubic_row_ids()) {
    if ((id == "cubic:cuspidal" && !user_class("A2")) || (id == "cubic:conic+tangent" && !user_class("A3")))
      continue;
    out.push_back(compute(id));
  }
  return out;
}

std::vector<OrbitClassResult> OrbitEngine::section_counts() {
  auto rows = quartic_table();
  for (auto& r : rows) r.section_count = plane_section_count(r.affine_p);
  return rows;
}

std::vector<OrbitClassResult> OrbitEngine::fixed_j_divisor_entries() {
  std::vector<OrbitClassResult> out;
  for (const char* row : {"smooth", "smooth-j1728", "smooth-j0", "nodal"}) out.push_back(cubic_row(row));
  return out;
}

}  // namespace eqorbit
