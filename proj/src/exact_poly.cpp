#include "eqorbit/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace eqorbit {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw UsageError("empty rational");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw UsageError("bad rational: " + std::string(text));
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw UsageError("zero denominator: " + std::string(text));
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational ratio(long num, long den) {
  if (den == 0) throw UsageError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

SymbolTable::SymbolTable(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > kMaxSymbols)
    throw UsageError("too many symbols (max " + std::to_string(kMaxSymbols) + ")");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.name.empty()) throw UsageError("empty symbol name");
    if (s.degree < 1) throw UsageError("symbol degree must be positive: " + s.name);
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j].name == s.name) throw UsageError("duplicate symbol: " + s.name);
  }
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t SymbolTable::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw UsageError("unknown symbol: " + std::string(name));
  return *i;
}

bool SymbolTable::operator==(const SymbolTable& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name != other.symbols_[i].name ||
        symbols_[i].degree != other.symbols_[i].degree)
      return false;
  return true;
}

Symbols make_symbols(std::vector<Symbol> symbols) {
  return std::make_shared<const SymbolTable>(std::move(symbols));
}

Symbols make_symbols(std::initializer_list<std::string_view> names) {
  std::vector<Symbol> v;
  for (auto n : names) v.push_back({std::string(n), 1});
  return make_symbols(std::move(v));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exps) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree;
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  return false;
}

std::uint32_t monomial_degree(const SymbolTable& table, const Monomial& m) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < table.size(); ++i) d += m.exps[i] * table[i].degree;
  return d;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) {
    unsigned e = unsigned(a.exps[i]) + b.exps[i];
    if (e > 0xFFFF) throw UsageError("exponent overflow");
    r.exps[i] = static_cast<std::uint16_t>(e);
  }
  r.degree = a.degree + b.degree;
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < kMaxSymbols; ++i)
    if (d.exps[i] > m.exps[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxSymbols; ++i) r.exps[i] = m.exps[i] - d.exps[i];
  r.degree = m.degree - d.degree;
  return r;
}

bool is_unit_mono(const Monomial& m) {
  return std::all_of(m.exps.begin(), m.exps.end(), [](auto e) { return e == 0; });
}

}  // namespace

SparsePoly::SparsePoly() : symbols_([] {
  static const Symbols empty = make_symbols(std::vector<Symbol>{});
  return empty;
}()) {}

SparsePoly::SparsePoly(Symbols symbols) : symbols_(std::move(symbols)) {
  if (!symbols_) throw UsageError("null symbol table");
}

SparsePoly SparsePoly::constant(Symbols symbols, const Rational& c) {
  SparsePoly p(std::move(symbols));
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

SparsePoly SparsePoly::variable(Symbols symbols, std::string_view name) {
  SparsePoly p(std::move(symbols));
  Monomial m;
  auto i = p.symbols_->index(name);
  m.exps[i] = 1;
  m.degree = (*p.symbols_)[i].degree;
  p.terms_.push_back({m, 1});
  return p;
}

Monomial SparsePoly::make_monomial(const std::vector<unsigned>& exps) const {
  if (exps.size() > symbols_->size()) throw UsageError("exponent vector longer than symbol table");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0xFFFF) throw UsageError("exponent overflow");
    m.exps[i] = static_cast<std::uint16_t>(exps[i]);
  }
  m.degree = monomial_degree(*symbols_, m);
  return m;
}

SparsePoly SparsePoly::monomial(Symbols symbols, const std::vector<unsigned>& exps,
                                const Rational& c) {
  SparsePoly p(std::move(symbols));
  if (c != 0) p.terms_.push_back({p.make_monomial(exps), c});
  return p;
}

SparsePoly SparsePoly::from_terms(Symbols symbols, std::vector<Term> terms) {
  SparsePoly p(std::move(symbols));
  p.terms_ = std::move(terms);
  for (auto& t : p.terms_) t.mono.degree = monomial_degree(*p.symbols_, t.mono);
  p.canonicalize();
  return p;
}

void SparsePoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }),
            out.end());
  terms_ = std::move(out);
}

void SparsePoly::check_same_table(const SparsePoly& o, const char* op) const {
  if (symbols_ != o.symbols_ && !(*symbols_ == *o.symbols_))
    throw UsageError(std::string("symbol table mismatch in ") + op);
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_unit_mono(terms_[0].mono));
}

Rational SparsePoly::constant_term() const {
  if (!terms_.empty() && is_unit_mono(terms_.back().mono)) return terms_.back().coeff;
  return 0;
}

int SparsePoly::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree);
}

unsigned SparsePoly::degree_in(std::string_view symbol) const {
  auto i = symbols_->index(symbol);
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exps[i]);
  return d;
}

std::optional<int> SparsePoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  if (terms_.front().mono.degree != terms_.back().mono.degree) return std::nullopt;
  return static_cast<int>(terms_.front().mono.degree);
}

SparsePoly SparsePoly::homogeneous_part(int degree) const {
  SparsePoly r(symbols_);
  for (const auto& t : terms_)
    if (static_cast<int>(t.mono.degree) == degree) r.terms_.push_back(t);
  return r;
}

bool SparsePoly::only_uses(const std::vector<std::string>& names) const {
  std::array<bool, kMaxSymbols> allowed{};
  for (const auto& n : names)
    if (auto i = symbols_->find(n)) allowed[*i] = true;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < symbols_->size(); ++i)
      if (t.mono.exps[i] && !allowed[i]) return false;
  return true;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].mono, a[i].mono)) {
      out.push_back({b[j].mono, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same_table(o, "add");
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same_table(o, "sub");
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same_table(b, "mul");
  SparsePoly r(a.symbols_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1 || a.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
      r.terms_.push_back({mono_mul(t.mono, single.mono), t.coeff * single.coeff});
    return r;  // order preserved: grlex is a monomial order
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational tmp;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      tmp = s.coeff * t.coeff;
      auto [it, inserted] = acc.try_emplace(mono_mul(s.mono, t.mono), tmp);
      if (!inserted) it->second += tmp;
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({m, std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return grlex_greater(x.mono, y.mono); });
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

SparsePoly& SparsePoly::operator/=(const Rational& c) {
  if (c == 0) throw UsageError("division by zero");
  for (auto& t : terms_) t.coeff /= c;
  return *this;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(symbols_, 1);
  SparsePoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  check_same_table(o, "compare");
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& bindings,
                                  const Symbols& target) const {
  const auto n = symbols_->size();
  std::vector<const SparsePoly*> bound(n, nullptr);
  std::vector<std::optional<std::size_t>> passthrough(n);
  for (const auto& [name, value] : bindings) {
    auto i = symbols_->find(name);
    if (!i) throw UsageError("substitution binds undeclared symbol: " + name);
    if (value.symbols_ != target && !(*value.symbols_ == *target))
      throw UsageError("substitution value for " + name + " is over a different table");
    bound[*i] = &value;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!bound[i]) passthrough[i] = target->find((*symbols_)[i].name);

  // powers[i][k] = bound[i]^k, built lazily
  std::vector<std::vector<SparsePoly>> powers(n);
  auto power = [&](std::size_t i, unsigned k) -> const SparsePoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(constant(target, 1));
    while (v.size() <= k) v.push_back(v.back() * *bound[i]);
    return v[k];
  };

  // group terms by their bound part so each distinct product is built once
  std::map<std::vector<unsigned>, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    std::vector<unsigned> key(n, 0);
    Monomial rest;
    for (std::size_t i = 0; i < n; ++i) {
      auto e = t.mono.exps[i];
      if (!e) continue;
      if (bound[i]) {
        key[i] = e;
      } else {
        if (!passthrough[i])
          throw UsageError("symbol " + (*symbols_)[i].name + " missing from target table");
        rest.exps[*passthrough[i]] = e;
      }
    }
    rest.degree = monomial_degree(*target, rest);
    groups[key].push_back({rest, t.coeff});
  }

  SparsePoly result(target);
  for (auto& [key, rest_terms] : groups) {
    SparsePoly prod = constant(target, 1);
    for (std::size_t i = 0; i < n; ++i)
      if (key[i]) prod *= power(i, key[i]);
    SparsePoly rest = from_terms(target, std::move(rest_terms));
    result += prod * rest;
  }
  return result;
}

SparsePoly SparsePoly::substitute(const std::map<std::string, SparsePoly>& bindings) const {
  return substitute(bindings, symbols_);
}

SparsePoly SparsePoly::coefficient(std::string_view symbol, unsigned power) const {
  auto i = symbols_->index(symbol);
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.exps[i] == power) {
      Term c = t;
      c.mono.exps[i] = 0;
      out.push_back(std::move(c));
    }
  return from_terms(symbols_, std::move(out));
}

std::vector<SparsePoly> SparsePoly::coefficients_in(std::string_view symbol) const {
  auto i = symbols_->index(symbol);
  std::vector<std::vector<Term>> buckets(degree_in(symbol) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    auto e = c.mono.exps[i];
    c.mono.exps[i] = 0;
    buckets[e].push_back(std::move(c));
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(symbols_, std::move(b)));
  return out;
}

Rational SparsePoly::evaluate(const std::map<std::string, Rational>& point) const {
  const auto n = symbols_->size();
  std::vector<std::optional<Rational>> vals(n);
  for (const auto& [name, q] : point)
    if (auto i = symbols_->find(name)) vals[*i] = q;
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < n; ++i) {
      auto e = t.mono.exps[i];
      if (!e) continue;
      if (!vals[i]) throw UsageError("unbound symbol in evaluation: " + (*symbols_)[i].name);
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), vals[i]->get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), vals[i]->get_den_mpz_t(), e);
      v *= p;
    }
    sum += v;
  }
  return sum;
}

SparsePoly SparsePoly::rebase(const Symbols& target) const {
  if (symbols_ == target) return *this;
  const auto n = symbols_->size();
  std::vector<std::optional<std::size_t>> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = target->find((*symbols_)[i].name);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      if (!t.mono.exps[i]) continue;
      if (!map[i]) throw UsageError("rebase: symbol " + (*symbols_)[i].name + " not in target");
      m.exps[*map[i]] = t.mono.exps[i];
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::pair<SparsePoly, SparsePoly> SparsePoly::divide(const SparsePoly& divisor) const {
  check_same_table(divisor, "divide");
  if (divisor.is_zero()) throw UsageError("division by zero polynomial");
  const Term& lead = divisor.terms_.front();
  SparsePoly q(symbols_), rem(symbols_), p(*this);
  std::vector<Term> qterms, rterms;
  while (!p.is_zero()) {
    const Term& t = p.terms_.front();
    if (mono_divides(lead.mono, t.mono)) {
      Term qt{mono_div(t.mono, lead.mono), t.coeff / lead.coeff};
      SparsePoly step(symbols_);
      step.terms_.push_back(qt);
      qterms.push_back(qt);
      p -= step * divisor;
    } else {
      rterms.push_back(t);
      p.terms_.erase(p.terms_.begin());
    }
  }
  q.terms_ = std::move(qterms);  // generated in descending order
  rem.terms_ = std::move(rterms);
  return {q, rem};
}

SparsePoly SparsePoly::divide_exact(const SparsePoly& divisor) const {
  auto [q, r] = divide(divisor);
  if (!r.is_zero())
    throw ConsistencyError("non-exact division: (" + to_string() + ") / (" + divisor.to_string() +
                           ") leaves remainder " + r.to_string());
  return q;
}

bool SparsePoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return is_integer(t.coeff); });
}

Rational SparsePoly::content() const {
  if (terms_.empty()) return 0;
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return abs(c);
}

namespace {

std::string mono_string(const SymbolTable& tab, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < tab.size(); ++i) {
    if (!m.exps[i]) continue;
    s += tab[i].name;
    if (m.exps[i] > 1) s += "^" + std::to_string(m.exps[i]);
  }
  return s;
}

std::string latex_symbol(const std::string& name) {
  auto us = name.find('_');
  if (us != std::string::npos) return name.substr(0, us) + "_{" + name.substr(us + 1) + "}";
  std::size_t k = name.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
  if (k == 0 || k == name.size()) return name;
  return name.substr(0, k) + "_{" + name.substr(k) + "}";
}

}  // namespace

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    std::string mono = mono_string(*symbols_, t.mono);
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else if (is_integer(c)) {
      out += c.get_str() + mono;
    } else {
      out += "(" + c.get_str() + ")" + mono;
    }
  }
  return out;
}

std::string SparsePoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < symbols_->size(); ++i) {
      auto e = t.mono.exps[i];
      if (!e) continue;
      std::string p = latex_symbol((*symbols_)[i].name);
      if (e > 1) p += "^{" + std::to_string(e) + "}";
      parts.push_back(p);
    }
    std::string coeff;
    if (!is_integer(c))
      coeff = "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
    else if (c != 1 || parts.empty())
      coeff = c.get_str();
    out += coeff;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!coeff.empty() || i > 0) out += " ";
      out += parts[i];
    }
  }
  return out;
}

nlohmann::json SparsePoly::to_json() const {
  nlohmann::json j;
  j["symbols"] = nlohmann::json::array();
  j["degrees"] = nlohmann::json::array();
  for (const auto& s : symbols_->symbols()) {
    j["symbols"].push_back(s.name);
    j["degrees"].push_back(s.degree);
  }
  j["terms"] = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json e = nlohmann::json::array();
    for (std::size_t i = 0; i < symbols_->size(); ++i) e.push_back(t.mono.exps[i]);
    j["terms"].push_back({{"coeff", t.coeff.get_num().get_str() + "/" + t.coeff.get_den().get_str()},
                          {"exps", e}});
  }
  return j;
}

SparsePoly SparsePoly::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("symbols") || !j.contains("terms"))
    throw UsageError("polynomial JSON needs 'symbols' and 'terms'");
  std::vector<Symbol> syms;
  const auto& names = j.at("symbols");
  for (std::size_t i = 0; i < names.size(); ++i) {
    int deg = 1;
    if (j.contains("degrees")) deg = j.at("degrees").at(i).get<int>();
    syms.push_back({names.at(i).get<std::string>(), deg});
  }
  auto table = make_symbols(std::move(syms));
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at("exps");
    if (e.size() != table->size()) throw UsageError("exponent vector length mismatch");
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto v = e.at(i).get<long long>();
      if (v < 0 || v > 0xFFFF) throw UsageError("bad exponent in JSON");
      m.exps[i] = static_cast<std::uint16_t>(v);
    }
    terms.push_back({m, parse_rational(t.at("coeff").get<std::string>())});
  }
  return from_terms(table, std::move(terms));
}

namespace {

class Parser {
 public:
  Parser(const Symbols& symbols, std::string_view text) : symbols_(symbols), s_(text) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError("parse error at " + std::to_string(pos_) + " in '" + std::string(s_) +
                     "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  SparsePoly expr() {
    SparsePoly p = term();
    for (;;) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }
  SparsePoly term() {
    SparsePoly p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        SparsePoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        p /= d.constant_term();
      } else {
        return p;
      }
    }
  }
  SparsePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    SparsePoly base = primary();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected non-negative integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }
  SparsePoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SparsePoly::constant(symbols_, Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      auto name = s_.substr(start, pos_ - start);
      if (!symbols_->contains(name)) fail("unknown symbol '" + std::string(name) + "'");
      return SparsePoly::variable(symbols_, name);
    }
    fail("unexpected character");
  }

  const Symbols& symbols_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const Symbols& symbols, std::string_view text) {
  return Parser(symbols, text).parse();
}

std::vector<SparsePoly> elementary_symmetric(const std::vector<SparsePoly>& values) {
  if (values.empty()) throw UsageError("elementary_symmetric needs at least one value");
  const auto& tab = values.front().symbols();
  std::vector<SparsePoly> e{SparsePoly::constant(tab, 1)};
  for (const auto& x : values) {
    e.push_back(SparsePoly(tab));
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * x;
  }
  return e;
}

}  // namespace eqorbit
