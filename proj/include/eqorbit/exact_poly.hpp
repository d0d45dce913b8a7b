#pragma once

// Sparse multivariate polynomials over GMP rationals. Terms are kept in
// graded-lex order: weighted degree descending, then lex by symbol order.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace eqorbit {

using Rational = mpq_class;

/// Bad input to an operation (unknown symbol, mismatched tables, negative exponent...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold exactly did not (non-exact division, bad fixed-point data...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);
bool is_integer(const Rational& q);
/// num/den in canonical form; den = 0 is a UsageError.
Rational ratio(long num, long den);

struct Symbol {
  std::string name;
  int degree = 1;
};

inline constexpr std::size_t kMaxSymbols = 24;

class SymbolTable {
 public:
  explicit SymbolTable(std::vector<Symbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws UsageError when the symbol is not declared.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const SymbolTable& other) const;

 private:
  std::vector<Symbol> symbols_;
};

using Symbols = std::shared_ptr<const SymbolTable>;

Symbols make_symbols(std::vector<Symbol> symbols);
/// Convenience: every symbol of degree 1.
Symbols make_symbols(std::initializer_list<std::string_view> names);

struct Monomial {
  std::array<std::uint16_t, kMaxSymbols> exps{};
  std::uint32_t degree = 0;  // weighted total degree, kept in sync by SparsePoly

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Graded-lex "greater": higher weighted degree first, then lexicographic.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
};

class SparsePoly {
 public:
  /// Zero over the empty table (placeholder until assigned).
  SparsePoly();
  explicit SparsePoly(Symbols symbols);

  static SparsePoly constant(Symbols symbols, const Rational& c);
  static SparsePoly variable(Symbols symbols, std::string_view name);
  /// c * prod(symbol^exp); exps indexed by the table.
  static SparsePoly monomial(Symbols symbols, const std::vector<unsigned>& exps,
                             const Rational& c = 1);

  const Symbols& symbols() const { return symbols_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  Rational constant_term() const;

  /// Maximum weighted degree; -1 for the zero polynomial.
  int degree() const;
  /// Maximum exponent of one symbol.
  unsigned degree_in(std::string_view symbol) const;
  /// Weighted degree if every term has the same one (zero is homogeneous of any degree).
  std::optional<int> homogeneous_degree() const;
  SparsePoly homogeneous_part(int degree) const;
  /// True when only the given symbols appear.
  bool only_uses(const std::vector<std::string>& names) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly& operator/=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator/(SparsePoly a, const Rational& c) { return a /= c; }

  SparsePoly pow(unsigned e) const;

  bool operator==(const SparsePoly& o) const;
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  /// Simultaneous substitution. Bindings are over `target`; unbound symbols
  /// must exist in `target` (by name) and pass through unchanged.
  SparsePoly substitute(const std::map<std::string, SparsePoly>& bindings,
                        const Symbols& target) const;
  /// Substitution staying in the same table.
  SparsePoly substitute(const std::map<std::string, SparsePoly>& bindings) const;

  /// Coefficient of symbol^power, as a polynomial in the remaining symbols.
  SparsePoly coefficient(std::string_view symbol, unsigned power) const;
  /// Coefficients by power of one symbol: result[k] = coefficient(symbol, k).
  std::vector<SparsePoly> coefficients_in(std::string_view symbol) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Same polynomial in another table; every used symbol must exist there.
  SparsePoly rebase(const Symbols& target) const;

  /// Exact quotient by `divisor`; ConsistencyError if the remainder is nonzero.
  SparsePoly divide_exact(const SparsePoly& divisor) const;
  /// Quotient and remainder from multivariate division in graded-lex order.
  std::pair<SparsePoly, SparsePoly> divide(const SparsePoly& divisor) const;

  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;
  /// Positive content (gcd of numerators over lcm of denominators), 0 for zero.
  Rational content() const;

  /// Compact human form, e.g. "18c1^6+33c1^4c2-7c3^2".
  std::string to_string() const;
  /// LaTeX form, e.g. "18 c_{1}^{6} + 33 c_{1}^{4} c_{2}".
  std::string to_latex() const;
  /// Canonical JSON: {"symbols":[...],"terms":[{"coeff":"n/d","exps":[...]}]}.
  nlohmann::json to_json() const;
  static SparsePoly from_json(const nlohmann::json& j);

  // Internal construction from unsorted, possibly repeated terms.
  static SparsePoly from_terms(Symbols symbols, std::vector<Term> terms);

 private:
  void check_same_table(const SparsePoly& o, const char* op) const;
  void canonicalize();
  Monomial make_monomial(const std::vector<unsigned>& exps) const;

  Symbols symbols_;
  std::vector<Term> terms_;  // graded-lex descending, no zero coefficients
};

/// Weighted degree of a monomial under a table.
std::uint32_t monomial_degree(const SymbolTable& table, const Monomial& m);

/// Parse an expression like "3*c1^2 - 1/2*c2*(u+v)" over the given table.
/// Juxtaposition is not accepted; use '*'.
SparsePoly parse_poly(const Symbols& symbols, std::string_view text);

/// Elementary symmetric polynomials e_0..e_n of the given values.
std::vector<SparsePoly> elementary_symmetric(const std::vector<SparsePoly>& values);

}  // namespace eqorbit
