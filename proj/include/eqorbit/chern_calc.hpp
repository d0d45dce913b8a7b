#pragma once

// Formal Chern-class calculus on total Chern classes and Chern roots.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqorbit/exact_poly.hpp"

namespace eqorbit {

using Normalizer = std::function<SparsePoly(const SparsePoly&)>;

struct BundleClass {
  int rank = 0;
  SparsePoly total;  // 1 + c_1 + ... + c_rank, graded by weighted degree
  std::optional<std::vector<SparsePoly>> roots;

  static BundleClass from_roots(std::vector<SparsePoly> roots);
  /// chern = {c_1, ..., c_rank}; c_i must be homogeneous of degree i.
  static BundleClass from_chern(int rank, const std::vector<SparsePoly>& chern);
  static BundleClass trivial(const Symbols& symbols, int rank);
  static BundleClass line(const SparsePoly& c1);

  const Symbols& symbols() const { return total.symbols(); }
  /// Degree-i piece of the total class (0 beyond the rank).
  SparsePoly chern(int i) const;
  /// {c_1, ..., c_rank}.
  std::vector<SparsePoly> chern_classes() const;
  BundleClass rebase(const Symbols& target) const;
};

BundleClass sym_power(const BundleClass& b, int d);
BundleClass dual(const BundleClass& b);
BundleClass twist_line(const BundleClass& b, const SparsePoly& ell);
BundleClass direct_sum(const BundleClass& a, const BundleClass& b);

/// Quotient Q in 0 -> sub -> total -> Q -> 0, i.e. c(total)/c(sub) truncated at the
/// quotient rank. Pieces above that rank must vanish (after `normalize`, if given).
BundleClass ses_complement(const BundleClass& total, const BundleClass& sub,
                           const Normalizer& normalize = nullptr);

/// Bundle filtered by line_class + i*rel_cotangent_c1, i = 0..order-1.
BundleClass jet_bundle(const SparsePoly& line_class, int order, const SparsePoly& rel_cotangent_c1);

/// Rewrite a symmetric polynomial in `roots` as a polynomial in `elementary`
/// (elementary[i] is the (i+1)-th elementary symmetric function). Result is over
/// `target`, which must declare the elementary names and every non-root symbol used.
SparsePoly symmetric_reduce(const SparsePoly& p, const std::vector<std::string>& roots,
                            const std::vector<std::string>& elementary, const Symbols& target);

/// c_i -> e_i(roots); result over `target`.
SparsePoly chern_to_roots(const SparsePoly& p, const std::vector<std::string>& chern,
                          const std::vector<std::string>& roots, const Symbols& target);

enum class ShiftDirection { Projectivize, Affinize };

/// Projectivize: every root u_i -> u_i - H/d (the result gains `hyperplane` if absent).
/// Affinize: H -> 0. `vars` are either Chern-class names (c_1..c_k in order) or root names.
SparsePoly chern_shift(const SparsePoly& p, int d, ShiftDirection direction,
                       const std::vector<std::string>& vars, bool vars_are_roots,
                       const std::string& hyperplane = "H");

/// Tables used throughout: {c1,c2,c3} with degrees 1,2,3 and the same with H appended.
Symbols chern_symbols(int rank);
Symbols chern_symbols_with(int rank, const std::vector<std::string>& extra);

}  // namespace eqorbit
