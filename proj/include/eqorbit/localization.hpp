#pragma once

// Atiyah-Bott localization with exact bookkeeping of linear denominators.

#include <map>
#include <string>
#include <vector>

#include "eqorbit/exact_poly.hpp"

namespace eqorbit {

/// One factor ell + a*z of an Euler class; ell is linear in the torus weights.
struct EulerFactor {
  SparsePoly ell;
  Rational z_coeff = 0;
};

struct FixedLocus {
  enum class Kind { Point, ProjectiveLine };
  std::string name;
  Kind kind = Kind::Point;
  /// Ambient symbol -> value in the locus ring (weights, plus z for a P^1 with z^2 = 0).
  std::map<std::string, SparsePoly> restrictions;
  std::vector<EulerFactor> euler;
};

struct RationalTerm {
  SparsePoly numerator;
  std::vector<SparsePoly> denominator;  // linear factors
};

/// Sum of rational terms with linear denominators. The common denominator is the
/// multiset lcm of the (normalized) factors; the summed numerator is divided by
/// each factor in turn and any nonzero remainder raises ConsistencyError.
SparsePoly sum_rational_terms(const std::vector<RationalTerm>& terms, const Symbols& target);

/// Contributions of each locus before summation (useful for debugging output).
std::vector<RationalTerm> ab_contributions(const std::vector<FixedLocus>& loci,
                                           const SparsePoly& cls, const Symbols& weights,
                                           const std::string& z = "z");

/// Integral of `cls` (over the ambient table) as an exact polynomial in the weights.
SparsePoly ab_integrate(const std::vector<FixedLocus>& loci, const SparsePoly& cls,
                        const Symbols& weights, const std::string& z = "z");

/// Torus-weight table {u, v, z} used by the points pipeline.
Symbols points_weight_symbols();
/// Ambient table {H, E1, ..., En}.
Symbols points_ambient_symbols(std::size_t n);

/// The 2n+2 fixed loci of the resolution of the orbit closure of n points on P^1.
std::vector<FixedLocus> p1_points_fixed_loci(const std::vector<int>& multiplicities);

/// The integrand (prod_{i=0}^d (t + i u + (d-i) v) - prod_{i} (i u + (d-i) v)) / t
/// as a polynomial in t over {u, v, t}, built without division.
SparsePoly points_phi(int d, const Symbols& table, const std::string& t);

/// Full pipeline: integrate phi(d H - sum m_i E_i). Result over {u, v} is p_X(-u,-v).
SparsePoly points_localization(const std::vector<int>& multiplicities);

/// Integrals over G(k, n) of monomials in the Chern classes of the tautological
/// subbundle. Each exponent vector has length k (exponents of c_1..c_k).
std::vector<Rational> grassmann_chern_numbers(int k, int n,
                                              const std::vector<std::vector<unsigned>>& monomials);

/// Same integrals by Pieri's rule: c_i(S) = (-1)^i sigma_{1^i}.
std::vector<Rational> grassmann_chern_numbers_pieri(
    int k, int n, const std::vector<std::vector<unsigned>>& monomials);

/// Integral over G(k, n) of a polynomial in c1..ck (any table containing them).
Rational grassmann_integrate(int k, int n, const SparsePoly& p);

}  // namespace eqorbit
