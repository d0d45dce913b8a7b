#include "eqorbit/localization.hpp"

#include <algorithm>
#include <numeric>

namespace eqorbit {

namespace {

struct NormalizedFactor {
  SparsePoly monic;
  Rational scale;
};

NormalizedFactor normalize_factor(const SparsePoly& f) {
  if (f.is_zero()) throw ConsistencyError("zero denominator factor in localization sum");
  Rational lead = f.terms().front().coeff;
  return {f / lead, lead};
}

}  // namespace

SparsePoly sum_rational_terms(const std::vector<RationalTerm>& terms, const Symbols& target) {
  struct Slot {
    SparsePoly factor;
    int multiplicity;
  };
  std::map<std::string, Slot> lcm;
  struct Prepared {
    SparsePoly numerator;
    std::map<std::string, int> counts;
  };
  std::vector<Prepared> prepared;
  for (const auto& t : terms) {
    Prepared p{t.numerator.rebase(target), {}};
    for (const auto& f : t.denominator) {
      auto nf = normalize_factor(f.rebase(target));
      p.numerator /= nf.scale;
      auto key = nf.monic.to_string();
      ++p.counts[key];
      auto it = lcm.find(key);
      if (it == lcm.end()) lcm.emplace(key, Slot{nf.monic, 0});
    }
    for (const auto& [key, c] : p.counts) lcm.at(key).multiplicity = std::max(lcm.at(key).multiplicity, c);
    prepared.push_back(std::move(p));
  }

  SparsePoly total(target);
  for (auto& p : prepared) {
    if (p.numerator.is_zero()) continue;
    SparsePoly num = p.numerator;
    for (const auto& [key, slot] : lcm) {
      auto it = p.counts.find(key);
      int have = it == p.counts.end() ? 0 : it->second;
      for (int i = have; i < slot.multiplicity; ++i) num *= slot.factor;
    }
    total += num;
  }
  for (const auto& [key, slot] : lcm)
    for (int i = 0; i < slot.multiplicity; ++i) {
      if (total.is_zero()) break;
      total = total.divide_exact(slot.factor);
    }
  return total;
}

std::vector<RationalTerm> ab_contributions(const std::vector<FixedLocus>& loci,
                                           const SparsePoly& cls, const Symbols& weights,
                                           const std::string& z) {
  std::vector<RationalTerm> out;
  for (const auto& locus : loci) {
    SparsePoly r = cls.substitute(locus.restrictions, weights);
    std::vector<SparsePoly> ells;
    for (const auto& f : locus.euler) {
      SparsePoly e = f.ell.rebase(weights);
      if (e.is_zero()) throw ConsistencyError("Euler factor vanishes at z=0 on " + locus.name);
      if (weights->contains(z) && e.degree_in(z) != 0)
        throw UsageError("Euler factor weight part must not contain " + z);
      ells.push_back(e);
    }
    if (locus.kind == FixedLocus::Kind::Point) {
      if (weights->contains(z) && r.degree_in(z) != 0)
        throw UsageError("point locus " + locus.name + " restricts to a class involving " + z);
      for (const auto& f : locus.euler)
        if (f.z_coeff != 0) throw UsageError("point locus " + locus.name + " has a z-dependent Euler factor");
      out.push_back({r, ells});
      continue;
    }
    if (!weights->contains(z)) throw UsageError("P^1 locus needs the nilpotent symbol " + z);
    SparsePoly n0 = r.coefficient(z, 0), n1 = r.coefficient(z, 1);
    out.push_back({n1, ells});
    for (std::size_t k = 0; k < locus.euler.size(); ++k) {
      const Rational& a = locus.euler[k].z_coeff;
      if (a == 0) continue;
      auto den = ells;
      den.push_back(ells[k]);
      out.push_back({n0 * Rational(-a), den});
    }
  }
  return out;
}

SparsePoly ab_integrate(const std::vector<FixedLocus>& loci, const SparsePoly& cls,
                        const Symbols& weights, const std::string& z) {
  return sum_rational_terms(ab_contributions(loci, cls, weights, z), weights);
}

Symbols points_weight_symbols() { return make_symbols({"u", "v", "z"}); }

Symbols points_ambient_symbols(std::size_t n) {
  std::vector<Symbol> s{{"H", 1}};
  for (std::size_t i = 1; i <= n; ++i) s.push_back({"E" + std::to_string(i), 1});
  return make_symbols(std::move(s));
}

std::vector<FixedLocus> p1_points_fixed_loci(const std::vector<int>& multiplicities) {
  const std::size_t n = multiplicities.size();
  if (n < 3) throw UsageError("points configuration needs at least 3 points");
  for (int m : multiplicities)
    if (m < 1) throw UsageError("multiplicities must be positive");
  auto w = points_weight_symbols();
  SparsePoly u = SparsePoly::variable(w, "u"), v = SparsePoly::variable(w, "v"),
             z = SparsePoly::variable(w, "z"), zero(w);
  const Rational one_minus_n = Rational(1) - Rational(static_cast<long>(n));
  auto e_name = [](std::size_t i) { return "E" + std::to_string(i + 1); };

  std::vector<FixedLocus> loci;
  for (int side = 0; side < 2; ++side) {
    const SparsePoly& a = side == 0 ? u : v;
    const SparsePoly& b = side == 0 ? v : u;
    FixedLocus c{side == 0 ? "C1" : "C2", FixedLocus::Kind::ProjectiveLine, {}, {}};
    c.restrictions.emplace("H", z - a);
    for (std::size_t i = 0; i < n; ++i) c.restrictions.emplace(e_name(i), z);
    c.euler = {{b - a, 1}, {b - a, one_minus_n}};
    loci.push_back(std::move(c));
  }
  for (int side = 0; side < 2; ++side) {
    const SparsePoly& a = side == 0 ? u : v;
    const SparsePoly& b = side == 0 ? v : u;
    for (std::size_t i = 0; i < n; ++i) {
      FixedLocus p{"p" + std::to_string(i + 1) + "," + std::to_string(side + 1),
                   FixedLocus::Kind::Point, {}, {}};
      p.restrictions.emplace("H", -a);
      for (std::size_t j = 0; j < n; ++j) p.restrictions.emplace(e_name(j), j == i ? b - a : zero);
      p.euler = {{b - a, 0}, {b - a, 0}, {a - b, 0}};
      loci.push_back(std::move(p));
    }
  }
  return loci;
}

SparsePoly points_phi(int d, const Symbols& table, const std::string& t) {
  if (d < 1) throw UsageError("points_phi needs d >= 1");
  SparsePoly u = SparsePoly::variable(table, "u"), v = SparsePoly::variable(table, "v"),
             tt = SparsePoly::variable(table, t);
  SparsePoly g = SparsePoly::constant(table, 1);
  for (int i = 0; i <= d; ++i) g *= tt + u * Rational(i) + v * Rational(d - i);
  auto coefs = g.coefficients_in(t);
  SparsePoly phi(table);
  SparsePoly tp = SparsePoly::constant(table, 1);
  for (std::size_t k = 1; k < coefs.size(); ++k) {
    phi += coefs[k] * tp;
    tp *= tt;
  }
  return phi;
}

SparsePoly points_localization(const std::vector<int>& multiplicities) {
  auto loci = p1_points_fixed_loci(multiplicities);
  const int d = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
  auto w = points_weight_symbols();
  auto amb = points_ambient_symbols(multiplicities.size());
  SparsePoly pull = SparsePoly::variable(amb, "H") * Rational(d);
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    pull -= SparsePoly::variable(amb, "E" + std::to_string(i + 1)) * Rational(multiplicities[i]);

  // integrate over a derived ambient symbol P carrying the pullback class
  auto ptab = make_symbols({"u", "v", "P"});
  for (auto& l : loci) {
    SparsePoly rp = pull.substitute(l.restrictions, w);
    l.restrictions = {{"P", rp}};
  }
  SparsePoly phi = points_phi(d, ptab, "P");
  SparsePoly res = ab_integrate(loci, phi, w);
  return res.rebase(make_symbols({"u", "v"}));
}

namespace {

void k_subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    k_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

void check_grassmann(int k, int n, const std::vector<std::vector<unsigned>>& monomials) {
  if (k < 1 || n <= k) throw UsageError("Grassmannian G(k,n) needs 1 <= k < n");
  const long dim = static_cast<long>(k) * (n - k);
  for (const auto& m : monomials) {
    if (m.size() != static_cast<std::size_t>(k))
      throw UsageError("exponent vector must have length k");
    long deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i) deg += static_cast<long>(i + 1) * m[i];
    if (deg != dim)
      throw UsageError("monomial degree " + std::to_string(deg) + " differs from dim G(" +
                       std::to_string(k) + "," + std::to_string(n) + ") = " + std::to_string(dim));
  }
}

}  // namespace

std::vector<Rational> grassmann_chern_numbers(int k, int n,
                                              const std::vector<std::vector<unsigned>>& monomials) {
  check_grassmann(k, n, monomials);
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  k_subsets(n, k, 0, cur, subsets);
  std::vector<Rational> weight(n);
  for (int i = 0; i < n; ++i) weight[i] = i + 1;

  struct FixedPoint {
    std::vector<Rational> e;  // e_0..e_k of the subbundle weights
    Rational euler;
  };
  std::vector<FixedPoint> pts;
  for (const auto& s : subsets) {
    FixedPoint fp{std::vector<Rational>(k + 1, 0), 1};
    fp.e[0] = 1;
    std::vector<bool> in(n, false);
    for (int i : s) {
      in[i] = true;
      for (int j = k; j >= 1; --j) fp.e[j] += fp.e[j - 1] * weight[i];
    }
    for (int i : s)
      for (int j = 0; j < n; ++j)
        if (!in[j]) fp.euler *= weight[j] - weight[i];
    pts.push_back(std::move(fp));
  }
  std::vector<Rational> out;
  for (const auto& m : monomials) {
    Rational sum = 0;
    for (const auto& fp : pts) {
      Rational val = 1;
      for (int i = 0; i < k; ++i)
        for (unsigned e = 0; e < m[i]; ++e) val *= fp.e[i + 1];
      sum += val / fp.euler;
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<Rational> grassmann_chern_numbers_pieri(
    int k, int n, const std::vector<std::vector<unsigned>>& monomials) {
  check_grassmann(k, n, monomials);
  using Partition = std::vector<int>;  // k rows, weakly decreasing, each <= n-k
  const int width = n - k;
  auto multiply_column = [&](const std::map<Partition, Rational>& in, int j) {
    std::map<Partition, Rational> out;
    for (const auto& [lam, c] : in) {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != j) continue;
        Partition mu = lam;
        bool ok = true;
        for (int r = 0; r < k && ok; ++r)
          if (mask & (1u << r)) {
            ++mu[r];
            if (mu[r] > width) ok = false;
          }
        for (int r = 1; r < k && ok; ++r)
          if (mu[r] > mu[r - 1]) ok = false;
        if (ok) out[mu] += c;
      }
    }
    return out;
  };
  std::vector<Rational> out;
  Partition top(k, width);
  for (const auto& m : monomials) {
    std::map<Partition, Rational> cur{{Partition(k, 0), Rational(1)}};
    for (int j = 1; j <= k; ++j)
      for (unsigned e = 0; e < m[j - 1]; ++e) {
        cur = multiply_column(cur, j);
        if (j % 2)
          for (auto& [lam, c] : cur) c = -c;
      }
    auto it = cur.find(top);
    out.push_back(it == cur.end() ? Rational(0) : it->second);
  }
  return out;
}

Rational grassmann_integrate(int k, int n, const SparsePoly& p) {
  const auto& tab = p.symbols();
  std::vector<std::optional<std::size_t>> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = tab->find("c" + std::to_string(i + 1));
  std::vector<std::vector<unsigned>> monos;
  std::vector<Rational> coeffs;
  for (const auto& t : p.terms()) {
    std::vector<unsigned> m(k, 0);
    unsigned used = 0;
    for (int i = 0; i < k; ++i)
      if (idx[i]) {
        m[i] = t.mono.exps[*idx[i]];
        used += m[i];
      }
    unsigned total = 0;
    for (std::size_t i = 0; i < tab->size(); ++i) total += t.mono.exps[i];
    if (total != used) throw UsageError("grassmann_integrate: polynomial uses non-Chern symbols");
    monos.push_back(std::move(m));
    coeffs.push_back(t.coeff);
  }
  auto vals = grassmann_chern_numbers(k, n, monos);
  Rational s = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) s += coeffs[i] * vals[i];
  return s;
}

}  // namespace eqorbit
