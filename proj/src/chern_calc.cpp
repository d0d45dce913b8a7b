#include "eqorbit/chern_calc.hpp"

#include <algorithm>

namespace eqorbit {

namespace {

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

SparsePoly total_from_roots(const std::vector<SparsePoly>& roots) {
  SparsePoly one = SparsePoly::constant(roots.front().symbols(), 1);
  SparsePoly t = one;
  for (const auto& r : roots) t *= one + r;
  return t;
}

void enumerate_multisets(int n, int d, int start, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    enumerate_multisets(n, d, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BundleClass BundleClass::from_roots(std::vector<SparsePoly> roots) {
  if (roots.empty()) throw UsageError("from_roots needs at least one root");
  for (const auto& r : roots) {
    auto hd = r.homogeneous_degree();
    if (!r.is_zero() && (!hd || *hd != 1)) throw UsageError("Chern roots must have degree 1");
  }
  BundleClass b{static_cast<int>(roots.size()), total_from_roots(roots), std::move(roots)};
  return b;
}

BundleClass BundleClass::from_chern(int rank, const std::vector<SparsePoly>& chern) {
  if (rank < 0) throw UsageError("negative rank");
  if (chern.empty()) throw UsageError("from_chern needs a symbol table via at least one class");
  if (static_cast<int>(chern.size()) > rank) throw UsageError("more Chern classes than the rank");
  SparsePoly total = SparsePoly::constant(chern.front().symbols(), 1);
  for (std::size_t i = 0; i < chern.size(); ++i) {
    auto hd = chern[i].homogeneous_degree();
    if (!chern[i].is_zero() && (!hd || *hd != static_cast<int>(i + 1)))
      throw UsageError("c_" + std::to_string(i + 1) + " is not homogeneous of degree " +
                       std::to_string(i + 1));
    total += chern[i];
  }
  return BundleClass{rank, total, std::nullopt};
}

BundleClass BundleClass::trivial(const Symbols& symbols, int rank) {
  return BundleClass{rank, SparsePoly::constant(symbols, 1), std::nullopt};
}

BundleClass BundleClass::line(const SparsePoly& c1) { return from_roots({c1}); }

SparsePoly BundleClass::chern(int i) const {
  if (i < 0 || i > rank) return SparsePoly(total.symbols());
  return total.homogeneous_part(i);
}

std::vector<SparsePoly> BundleClass::chern_classes() const {
  std::vector<SparsePoly> c;
  for (int i = 1; i <= rank; ++i) c.push_back(chern(i));
  return c;
}

BundleClass BundleClass::rebase(const Symbols& target) const {
  BundleClass b{rank, total.rebase(target), std::nullopt};
  if (roots) {
    std::vector<SparsePoly> r;
    for (const auto& x : *roots) r.push_back(x.rebase(target));
    b.roots = std::move(r);
  }
  return b;
}

BundleClass sym_power(const BundleClass& b, int d) {
  if (d < 1) throw UsageError("sym_power degree must be >= 1");
  if (b.rank < 1) throw UsageError("sym_power of a rank-0 bundle");
  if (b.roots) {
    std::vector<std::vector<int>> ms;
    std::vector<int> cur;
    enumerate_multisets(b.rank, d, 0, cur, ms);
    std::vector<SparsePoly> roots;
    for (const auto& m : ms) {
      SparsePoly s(b.symbols());
      for (int i : m) s += (*b.roots)[i];
      roots.push_back(s);
    }
    return BundleClass::from_roots(std::move(roots));
  }
  // synthesize formal roots, expand, and reduce back to b's Chern classes
  const int k = b.rank;
  std::vector<Symbol> rs, es;
  std::vector<std::string> rnames, enames;
  for (int i = 1; i <= k; ++i) {
    rnames.push_back("x" + std::to_string(i));
    enames.push_back("e" + std::to_string(i));
    rs.push_back({rnames.back(), 1});
    es.push_back({enames.back(), i});
  }
  auto rtab = make_symbols(rs);
  auto etab = make_symbols(es);
  std::vector<SparsePoly> formal;
  for (const auto& n : rnames) formal.push_back(SparsePoly::variable(rtab, n));
  BundleClass f = sym_power(BundleClass::from_roots(formal), d);
  std::map<std::string, SparsePoly> back;
  for (int i = 1; i <= k; ++i) back.emplace(enames[i - 1], b.chern(i));
  std::vector<SparsePoly> chern;
  for (int i = 1; i <= f.rank; ++i)
    chern.push_back(
        symmetric_reduce(f.chern(i), rnames, enames, etab).substitute(back, b.symbols()));
  BundleClass out{f.rank, SparsePoly::constant(b.symbols(), 1), std::nullopt};
  for (auto& c : chern) out.total += c;
  return out;
}

BundleClass dual(const BundleClass& b) {
  if (b.roots) {
    std::vector<SparsePoly> r;
    for (const auto& x : *b.roots) r.push_back(-x);
    return BundleClass::from_roots(std::move(r));
  }
  BundleClass out{b.rank, SparsePoly::constant(b.symbols(), 1), std::nullopt};
  for (int i = 1; i <= b.rank; ++i) out.total += (i % 2 ? -b.chern(i) : b.chern(i));
  return out;
}

BundleClass twist_line(const BundleClass& b, const SparsePoly& ell) {
  auto hd = ell.homogeneous_degree();
  if (!ell.is_zero() && (!hd || *hd != 1)) throw UsageError("twist class must have degree 1");
  if (b.roots) {
    std::vector<SparsePoly> r;
    for (const auto& x : *b.roots) r.push_back(x + ell);
    return BundleClass::from_roots(std::move(r));
  }
  BundleClass out{b.rank, SparsePoly::constant(b.symbols(), 1), std::nullopt};
  std::vector<SparsePoly> lp{SparsePoly::constant(b.symbols(), 1)};
  for (int i = 1; i <= b.rank; ++i) lp.push_back(lp.back() * ell);
  for (int i = 1; i <= b.rank; ++i) {
    SparsePoly ci(b.symbols());
    for (int j = 0; j <= i; ++j) {
      SparsePoly cj = j == 0 ? SparsePoly::constant(b.symbols(), 1) : b.chern(j);
      ci += cj * lp[i - j] * binomial(b.rank - j, i - j);
    }
    out.total += ci;
  }
  return out;
}

BundleClass direct_sum(const BundleClass& a, const BundleClass& b) {
  BundleClass out{a.rank + b.rank, a.total * b.total.rebase(a.symbols()), std::nullopt};
  if (a.roots && b.roots) {
    std::vector<SparsePoly> r = *a.roots;
    for (const auto& x : *b.roots) r.push_back(x.rebase(a.symbols()));
    out.roots = std::move(r);
  }
  return out;
}

BundleClass ses_complement(const BundleClass& total, const BundleClass& sub,
                           const Normalizer& normalize) {
  if (sub.rank > total.rank) throw UsageError("subbundle rank exceeds total rank");
  const auto& tab = total.symbols();
  BundleClass s = sub.rebase(tab);
  const int qrank = total.rank - s.rank;
  auto norm = [&](const SparsePoly& p) { return normalize ? normalize(p) : p; };
  const int top = total.rank + s.rank;
  std::vector<SparsePoly> q{SparsePoly::constant(tab, 1)};
  for (int k = 1; k <= top; ++k) {
    SparsePoly qk = total.chern(k);
    for (int i = 1; i <= std::min(k, s.rank); ++i) qk -= s.chern(i) * q[k - i];
    qk = norm(qk);
    if (k > qrank && !qk.is_zero())
      throw ConsistencyError("ses_complement: degree-" + std::to_string(k) +
                             " piece of the quotient is nonzero: " + qk.to_string());
    q.push_back(qk);
  }
  BundleClass out{qrank, SparsePoly::constant(tab, 1), std::nullopt};
  for (int k = 1; k <= qrank; ++k) out.total += q[k];
  if (total.roots && s.roots && !normalize) {
    std::vector<SparsePoly> rest = *total.roots;
    bool ok = true;
    for (const auto& r : *s.roots) {
      auto it = std::find(rest.begin(), rest.end(), r);
      if (it == rest.end()) {
        ok = false;
        break;
      }
      rest.erase(it);
    }
    if (ok && !rest.empty()) out.roots = std::move(rest);
  }
  return out;
}

BundleClass jet_bundle(const SparsePoly& line_class, int order, const SparsePoly& rel_cotangent_c1) {
  if (order < 1) throw UsageError("jet order must be >= 1");
  std::vector<SparsePoly> pieces;
  for (int i = 0; i < order; ++i) pieces.push_back(line_class + rel_cotangent_c1 * Rational(i));
  return BundleClass::from_roots(std::move(pieces));
}

SparsePoly symmetric_reduce(const SparsePoly& p, const std::vector<std::string>& roots,
                            const std::vector<std::string>& elementary, const Symbols& target) {
  if (roots.size() != elementary.size())
    throw UsageError("symmetric_reduce: roots/elementary size mismatch");
  const auto& tab = p.symbols();
  const std::size_t k = roots.size();
  std::vector<std::size_t> ridx;
  std::vector<bool> is_root(tab->size(), false);
  for (const auto& r : roots) {
    ridx.push_back(tab->index(r));
    is_root[ridx.back()] = true;
  }
  std::vector<SparsePoly> rv;
  for (const auto& r : roots) rv.push_back(SparsePoly::variable(tab, r));
  auto e = elementary_symmetric(rv);
  std::vector<SparsePoly> et;
  for (const auto& n : elementary) et.push_back(SparsePoly::variable(target, n));

  std::vector<std::optional<std::size_t>> passthrough(tab->size());
  for (std::size_t i = 0; i < tab->size(); ++i)
    if (!is_root[i]) passthrough[i] = target->find((*tab)[i].name);

  std::map<std::pair<std::size_t, unsigned>, SparsePoly> epow;
  auto e_power = [&](std::size_t i, unsigned a) -> const SparsePoly& {
    auto key = std::make_pair(i, a);
    auto it = epow.find(key);
    if (it == epow.end()) it = epow.emplace(key, e[i + 1].pow(a)).first;
    return it->second;
  };

  SparsePoly rem = p;
  std::vector<Term> out;
  while (!rem.is_zero()) {
    const Term lead = rem.terms().front();
    std::vector<unsigned> a(k);
    for (std::size_t i = 0; i < k; ++i) a[i] = lead.mono.exps[ridx[i]];
    for (std::size_t i = 0; i + 1 < k; ++i)
      if (a[i] < a[i + 1])
        throw UsageError("symmetric_reduce: polynomial is not symmetric in the roots");
    Monomial rest_src, rest_tgt;
    for (std::size_t i = 0; i < tab->size(); ++i) {
      if (is_root[i] || !lead.mono.exps[i]) continue;
      if (!passthrough[i])
        throw UsageError("symmetric_reduce: symbol " + (*tab)[i].name + " missing from target");
      rest_src.exps[i] = lead.mono.exps[i];
      rest_tgt.exps[*passthrough[i]] = lead.mono.exps[i];
    }
    std::vector<unsigned> src_exps(tab->size()), tgt_exps(target->size());
    for (std::size_t i = 0; i < tab->size(); ++i) src_exps[i] = rest_src.exps[i];
    for (std::size_t i = 0; i < target->size(); ++i) tgt_exps[i] = rest_tgt.exps[i];
    SparsePoly sub = SparsePoly::monomial(tab, src_exps, lead.coeff);
    SparsePoly res = SparsePoly::monomial(target, tgt_exps, lead.coeff);
    for (std::size_t i = 0; i < k; ++i) {
      unsigned ex = a[i] - (i + 1 < k ? a[i + 1] : 0);
      if (!ex) continue;
      sub *= e_power(i, ex);
      res *= et[i].pow(ex);
    }
    rem -= sub;
    for (const auto& t : res.terms()) out.push_back(t);
  }
  return SparsePoly::from_terms(target, std::move(out));
}

SparsePoly chern_to_roots(const SparsePoly& p, const std::vector<std::string>& chern,
                          const std::vector<std::string>& roots, const Symbols& target) {
  std::vector<SparsePoly> rv;
  for (const auto& r : roots) rv.push_back(SparsePoly::variable(target, r));
  auto e = elementary_symmetric(rv);
  std::map<std::string, SparsePoly> b;
  for (std::size_t i = 0; i < chern.size(); ++i)
    b.emplace(chern[i], i + 1 < e.size() ? e[i + 1] : SparsePoly(target));
  return p.substitute(b, target);
}

namespace {

Symbols with_symbol(const Symbols& tab, const std::string& name) {
  if (tab->contains(name)) return tab;
  auto syms = tab->symbols();
  syms.push_back({name, 1});
  return make_symbols(std::move(syms));
}

}  // namespace

SparsePoly chern_shift(const SparsePoly& p, int d, ShiftDirection direction,
                       const std::vector<std::string>& vars, bool vars_are_roots,
                       const std::string& hyperplane) {
  if (d == 0) throw UsageError("chern_shift: d must be nonzero");
  if (direction == ShiftDirection::Affinize) {
    if (!p.symbols()->contains(hyperplane)) return p;
    return p.substitute({{hyperplane, SparsePoly(p.symbols())}});
  }
  auto tab = with_symbol(p.symbols(), hyperplane);
  SparsePoly q = p.rebase(tab);
  SparsePoly ell = SparsePoly::variable(tab, hyperplane) * ratio(-1, d);
  std::map<std::string, SparsePoly> b;
  if (vars_are_roots) {
    for (const auto& r : vars) b.emplace(r, SparsePoly::variable(tab, r) + ell);
  } else {
    const int k = static_cast<int>(vars.size());
    std::vector<SparsePoly> c{SparsePoly::constant(tab, 1)};
    for (const auto& n : vars) c.push_back(SparsePoly::variable(tab, n));
    std::vector<SparsePoly> lp{SparsePoly::constant(tab, 1)};
    for (int i = 1; i <= k; ++i) lp.push_back(lp.back() * ell);
    for (int i = 1; i <= k; ++i) {
      SparsePoly ci(tab);
      for (int j = 0; j <= i; ++j) ci += c[j] * lp[i - j] * binomial(k - j, i - j);
      b.emplace(vars[i - 1], ci);
    }
  }
  return q.substitute(b);
}

Symbols chern_symbols(int rank) { return chern_symbols_with(rank, {}); }

Symbols chern_symbols_with(int rank, const std::vector<std::string>& extra) {
  std::vector<Symbol> s;
  for (int i = 1; i <= rank; ++i) s.push_back({"c" + std::to_string(i), i});
  for (const auto& e : extra) s.push_back({e, 1});
  return make_symbols(std::move(s));
}

}  // namespace eqorbit
