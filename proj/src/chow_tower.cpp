#include "eqorbit/chow_tower.hpp"

namespace eqorbit {

RingTower::RingTower(Symbols table, std::vector<std::string> base)
    : table_(std::move(table)), base_(std::move(base)), cache_(std::make_shared<Cache>()) {
  for (const auto& b : base_) table_->index(b);
}

int RingTower::fiber_dimension() const {
  int d = 0;
  for (const auto& l : levels_) d += l.rank - 1;
  return d;
}

SparsePoly RingTower::lift(const SparsePoly& p) const {
  if (p.symbols() == table_) return p;
  return p.rebase(table_);
}

RingTower RingTower::extend(const BundleClass& bundle, const std::string& name) const {
  if (bundle.rank < 1) throw UsageError("tower_extend: rank must be >= 1");
  for (const auto& b : base_)
    if (b == name) throw UsageError("tower_extend: " + name + " is a base symbol");
  for (const auto& l : levels_)
    if (l.symbol == name) throw UsageError("tower_extend: " + name + " already used by a level");

  RingTower t = *this;
  if (!table_->contains(name)) {
    auto syms = table_->symbols();
    syms.push_back({name, 1});
    t.table_ = make_symbols(std::move(syms));
    for (auto& l : t.levels_)
      for (auto& c : l.chern) c = c.rebase(t.table_);
  } else if ((*table_)[table_->index(name)].degree != 1) {
    throw UsageError("tower_extend: hyperplane symbol must have degree 1");
  }
  t.cache_ = std::make_shared<Cache>();
  if (t.table_ == table_) {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    t.cache_->powers = cache_->powers;
  }

  TowerLevel level{name, bundle.rank, {}};
  for (int i = 1; i <= bundle.rank; ++i) {
    SparsePoly c = bundle.chern(i).rebase(t.table_);
    if (c.degree_in(name) != 0)
      throw UsageError("tower_extend: Chern class mentions the new hyperplane symbol");
    if (t.normal_form(c) != c)
      throw UsageError("tower_extend: c_" + std::to_string(i) + " is not in normal form");
    level.chern.push_back(std::move(c));
  }
  t.levels_.push_back(std::move(level));
  return t;
}

SparsePoly RingTower::relation(std::size_t level) const {
  const auto& l = levels_.at(level);
  SparsePoly x = SparsePoly::variable(table_, l.symbol);
  SparsePoly r = x.pow(l.rank);
  for (int i = 1; i <= l.rank; ++i) r += l.chern[i - 1] * x.pow(l.rank - i);
  return r;
}

SparsePoly RingTower::power_nf(std::size_t level, unsigned k) const {
  const auto& l = levels_[level];
  const unsigned r = static_cast<unsigned>(l.rank);
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  auto& pw = cache_->powers;
  if (pw.size() < levels_.size()) pw.resize(levels_.size());
  auto& v = pw[level];
  SparsePoly x = SparsePoly::variable(table_, l.symbol);
  while (v.size() <= k - r) {
    SparsePoly next(table_);
    if (v.empty()) {
      for (unsigned i = 1; i <= r; ++i) next -= l.chern[i - 1] * x.pow(r - i);
    } else {
      auto b = v.back().coefficients_in(l.symbol);
      b.resize(r, SparsePoly(table_));
      for (unsigned j = 0; j + 1 < r; ++j) next += b[j] * x.pow(j + 1);
      next += b[r - 1] * v.front();
    }
    v.push_back(reduce_from(next, level));
  }
  return v[k - r];
}

SparsePoly RingTower::reduce_from(const SparsePoly& p, std::size_t top_level) const {
  SparsePoly cur = p;
  for (std::size_t li = top_level; li-- > 0;) {
    const auto& l = levels_[li];
    const unsigned r = static_cast<unsigned>(l.rank);
    if (cur.degree_in(l.symbol) < r) continue;
    auto coefs = cur.coefficients_in(l.symbol);
    SparsePoly next(table_);
    SparsePoly x = SparsePoly::variable(table_, l.symbol);
    SparsePoly xp = SparsePoly::constant(table_, 1);
    for (unsigned k = 0; k < coefs.size(); ++k) {
      if (!coefs[k].is_zero()) next += k < r ? coefs[k] * xp : coefs[k] * power_nf(li, k);
      if (k + 1 < r) xp *= x;
    }
    cur = std::move(next);
  }
  return cur;
}

SparsePoly RingTower::normal_form(const SparsePoly& p) const {
  return reduce_from(lift(p), levels_.size());
}

SparsePoly RingTower::fiber_integrate(const SparsePoly& p) const {
  if (levels_.empty()) throw UsageError("fiber_integrate on a tower without levels");
  const auto& top = levels_.back();
  return normal_form(p).coefficient(top.symbol, static_cast<unsigned>(top.rank - 1));
}

RingTower RingTower::drop_top() const {
  if (levels_.empty()) throw UsageError("drop_top on a tower without levels");
  RingTower t = *this;
  t.levels_.pop_back();
  t.cache_ = std::make_shared<Cache>();
  return t;
}

namespace {

SparsePoly extract_top(const std::vector<TowerLevel>& levels, SparsePoly nf) {
  for (std::size_t li = levels.size(); li-- > 0;)
    nf = nf.coefficient(levels[li].symbol, static_cast<unsigned>(levels[li].rank - 1));
  return nf;
}

}  // namespace

SparsePoly RingTower::integrate_to_base(const SparsePoly& p) const {
  return extract_top(levels_, normal_form(p));
}

std::vector<SparsePoly> RingTower::integrate_powers(const SparsePoly& p, const SparsePoly& h,
                                                    unsigned count) const {
  std::vector<SparsePoly> out;
  out.reserve(count);
  SparsePoly hh = normal_form(h);
  SparsePoly cur = normal_form(p);
  for (unsigned k = 0; k < count; ++k) {
    out.push_back(extract_top(levels_, cur));
    if (k + 1 < count) cur = normal_form(cur * hh);
  }
  return out;
}

nlohmann::json RingTower::describe() const {
  nlohmann::json j;
  j["base"] = base_;
  j["levels"] = nlohmann::json::array();
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& l = levels_[i];
    SparsePoly rel = relation(i);
    j["levels"].push_back({{"symbol", l.symbol},
                           {"rank", l.rank},
                           {"relation", rel.to_json()},
                           {"relation_text", rel.to_string()}});
  }
  return j;
}

}  // namespace eqorbit
