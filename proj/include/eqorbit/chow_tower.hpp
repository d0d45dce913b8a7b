#pragma once

// Chow rings of towers of projective bundles (subspace convention):
// each level adds a hyperplane class x with x^r + c_1 x^{r-1} + ... + c_r = 0.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eqorbit/chern_calc.hpp"
#include "eqorbit/exact_poly.hpp"

namespace eqorbit {

struct TowerLevel {
  std::string symbol;
  int rank = 0;
  std::vector<SparsePoly> chern;  // c_1..c_rank of the projectivized bundle
};

class RingTower {
 public:
  /// Tower with no levels over `table`; `base` names the base symbols.
  RingTower(Symbols table, std::vector<std::string> base);

  /// New tower with P(bundle) on top. `name` is appended to the table when absent.
  RingTower extend(const BundleClass& bundle, const std::string& name) const;

  const Symbols& symbols() const { return table_; }
  const std::vector<std::string>& base() const { return base_; }
  const std::vector<TowerLevel>& levels() const { return levels_; }
  /// Sum of fiber dimensions.
  int fiber_dimension() const;
  /// Level relation x^r + c_1 x^{r-1} + ... + c_r.
  SparsePoly relation(std::size_t level) const;

  SparsePoly normal_form(const SparsePoly& p) const;
  /// Pushforward along the top level: coefficient of x_top^{rank-1}.
  SparsePoly fiber_integrate(const SparsePoly& p) const;
  /// The same tower without its top level.
  RingTower drop_top() const;
  /// Pushforward through every level; result only involves base symbols.
  SparsePoly integrate_to_base(const SparsePoly& p) const;
  /// Pushforward of p * h^k for k = 0..count-1 where h is a class on the tower.
  /// Entry k is integrate_to_base(p * h^k) computed incrementally.
  std::vector<SparsePoly> integrate_powers(const SparsePoly& p, const SparsePoly& h,
                                           unsigned count) const;

  nlohmann::json describe() const;

 private:
  struct Cache {
    std::recursive_mutex mu;
    std::vector<std::vector<SparsePoly>> powers;  // per level: NF of x^k for k >= rank
  };

  SparsePoly reduce_from(const SparsePoly& p, std::size_t top_level) const;
  SparsePoly power_nf(std::size_t level, unsigned k) const;
  SparsePoly lift(const SparsePoly& p) const;

  Symbols table_;
  std::vector<std::string> base_;
  std::vector<TowerLevel> levels_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace eqorbit
