#pragma once

// Equivariant orbit classes of plane curves and of point configurations on P^1.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eqorbit/chow_tower.hpp"
#include "eqorbit/exact_poly.hpp"

namespace eqorbit {

/// Scalar times a product of polynomials; display metadata only.
struct Factored {
  Rational scalar = 1;
  std::vector<SparsePoly> factors;

  SparsePoly expand(const Symbols& symbols) const;
  std::string to_string() const;
  std::string to_latex() const;
};

/// Content-and-primitive-part split, e.g. 64(18c1^6+...).
Factored primitive_split(const SparsePoly& p);

struct OrbitClassResult {
  std::string id;
  std::string name;
  int d = 0;        // degree of the forms
  int rank = 3;     // r + 1: 3 for plane curves, 2 for binary forms
  SparsePoly affine_p;
  SparsePoly projective_P;
  Rational predegree;
  std::optional<long> aut_order;  // nullopt with aut_infinite=false: not a single orbit
  bool aut_infinite = false;
  std::string provenance;
  Factored factored;
  std::vector<std::string> notes;
  std::optional<Rational> section_count;
  bool flipped = false;  // points rows: affine_p is p_X(-u,-v)
};

// Kazarian local classes over {c1, c2, u}: c_i = c_i(T), u = c_1(L).
struct KazarianLocalClass {
  std::string name;
  SparsePoly poly;
};

Symbols kazarian_symbols();
KazarianLocalClass kazarian_local(const std::string& name);  // "A6", "D6", "E6"
KazarianLocalClass parse_kazarian_local(const std::string& name, const std::string& polynomial);
/// JSON list of {"name", "polynomial"}.
std::vector<KazarianLocalClass> parse_kazarian_list(const nlohmann::json& j);
std::vector<KazarianLocalClass> load_kazarian_file(const std::string& path);

/// Pushforward along P(V) -> B of the local class with u = d*h; result over {c1,c2,c3}.
SparsePoly kazarian_class(const KazarianLocalClass& local, int d);

/// One factor P(Sym^{form_degree} V^vee) of a multiplication map, pulled back with
/// H -> multiplicity * h.
struct MultMapFactor {
  int form_degree = 1;
  int multiplicity = 1;
};

/// Orbit-closure class of the image of prod P(Sym^{e_i} V^vee) -> P(Sym^d V^vee),
/// divided by the map degree (asserted exact).
SparsePoly mult_map_class(const std::vector<MultMapFactor>& factors, int map_degree, int total_d);
/// Same with every factor of multiplicity 1.
SparsePoly mult_map_class(const std::vector<int>& factor_degrees, int map_degree, int total_d);

SparsePoly concurrent_lines_class();

/// Tower over B pulled back along P(V): P(K) with K = ker(V^vee -> O(h)) and the
/// class of lines through the point.
RingTower concurrent_lines_tower(int copies);

struct WVarietyResult {
  int d = 0;
  SparsePoly o_can, o_cbn;  // over {c1,c2,c3}
  SparsePoly relative_canonical, ramification, z_class, w_bn, w_an;  // over the tower table
  int z_multiplicity = 0;
  nlohmann::json tower;
};

/// Tower B <- P(V^vee) <- P(S) <- P(V_flex) with symbols H_line, H_point, H_curve.
RingTower w_variety_tower();
WVarietyResult w_variety_classes(int d);
/// Degree of the orbit closure of C_BN, computed on the tower (c = 0).
Rational w_variety_cbn_degree(int d);
/// 12 * int H_curve (H_curve + (d-3) H_line)^8 on the tower (c = 0).
Rational w_variety_flex_degree(int d);

Rational predegree_poly_cbn(int d);
Rational predegree_poly_cflex(int d);

/// Closed formula for points on P^1, returned as p_X(-u,-v) over {u,v}.
SparsePoly points_class(const std::vector<int>& multiplicities);
/// n(n-1)(n-2) prod_{j=2}^{n-2} (H + j u + (n-j) v) over {u,v,H}.
SparsePoly points_class_distinct(int n);
/// q(u,v) -> q(-u,-v).
SparsePoly flip_sign(const SparsePoly& q);
/// Projective form of p_X(-u,-v): u -> u + H/d, v -> v + H/d.
SparsePoly points_projectivize(const SparsePoly& q, int d);

/// Projective class of an affine class p in c1..c3 for degree-d plane curves.
SparsePoly plane_projectivize(const SparsePoly& p, int d);
/// Coefficient of H^k in P with all Chern classes (or weights) set to 0.
Rational h_coefficient_at_zero(const SparsePoly& P, unsigned k);

/// Integral of p(c(S)) over G(3,5) with S the tautological rank-3 subbundle.
Rational plane_section_count(const SparsePoly& p);

/// Affine class of an invariant hypersurface of degree k in Sym^d V^vee.
SparsePoly hypersurface_class(int k);

/// All integer partitions of d with at least `min_parts` parts, largest part first.
std::vector<std::vector<int>> partitions(int d, int min_parts);

/// Memoizing front end for every named curve type.
class OrbitEngine {
 public:
  OrbitEngine();
  explicit OrbitEngine(std::vector<KazarianLocalClass> user_classes);

  /// Stable identifiers: A6 D6 E6 AN flex quadrilateral D4 2lines+conic line+cubic
  /// nodal(d,k) smooth(n) general A3..A5 points:m1,m2,... cubic:<row> kazarian:<name>:<d>.
  OrbitClassResult compute(const std::string& id);

  std::vector<OrbitClassResult> quartic_table();
  std::vector<OrbitClassResult> cubic_table();
  std::vector<OrbitClassResult> section_counts();
  std::vector<OrbitClassResult> fixed_j_divisor_entries();

  const std::vector<KazarianLocalClass>& user_classes() const { return user_; }
  std::optional<KazarianLocalClass> user_class(const std::string& name) const;

  SparsePoly kazarian(const std::string& name);  // memoized kazarian_class(local, 4)
  const WVarietyResult& w_variety();              // memoized d = 4
  SparsePoly four_lines();                        // memoized mult_map_class([1,1,1,1], 24, 4)

  /// Base p for a quartic row id (A6, D6, E6, AN, flex, quadrilateral, D4, ...).
  SparsePoly quartic_p(const std::string& id);

 private:
  OrbitClassResult make_plane(const std::string& id, const std::string& name, int d,
                              const SparsePoly& p, std::optional<long> aut, bool aut_inf,
                              const std::string& provenance, std::optional<Factored> fac = {});
  OrbitClassResult points_result(const std::vector<int>& m);
  OrbitClassResult cubic_row(const std::string& row);

  std::vector<KazarianLocalClass> user_;
  std::recursive_mutex mu_;
  std::map<std::string, SparsePoly> memo_;
  std::unique_ptr<WVarietyResult> w_;
};

/// Curve identifiers accepted by OrbitEngine::compute for the quartic and cubic tables.
std::vector<std::string> quartic_row_ids();
std::vector<std::string> cubic_row_ids();

}  // namespace eqorbit
