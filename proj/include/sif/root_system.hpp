#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sif/cyclotomic.hpp"
#include "sif/rational.hpp"

namespace sif {

// Weight in the fundamental-weight basis. Coordinates are rational so that
// intermediate values (duals of non-integral combinations, root-basis
// expansions) stay exact; lattice points have integer coordinates.
struct Weight {
  std::vector<Rational> c;

  Weight() = default;
  explicit Weight(int rank) : c(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : c(std::move(coords)) {}

  int rank() const { return static_cast<int>(c.size()); }
  bool is_zero() const;
  bool is_integral() const;
  bool is_dominant() const;  // all fundamental coordinates >= 0

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const Rational& r) const;
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator<(const Weight& o) const;

  std::string str() const;
};

// Simply-laced root datum with the Gamma = P/Q structure functions.
class RootSystem {
 public:
  static RootSystem from_string(const std::string& name);  // "A1".."A8","D4".."D8","E6".."E8"

  char kind() const { return kind_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const std::vector<std::vector<Rational>>& cartan_inv() const { return cartan_inv_; }
  int gamma_order() const { return static_cast<int>(representatives_.size()); }
  int gamma_exponent() const { return gamma_exponent_; }
  const std::vector<Weight>& representatives() const { return representatives_; }
  // Order of the cyclotomic field Q(zeta) carrying all phases e^{i pi q}.
  int cyc_order() const { return cyc_order_; }

  Weight zero() const { return Weight(rank_); }
  Weight fundamental(int i) const;  // 1-based node index
  Weight simple_root(int i) const;
  Weight rho() const;

  Rational inner(const Weight& a, const Weight& b) const;
  std::vector<Rational> to_root_basis(const Weight& w) const;
  bool in_root_lattice(const Weight& w) const;
  bool leq(const Weight& mu, const Weight& lambda) const;
  Weight dual_weight(const Weight& w) const;

  int gamma_class(const Weight& w) const;
  int gamma_add(int g, int h) const;
  // Delta(g,h) = Z - (chi_g, chi_h), returned as the representative in [0,1).
  Rational delta(int g, int h) const;
  Cyc nu(int g, int h) const;
  Cyc bform(const Weight& a, const Weight& b) const;
  int bform_sign(const Weight& a, const Weight& b) const;
  // Two-cocycle with e^a e^b = epsilon(a,b) e^{a+b}; values in {+1,-1}.
  int epsilon_sign(const Weight& a, const Weight& b) const;
  Cyc epsilon(const Weight& a, const Weight& b) const;
  // Commutation factor between Y(e^a, z) and Y(e^b, w); constant on
  // Gamma-classes (and equal to nu) in type A of even rank. All identity
  // checks use this pointwise value, so no class-constancy is assumed.
  Cyc braiding(const Weight& a, const Weight& b) const;

  // n is an admissible mode index between parities g and h.
  bool mode_admissible(const Rational& n, int g, int h) const;

  // All roots {beta in Q : (beta,beta) = 2} with positive root-basis height.
  const std::vector<Weight>& positive_roots() const;
  // Dominant integral mu with mu <= lambda in the order of Eq-style rational
  // cone coefficients, mu != lambda.
  std::vector<Weight> dominant_below(const Weight& lambda) const;

  Cyc cyc_one() const { return Cyc::one(cyc_order_); }
  Cyc cyc_rat(const Rational& r) const { return Cyc(cyc_order_, r); }
  Cyc cyc_phase(const Rational& q) const { return Cyc::phase(cyc_order_, q); }

 private:
  RootSystem() = default;
  void build_tables();

  std::string name_;
  char kind_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::vector<Rational>> cartan_inv_;
  std::vector<Weight> representatives_;
  int gamma_exponent_ = 1;
  int cyc_order_ = 2;
  mutable std::vector<Weight> positive_roots_;  // lazy
};

}  // namespace sif
