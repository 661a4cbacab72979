#pragma once

#include <vector>

#include "sif/rational.hpp"

namespace sif {

// Exact element of the cyclotomic field Q(zeta_m), stored as a polynomial in
// zeta of degree < phi(m), reduced modulo the m-th cyclotomic polynomial.
// Values with order() == 1 are plain rationals and promote automatically when
// combined with elements of a larger field.
class Cyc {
 public:
  Cyc() : order_(1), coords_(1, Rational(0)) {}
  Cyc(int order, const Rational& r);

  static Cyc zero(int order) { return Cyc(order, 0); }
  static Cyc one(int order) { return Cyc(order, 1); }
  // zeta_m^k, k arbitrary integer.
  static Cyc root_of_unity(int order, long k);
  // e^{i pi q} for rational q; requires the field to contain it.
  static Cyc phase(int order, const Rational& q);

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // throws if not rational

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  Cyc operator*(const Rational& r) const;
  Cyc inverse() const;

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  std::string str() const;

 private:
  explicit Cyc(int order) : order_(order) {}
  void promote_to(int order);
  static void match(Cyc& a, Cyc& b);

  int order_;
  std::vector<Rational> coords_;
};

// Cyclotomic polynomial Phi_m as a dense integer-coefficient vector
// (constant term first). Exposed for tests.
std::vector<Rational> cyclotomic_polynomial(int m);
int euler_phi(int m);

}  // namespace sif
