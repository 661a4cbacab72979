#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sif/root_system.hpp"

namespace sif {

// Monomial of the Fock space: a multiset of creators alpha_i t^{-n} times a
// lattice vector e^mu. Creators stored sorted by (n, i), n >= 1, i 1-based.
struct FockMonomial {
  std::vector<std::pair<int, int>> creators;  // (n, i)
  Weight lattice;

  long creator_degree() const;
  Rational conformal_weight(const RootSystem& rs) const;
  void sort_creators();

  bool operator==(const FockMonomial& o) const {
    return creators == o.creators && lattice == o.lattice;
  }
  bool operator<(const FockMonomial& o) const {
    if (creators != o.creators) return creators < o.creators;
    return lattice < o.lattice;
  }
};

// Returns the canonical shared copy of the monomial; the address is stable
// for the lifetime of the process, and two equal monomials intern to the
// same address. States key their term maps by these pointers so that term
// arithmetic never copies monomials.
const FockMonomial* intern_monomial(const FockMonomial& mon);

// Orders interned monomial pointers by the monomials themselves, keeping
// iteration over a state in the canonical monomial order.
struct MonPtrLess {
  bool operator()(const FockMonomial* a, const FockMonomial* b) const {
    return a != b && *a < *b;
  }
};

// Finite linear combination of Fock monomials with cyclotomic coefficients.
class State {
 public:
  using TermMap = std::map<const FockMonomial*, Cyc, MonPtrLess>;

  State() = default;

  static State term(FockMonomial mon, Cyc coeff);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int num_terms() const { return static_cast<int>(t_.size()); }

  void add_term(const FockMonomial& mon, const Cyc& coeff);
  void add_term(const FockMonomial* mon, const Cyc& coeff);
  State& operator+=(const State& o);
  State& operator-=(const State& o);
  // *this += o * c without building the intermediate product.
  State& add_scaled(const State& o, const Cyc& c);
  State& add_scaled(const State& o, const Rational& r);
  // In-place scalar multiple; keys are untouched, so this never reallocates.
  State& scale(const Cyc& c);
  State& scale(const Rational& r);
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  State operator*(const Cyc& c) const;
  State operator*(const Rational& r) const;
  State operator-() const;
  bool operator==(const State& o) const { return t_ == o.t_; }

  // Largest creator degree over all terms (0 for pure lattice states).
  long max_creator_degree() const;
  // Largest conformal weight over all terms; state must be nonempty.
  Rational max_conformal_weight(const RootSystem& rs) const;
  // Gamma-parity; throws if terms mix classes.
  int gamma_class(const RootSystem& rs) const;
  // Split into (h-weight, conformal weight)-homogeneous pieces.
  std::map<std::pair<Weight, Rational>, State> components(const RootSystem& rs) const;

  std::string str(const RootSystem& rs) const;

 private:
  TermMap t_;
};

}  // namespace sif
