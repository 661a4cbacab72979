#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sif {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + q.get_str());
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("rational too large for long");
  return q.get_num().get_si();
}

inline long floor_to_long(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("floor too large for long");
  return f.get_si();
}

inline long ceil_to_long(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!c.fits_slong_p()) throw std::overflow_error("ceil too large for long");
  return c.get_si();
}

// Generalized binomial coefficient binom(x, k) for rational x, integer k >= 0.
inline Rational binomial(const Rational& x, long k) {
  if (k < 0) return 0;
  Rational result = 1;
  for (long i = 0; i < k; ++i) result *= (x - i) / (i + 1);
  return result;
}

// Falling factorial x(x-1)...(x-n+1), n factors.
inline Rational falling_factorial(const Rational& x, long n) {
  Rational result = 1;
  for (long i = 0; i < n; ++i) result *= x - i;
  return result;
}

inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

}  // namespace sif
