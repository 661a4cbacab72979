#include "sif/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace sif {

namespace {

using Poly = std::vector<Rational>;  // constant term first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division, remainder must vanish.
Poly poly_div(const Poly& num, const Poly& den) {
  Poly r = num;
  Poly q(num.size(), Rational(0));
  trim(r);
  while (r.size() >= den.size() && !(r.size() == 1 && r[0] == 0)) {
    size_t shift = r.size() - den.size();
    Rational c = r.back() / den.back();
    q[shift] = c;
    for (size_t k = 0; k < den.size(); ++k) r[shift + k] -= c * den[k];
    trim(r);
  }
  if (!(r.size() == 1 && r[0] == 0)) throw std::logic_error("polynomial division not exact");
  trim(q);
  return q;
}

struct FieldTable {
  int m = 1;
  int phi = 1;
  Poly minimal;                       // Phi_m
  std::vector<Poly> zeta_pow;         // zeta^k mod Phi_m for k = 0..m-1, size phi
};

Poly cyclotomic_raw(int m, std::map<int, Poly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  Poly p(m + 1, Rational(0));
  p[0] = -1;
  p[m] = 1;  // x^m - 1
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_div(p, cyclotomic_raw(d, cache));
  cache[m] = p;
  return p;
}

const FieldTable& field_table(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(m);
  if (it != tables.end()) return *it->second;

  auto t = std::make_unique<FieldTable>();
  t->m = m;
  std::map<int, Poly> cache;
  t->minimal = cyclotomic_raw(m, cache);
  t->phi = static_cast<int>(t->minimal.size()) - 1;
  t->zeta_pow.resize(m);
  Poly cur(t->phi, Rational(0));
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    t->zeta_pow[k] = cur;
    // multiply by zeta and reduce
    Poly next(t->phi, Rational(0));
    Rational top = cur[t->phi - 1];
    for (int d = t->phi - 1; d > 0; --d) next[d] = cur[d - 1];
    if (top != 0)
      for (int d = 0; d < t->phi; ++d) next[d] -= top * t->minimal[d];
    cur = next;
  }
  const FieldTable& ref = *t;
  tables[m] = std::move(t);
  return ref;
}

}  // namespace

int euler_phi(int m) { return field_table(m).phi; }

std::vector<Rational> cyclotomic_polynomial(int m) { return field_table(m).minimal; }

Cyc::Cyc(int order, const Rational& r) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coords_.assign(order == 1 ? 1 : field_table(order).phi, Rational(0));
  coords_[0] = r;
}

Cyc Cyc::root_of_unity(int order, long k) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long kk = ((k % order) + order) % order;
  if (order == 1) return Cyc(1, 1);
  Cyc c(order);
  c.coords_ = field_table(order).zeta_pow[kk];
  return c;
}

Cyc Cyc::phase(int order, const Rational& q) {
  // e^{i pi p/d} = zeta_order^{p * order / (2d)}; needs 2d | order.
  long p = q.get_num().fits_slong_p() ? q.get_num().get_si() : throw std::overflow_error("phase");
  long d = q.get_den().get_si();
  if (order % (2 * d) != 0)
    throw std::domain_error("phase e^{i pi " + q.get_str() + "} not in Q(zeta_" + std::to_string(order) + ")");
  return root_of_unity(order, p * (order / (2 * d)));
}

bool Cyc::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational Cyc::rational_part() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coords_[0];
}

void Cyc::promote_to(int order) {
  if (order_ == order) return;
  if (!is_rational())
    throw std::logic_error("mixing cyclotomic fields of different orders");
  Rational r = coords_[0];
  *this = Cyc(order, r);
}

void Cyc::match(Cyc& a, Cyc& b) {
  if (a.order_ == b.order_) return;
  if (a.order_ < b.order_)
    a.promote_to(b.order_);
  else
    b.promote_to(a.order_);
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  Cyc rhs = o;
  match(*this, rhs);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  Cyc rhs = o;
  match(*this, rhs);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Cyc& Cyc::operator*=(const Cyc& o) {
  Cyc rhs = o;
  match(*this, rhs);
  if (order_ == 1) {
    coords_[0] *= rhs.coords_[0];
    return *this;
  }
  const FieldTable& t = field_table(order_);
  std::vector<Rational> conv(2 * t.phi - 1, Rational(0));
  for (int i = 0; i < t.phi; ++i) {
    if (coords_[i] == 0) continue;
    for (int j = 0; j < t.phi; ++j) {
      if (rhs.coords_[j] == 0) continue;
      conv[i + j] += coords_[i] * rhs.coords_[j];
    }
  }
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t k = 0; k < conv.size(); ++k) {
    if (conv[k] == 0) continue;
    if (static_cast<int>(k) < t.phi) {
      out[k] += conv[k];
    } else {
      const Poly& zp = t.zeta_pow[k % t.m];
      for (int d = 0; d < t.phi; ++d) out[d] += conv[k] * zp[d];
    }
  }
  coords_ = std::move(out);
  return *this;
}

Cyc Cyc::operator*(const Rational& r) const {
  Cyc out = *this;
  for (auto& c : out.coords_) c *= r;
  return out;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero cyclotomic value");
  if (is_rational()) {
    Cyc r(order_, 1 / coords_[0]);
    return r;
  }
  // extended Euclid in Q[x] against the minimal polynomial
  const FieldTable& t = field_table(order_);
  Poly r0 = t.minimal, r1(coords_.begin(), coords_.end());
  trim(r1);
  Poly s0{Rational(0)}, s1{Rational(1)};  // coefficients of *this
  while (!(r1.size() == 1 && r1[0] == 0)) {
    // quotient of r0 by r1
    Poly q(r0.size(), Rational(0));
    Poly rem = r0;
    trim(rem);
    while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
      size_t shift = rem.size() - r1.size();
      Rational c = rem.back() / r1.back();
      q[shift] += c;
      for (size_t k = 0; k < r1.size(); ++k) rem[shift + k] -= c * r1[k];
      trim(rem);
    }
    trim(q);
    // s_next = s0 - q*s1
    Poly qs(q.size() + s1.size() - 1, Rational(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    Poly s2(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  // r0 = gcd (nonzero constant since Phi_m is irreducible), s0 * this = r0 mod Phi_m
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: nontrivial gcd");
  Cyc out(order_);
  out.coords_.assign(t.phi, Rational(0));
  for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(t.phi); ++i)
    out.coords_[i] = s0[i] / r0[0];
  return out;
}

bool Cyc::operator==(const Cyc& o) const {
  Cyc a = *this, b = o;
  match(a, b);
  return a.coords_ == b.coords_;
}

std::string Cyc::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i].get_str();
  }
  os << "]_" << order_;
  return os.str();
}

}  // namespace sif
