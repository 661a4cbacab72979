#include "sif/state.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace sif {

long FockMonomial::creator_degree() const {
  long d = 0;
  for (const auto& [n, i] : creators) d += n;
  return d;
}

Rational FockMonomial::conformal_weight(const RootSystem& rs) const {
  return rs.inner(lattice, lattice) / 2 + creator_degree();
}

void FockMonomial::sort_creators() { std::sort(creators.begin(), creators.end()); }

namespace {

size_t hash_mix(size_t h, size_t v) { return h * 1099511628211ULL + v + 0x9e3779b97f4a7c15ULL; }

struct MonHash {
  size_t operator()(const FockMonomial& m) const {
    size_t h = 1469598103934665603ULL;
    for (const auto& [n, i] : m.creators) h = hash_mix(h, (static_cast<size_t>(n) << 8) | i);
    for (const Rational& c : m.lattice.c) {
      h = hash_mix(h, mpz_get_si(c.get_num().get_mpz_t()));
      h = hash_mix(h, mpz_get_si(c.get_den().get_mpz_t()));
    }
    return h;
  }
};

}  // namespace

const FockMonomial* intern_monomial(const FockMonomial& mon) {
  static std::unordered_set<FockMonomial, MonHash> pool;
  return &*pool.insert(mon).first;
}

State State::term(FockMonomial mon, Cyc coeff) {
  State s;
  mon.sort_creators();
  s.add_term(mon, coeff);
  return s;
}

void State::add_term(const FockMonomial& mon, const Cyc& coeff) {
  if (coeff.is_zero()) return;
  add_term(intern_monomial(mon), coeff);
}

void State::add_term(const FockMonomial* mon, const Cyc& coeff) {
  if (coeff.is_zero()) return;
  auto it = t_.find(mon);
  if (it == t_.end()) {
    t_.emplace(mon, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) t_.erase(it);
  }
}

State& State::operator+=(const State& o) {
  for (const auto& [mon, c] : o.t_) add_term(mon, c);
  return *this;
}

State& State::add_scaled(const State& o, const Cyc& c) {
  if (c.is_zero()) return *this;
  for (const auto& [mon, x] : o.t_) add_term(mon, x * c);
  return *this;
}

State& State::add_scaled(const State& o, const Rational& r) {
  if (r == 0) return *this;
  for (const auto& [mon, x] : o.t_) add_term(mon, x * r);
  return *this;
}

State& State::scale(const Cyc& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [mon, x] : t_) x *= c;
  return *this;
}

State& State::scale(const Rational& r) {
  if (r == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [mon, x] : t_) x = x * r;
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [mon, c] : o.t_) add_term(mon, -c);
  return *this;
}

State State::operator*(const Cyc& c) const {
  State out;
  if (c.is_zero()) return out;
  for (const auto& [mon, x] : t_) out.add_term(mon, x * c);
  return out;
}

State State::operator*(const Rational& r) const {
  State out;
  if (r == 0) return out;
  for (const auto& [mon, x] : t_) out.add_term(mon, x * r);
  return out;
}

State State::operator-() const {
  State out;
  for (const auto& [mon, x] : t_) out.add_term(mon, -x);
  return out;
}

long State::max_creator_degree() const {
  long d = 0;
  for (const auto& [mon, c] : t_) d = std::max(d, mon->creator_degree());
  return d;
}

Rational State::max_conformal_weight(const RootSystem& rs) const {
  if (t_.empty()) throw std::domain_error("conformal weight of zero state");
  bool first = true;
  Rational best = 0;
  for (const auto& [mon, c] : t_) {
    Rational w = mon->conformal_weight(rs);
    if (first || w > best) best = w;
    first = false;
  }
  return best;
}

int State::gamma_class(const RootSystem& rs) const {
  if (t_.empty()) throw std::domain_error("parity of zero state");
  int g = rs.gamma_class(t_.begin()->first->lattice);
  for (const auto& [mon, c] : t_)
    if (rs.gamma_class(mon->lattice) != g)
      throw std::domain_error("state mixes Gamma classes");
  return g;
}

std::map<std::pair<Weight, Rational>, State> State::components(const RootSystem& rs) const {
  std::map<std::pair<Weight, Rational>, State> out;
  for (const auto& [mon, c] : t_)
    out[{mon->lattice, mon->conformal_weight(rs)}].add_term(mon, c);
  return out;
}

std::string State::str(const RootSystem& rs) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mon, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << "*";
    for (const auto& [n, i] : mon->creators) os << "a" << i << "(-" << n << ")";
    os << "e" << mon->lattice.str();
  }
  return os.str();
}

}  // namespace sif
