#include "sif/voa.hpp"

#include <functional>

namespace sif {

State vacuum(const RootSystem& rs) { return lattice_state(rs, rs.zero()); }

State lattice_state(const RootSystem& rs, const Weight& mu) {
  FockMonomial mon;
  mon.lattice = mu;
  return State::term(mon, rs.cyc_one());
}

State heis_act(const RootSystem& rs, const Weight& h, long k, const State& v) {
  State out;
  if (k < 0) {
    std::vector<Rational> c = rs.to_root_basis(h);
    for (const auto& [mon, coeff] : v.terms()) {
      for (int i = 0; i < rs.rank(); ++i) {
        if (c[i] == 0) continue;
        FockMonomial m2 = *mon;
        m2.creators.emplace_back(static_cast<int>(-k), i + 1);
        m2.sort_creators();
        out.add_term(m2, coeff * c[i]);
      }
    }
  } else if (k == 0) {
    for (const auto& [mon, coeff] : v.terms())
      out.add_term(mon, coeff * rs.inner(h, mon->lattice));
  } else {
    for (const auto& [mon, coeff] : v.terms()) {
      for (size_t pos = 0; pos < mon->creators.size(); ++pos) {
        auto [n, i] = mon->creators[pos];
        if (n != k) continue;
        FockMonomial m2 = *mon;
        m2.creators.erase(m2.creators.begin() + pos);
        out.add_term(m2, coeff * (Rational(k) * rs.inner(h, rs.simple_root(i))));
      }
    }
  }
  return out;
}

State translation(const RootSystem& rs, const State& v) {
  State out;
  for (const auto& [mon, coeff] : v.terms()) {
    for (size_t pos = 0; pos < mon->creators.size(); ++pos) {
      FockMonomial m2 = *mon;
      int n = m2.creators[pos].first;
      m2.creators[pos].first = n + 1;
      m2.sort_creators();
      out.add_term(m2, coeff * Rational(n));
    }
    std::vector<Rational> c = rs.to_root_basis(mon->lattice);
    for (int i = 0; i < rs.rank(); ++i) {
      if (c[i] == 0) continue;
      FockMonomial m2 = *mon;
      m2.creators.emplace_back(1, i + 1);
      m2.sort_creators();
      out.add_term(m2, coeff * c[i]);
    }
  }
  return out;
}

namespace {

// Degree-idx part of the creation exponential exp(sum_{m>0} (1/m) lam t^-m z^m)
// (creation = true) or of the annihilation exponential
// exp(sum_{k>0} (-1/k) lam t^k z^-k) (creation = false) applied to a single
// monomial, memoized on interned pointers. The derivative of the exponential
// gives the recurrence idx * E_idx = sum_m (+-lam t^{-+m}) E_{idx-m}.
struct ExpKey {
  std::string rs;
  const FockMonomial* lam;  // interned creator-free monomial holding the weight
  long idx;
  bool creation;
  const FockMonomial* v;
  bool operator<(const ExpKey& o) const {
    if (v != o.v) return v < o.v;
    if (lam != o.lam) return lam < o.lam;
    if (idx != o.idx) return idx < o.idx;
    if (creation != o.creation) return creation < o.creation;
    return rs < o.rs;
  }
};

const State& exp_part(const RootSystem& rs, const Weight& lam, const FockMonomial* lamp,
                      long idx, bool creation, const FockMonomial* v) {
  thread_local std::map<ExpKey, State> cache;
  ExpKey key{rs.name(), lamp, idx, creation, v};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  State out;
  if (idx == 0) {
    out.add_term(v, rs.cyc_one());
  } else {
    for (long m = 1; m <= idx; ++m) {
      const State& prev = exp_part(rs, lam, lamp, idx - m, creation, v);
      if (prev.is_zero()) continue;
      State t = heis_act(rs, lam, creation ? -m : m, prev);
      out.add_scaled(t, Rational(creation ? 1 : -1) / idx);
    }
  }
  if (cache.size() > 400000) cache.clear();
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

State exp_mode(const RootSystem& rs, const Weight& lam, const Rational& n, const State& v) {
  State out;
  FockMonomial lmon;
  lmon.lattice = lam;
  const FockMonomial* lamp = intern_monomial(lmon);
  for (const auto& [mon, coeff] : v.terms()) {
    const Weight& mu = mon->lattice;
    Rational pairing = rs.inner(lam, mu);
    if (!is_integer(n + pairing)) continue;  // parity axiom

    FockMonomial base = *mon;
    base.lattice = lam + mu;
    const FockMonomial* basep = intern_monomial(base);
    Cyc eps = coeff * rs.epsilon(lam, mu);

    // annihilation degree b, then the z-power selection
    // a - b + (lam,mu) = -n-1 pins the creation degree a per b
    long maxdeg = base.creator_degree();
    for (long b = 0; b <= maxdeg; ++b) {
      const State& ab = exp_part(rs, lam, lamp, b, false, basep);
      if (ab.is_zero()) continue;
      Rational a_rat = Rational(b) - n - 1 - pairing;
      if (a_rat < 0) continue;
      long a = to_long(a_rat);
      for (const auto& [m2, c2] : ab.terms())
        out.add_scaled(exp_part(rs, lam, lamp, a, true, m2), c2 * eps);
    }
  }
  return out;
}

namespace {

// Memo table for the single-monomial mode action. The action is linear in
// both arguments, so caching at the monomial level is exact. Interned
// monomial pointers make the key cheap; the root-system name is part of the
// key because monomials do not carry it.
struct ModeKey {
  std::string rs;
  const FockMonomial* a;
  Rational n;
  const FockMonomial* v;
  bool operator<(const ModeKey& o) const {
    if (a != o.a) return a < o.a;
    if (v != o.v) return v < o.v;
    if (n != o.n) return n < o.n;
    return rs < o.rs;
  }
};

// Returns a reference into the cache; consume it before the next mode_mono
// call (an insert never moves std::map nodes, but an overflow clear does).
const State& mode_mono(const RootSystem& rs, const FockMonomial* monA, const Rational& n,
                       const FockMonomial* monv);

State mode_mono_state(const RootSystem& rs, const FockMonomial* monA, const Rational& n,
                      const State& v) {
  State out;
  for (const auto& [monv, cv] : v.terms()) out.add_scaled(mode_mono(rs, monA, n, monv), cv);
  return out;
}

const State& mode_mono(const RootSystem& rs, const FockMonomial* monA, const Rational& n,
                       const FockMonomial* monv) {
  thread_local std::map<ModeKey, State> cache;
  ModeKey key{rs.name(), monA, n, monv};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  State v;
  v.add_term(monv, rs.cyc_one());
  State out;
  if (monA->creators.empty()) {
    out = exp_mode(rs, monA->lattice, n, v);
  } else {
    Rational cw_v = monv->conformal_weight(rs);
    long deg_v = monv->creator_degree();
    // peel the deepest creator: A = (alpha_i t^{-1-s}) B, normally ordered
    auto [nc, i] = monA->creators.back();
    long s = nc - 1;
    FockMonomial monB = *monA;
    monB.creators.pop_back();
    const FockMonomial* pB = intern_monomial(monB);
    Weight alpha = rs.simple_root(i);
    Rational cw_B = monB.conformal_weight(rs);
    Rational sign = (s % 2 == 0) ? 1 : -1;

    // m >= 0: B_(n-1-m) after the annihilation part of the derivative field;
    // binom(m,s) vanishes for 0 <= m < s
    for (long m = s; m <= s + deg_v; ++m) {
      State hv = heis_act(rs, alpha, m - s, v);
      if (hv.is_zero()) continue;
      State t = mode_mono_state(rs, pB, n - 1 - m, hv);
      if (t.is_zero()) continue;
      out.add_scaled(t, sign * binomial(Rational(m), s));
    }
    // m <= -1: creation part applied after B_(n-1-m); the B mode annihilates
    // once the intermediate conformal weight would drop below zero
    long m_min = ceil_to_long(n - cw_B - cw_v);
    for (long m = -1; m >= m_min; --m) {
      State t = heis_act(rs, alpha, m - s, mode_mono(rs, pB, n - 1 - m, monv));
      if (t.is_zero()) continue;
      out.add_scaled(t, sign * binomial(Rational(m), s));
    }
  }
  if (cache.size() > 400000) cache.clear();
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

State vertex_mode(const RootSystem& rs, const State& A, const Rational& n, const State& v) {
  State out;
  if (v.is_zero()) return out;
  for (const auto& [monA, cA] : A.terms())
    for (const auto& [monv, cv] : v.terms())
      out.add_scaled(mode_mono(rs, monA, n, monv), cA * cv);
  return out;
}

State affine_e(const RootSystem& rs, const Weight& alpha, long m, const State& v) {
  if (rs.inner(alpha, alpha) != 2) throw std::invalid_argument("affine_e: not a root");
  return exp_mode(rs, alpha, m, v);
}

State affine_f(const RootSystem& rs, const Weight& alpha, long m, const State& v) {
  if (rs.inner(alpha, alpha) != 2) throw std::invalid_argument("affine_f: not a root");
  return exp_mode(rs, alpha * Rational(-1), m, v);
}

State affine_h(const RootSystem& rs, const Weight& h, long m, const State& v) {
  return heis_act(rs, h, m, v);
}

State conformal_vector(const RootSystem& rs) {
  State out;
  for (int i = 1; i <= rs.rank(); ++i) {
    std::vector<Rational> d = rs.to_root_basis(rs.fundamental(i));
    for (int j = 0; j < rs.rank(); ++j) {
      if (d[j] == 0) continue;
      FockMonomial mon;
      mon.lattice = rs.zero();
      mon.creators = {{1, i}, {1, j + 1}};
      mon.sort_creators();
      // the 1/2 makes omega_(1) act with eigenvalue (mu,mu)/2 + creator degree
      out.add_term(mon, rs.cyc_rat(d[j] / 2));
    }
  }
  return out;
}

State conformal_weight_op(const RootSystem& rs, const State& v) {
  return vertex_mode(rs, conformal_vector(rs), 1, v);
}

namespace {

// Split a state into its lattice-weight homogeneous pieces.
std::map<Weight, State> lattice_sectors(const State& v) {
  std::map<Weight, State> out;
  for (const auto& [mon, coef] : v.terms()) out[mon->lattice].add_term(mon, coef);
  return out;
}

bool check_borcherds_sector(const RootSystem& rs, const State& a, const State& b, const State& c,
                            const Rational& n, const Rational& m, const Rational& k,
                            const Cyc& comm) {
  Rational cwa = a.max_conformal_weight(rs);
  Rational cwb = b.max_conformal_weight(rs);
  Rational cwc = c.max_conformal_weight(rs);

  State lhs;
  long j_hi = floor_to_long(cwa + cwb - n - 1);
  for (long j = 0; j <= j_hi; ++j) {
    State ab = vertex_mode(rs, a, n + j, b);
    if (ab.is_zero()) continue;
    lhs.add_scaled(vertex_mode(rs, ab, m + k - j, c), binomial(m, j));
  }

  State rhs;
  long j1 = floor_to_long(cwb + cwc - k - 1);
  for (long j = 0; j <= j1; ++j) {
    State bc = vertex_mode(rs, b, k + j, c);
    if (bc.is_zero()) continue;
    Rational coef = binomial(n, j) * ((j % 2 == 0) ? 1 : -1);
    rhs.add_scaled(vertex_mode(rs, a, n + m - j, bc), coef);
  }
  Cyc phase = Cyc::phase(rs.cyc_order(), n) * comm;
  long j2 = floor_to_long(cwa + cwc - m - 1);
  for (long j = 0; j <= j2; ++j) {
    State ac = vertex_mode(rs, a, m + j, c);
    if (ac.is_zero()) continue;
    Rational coef = binomial(n, j) * ((j % 2 == 0) ? 1 : -1);
    rhs.add_scaled(vertex_mode(rs, b, n + k - j, ac), phase * coef * Rational(-1));
  }
  return lhs == rhs;
}

}  // namespace

bool check_borcherds(const RootSystem& rs, const State& a, const State& b, const State& c,
                     const Rational& n, const Rational& m, const Rational& k) {
  int ga = a.gamma_class(rs), gb = b.gamma_class(rs), gc = c.gamma_class(rs);
  if (!rs.mode_admissible(n, ga, gb) || !rs.mode_admissible(m, ga, gc) ||
      !rs.mode_admissible(k, gb, gc))
    throw std::domain_error("borcherds: mode indices violate parity");
  // The identity is bilinear in a and b; it holds with the commutation factor
  // determined by the lattice weights, so check it on each sector pair.
  for (const auto& [la, ap] : lattice_sectors(a))
    for (const auto& [lb, bp] : lattice_sectors(b))
      if (!check_borcherds_sector(rs, ap, bp, c, n, m, k, rs.braiding(la, lb))) return false;
  return true;
}

std::pair<State, State> commutator_formula(const RootSystem& rs, const State& a, long m,
                                           const State& b, const Rational& k, const State& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) return {State(), State()};
  if (a.gamma_class(rs) != 0) throw std::domain_error("commutator formula needs parity-0 a");
  State lhs = vertex_mode(rs, a, m, vertex_mode(rs, b, k, c)) -
              vertex_mode(rs, b, k, vertex_mode(rs, a, m, c));
  State rhs;
  long j_hi = floor_to_long(a.max_conformal_weight(rs) + b.max_conformal_weight(rs) - 1);
  for (long j = 0; j <= j_hi; ++j) {
    State ab = vertex_mode(rs, a, j, b);
    if (ab.is_zero()) continue;
    rhs += vertex_mode(rs, ab, m + k - j, c) * binomial(Rational(m), j);
  }
  return {lhs, rhs};
}

namespace {

Rational frac_part(const Rational& x) {
  Rational f = x;
  f -= floor_to_long(x);
  return f;
}

}  // namespace

namespace {

bool check_locality_sector(const RootSystem& rs, const State& A, const State& B, const Rational& n,
                           const Rational& cutoff, const Cyc& comm) {
  int ga = A.gamma_class(rs), gb = B.gamma_class(rs);
  Cyc phase = Cyc::phase(rs.cyc_order(), n) * comm;
  Rational cwA = A.max_conformal_weight(rs);
  Rational cwB = B.max_conformal_weight(rs);

  for (const FockMonomial& cm : enumerate_basis(rs, cutoff)) {
    State c = State::term(cm, rs.cyc_one());
    int gc = rs.gamma_class(cm.lattice);
    Rational cwc = cm.conformal_weight(rs);
    Rational total = cwA + cwB + cwc;
    // output component of z^x w^y has conformal weight total + x + y - n
    Rational sum_lo = n - total, sum_hi = n - total + cutoff;
    // z-powers x live on the grid -(chi_{ga}, chi_{gc}) + Z, w-powers
    // y on -(chi_{gb}, chi_{gc}) + Z
    Rational fx = frac_part(-rs.inner(rs.representatives()[ga], rs.representatives()[gc]));
    Rational fy = frac_part(-rs.inner(rs.representatives()[gb], rs.representatives()[gc]));
    Rational y_lo = -cwB - cwc, y_hi = sum_hi + cwA + cwc;
    for (Rational y = fy + ceil_to_long(y_lo - fy); y <= y_hi; y += 1) {
      Rational x_lo = -cwA - cwc;
      Rational alt = sum_lo - y;
      if (alt > x_lo) x_lo = alt;
      Rational x_hi = sum_hi - y;
      for (Rational x = fx + ceil_to_long(x_lo - fx); x <= x_hi; x += 1) {
        State lhs, rhs;
        long jb = floor_to_long(cwB + cwc + y);
        for (long j = 0; j <= jb; ++j) {
          State bc = vertex_mode(rs, B, -1 - y + j, c);
          if (bc.is_zero()) continue;
          Rational coef = binomial(n, j) * ((j % 2 == 0) ? 1 : -1);
          lhs += vertex_mode(rs, A, -1 - x + n - j, bc) * coef;
        }
        long ja = floor_to_long(cwA + cwc + x);
        for (long j = 0; j <= ja; ++j) {
          State ac = vertex_mode(rs, A, -1 - x + j, c);
          if (ac.is_zero()) continue;
          Rational coef = binomial(n, j) * ((j % 2 == 0) ? 1 : -1);
          rhs += vertex_mode(rs, B, -1 - y + n - j, ac) * coef * phase;
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool check_locality(const RootSystem& rs, const State& A, const State& B, const Rational& n,
                    const Rational& cutoff) {
  int ga = A.gamma_class(rs), gb = B.gamma_class(rs);
  if (!rs.mode_admissible(n, ga, gb)) throw std::domain_error("locality: off-parity order");
  // Locality holds with the commutation factor of the lattice sectors.
  for (const auto& [la, ap] : lattice_sectors(A))
    for (const auto& [lb, bp] : lattice_sectors(B))
      if (!check_locality_sector(rs, ap, bp, n, cutoff, rs.braiding(la, lb))) return false;
  return true;
}

Rational exact_locality_order(const RootSystem& rs, const State& A, const State& B) {
  int ga = A.gamma_class(rs), gb = B.gamma_class(rs);
  Rational cwA = A.max_conformal_weight(rs);
  Rational cwB = B.max_conformal_weight(rs);
  Rational off = frac_part(-rs.inner(rs.representatives()[ga], rs.representatives()[gb]));
  auto holds = [&](const Rational& n) {
    long j_hi = floor_to_long(cwA + cwB - n - 1);
    for (long j = 0; j <= j_hi; ++j)
      if (!vertex_mode(rs, A, n + j, B).is_zero()) return false;
    return true;
  };
  Rational n = off + (floor_to_long(cwA + cwB - off) + 1);  // trivially local here
  Rational floor_guard = -2 * (cwA + cwB) - 8;
  while (holds(n - 1)) {
    n -= 1;
    if (n < floor_guard) throw std::logic_error("exact locality order search did not terminate");
  }
  return n;
}

std::vector<FockMonomial> enumerate_basis(const RootSystem& rs, const Rational& cwmax) {
  std::vector<FockMonomial> out;
  if (cwmax < 0) return out;
  long rowmax = 0;
  for (const auto& row : rs.cartan()) {
    long s = 0;
    for (long v : row) s += std::abs(v);
    rowmax = std::max(rowmax, s);
  }
  Rational norm_cap = 2 * cwmax;
  long bound = 0;
  while (Rational(bound) * bound < norm_cap * rowmax) ++bound;

  std::vector<long> coords(rs.rank(), 0);
  std::function<void(int)> weights = [&](int idx) {
    if (idx == rs.rank()) {
      Weight mu(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) mu.c[i] = coords[i];
      Rational norm = rs.inner(mu, mu);
      if (norm > norm_cap) return;
      long budget = floor_to_long(cwmax - norm / 2);
      // creator multisets of total degree <= budget, lex-nondecreasing (n,i)
      std::vector<std::pair<int, int>> cur;
      std::function<void(long, int, int)> gen = [&](long left, int min_n, int min_i) {
        FockMonomial mon;
        mon.creators = cur;
        mon.lattice = mu;
        out.push_back(mon);
        for (int nn = min_n; nn <= left; ++nn)
          for (int ii = (nn == min_n ? min_i : 1); ii <= rs.rank(); ++ii) {
            cur.emplace_back(nn, ii);
            gen(left - nn, nn, ii);
            cur.pop_back();
          }
      };
      gen(budget, 1, 1);
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      coords[idx] = v;
      weights(idx + 1);
    }
  };
  weights(0);
  return out;
}

}  // namespace sif
