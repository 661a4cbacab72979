#include "sif/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sif {

namespace {

std::set<Weight> weight_system(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> ws{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Rational m = w.c[i - 1];
      if (m <= 0) continue;
      Weight cur = w;
      Weight alpha = rs.simple_root(i);
      for (long step = 1; step <= to_long(m); ++step) {
        cur = cur - alpha;
        if (ws.insert(cur).second) queue.push_back(cur);
      }
    }
  }
  return ws;
}

long height(const RootSystem& rs, const Weight& w) {
  Rational h = 0;
  for (const auto& a : rs.to_root_basis(w)) h += a;
  return to_long(h);
}

}  // namespace

WeightMult irreducible_character(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("highest weight must be dominant integral");
  std::set<Weight> ws = weight_system(rs, lambda);
  std::vector<Weight> order(ws.begin(), ws.end());
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    long ha = height(rs, lambda - a), hb = height(rs, lambda - b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  Weight rho = rs.rho();
  Rational top_norm = rs.inner(lambda + rho, lambda + rho);
  WeightMult mult;
  for (const Weight& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Rational num = 0;
    for (const Weight& alpha : rs.positive_roots()) {
      Weight cur = mu;
      while (true) {
        cur = cur + alpha;
        auto it = mult.find(cur);
        if (it == mult.end()) {
          if (!ws.count(cur)) break;
          continue;  // weight present but multiplicity not yet set: impossible by height order
        }
        num += Rational(2) * it->second * rs.inner(cur, alpha);
      }
    }
    Rational den = top_norm - rs.inner(mu + rho, mu + rho);
    Rational m = num / den;
    mult[mu] = to_long(m);
  }
  return mult;
}

long irreducible_dim(const RootSystem& rs, const Weight& lambda) {
  long d = 0;
  for (const auto& [w, m] : irreducible_character(rs, lambda)) d += m;
  return d;
}

long weyl_dim_formula(const RootSystem& rs, const Weight& lambda) {
  Weight rho = rs.rho();
  Rational prod = 1;
  for (const Weight& alpha : rs.positive_roots())
    prod *= rs.inner(lambda + rho, alpha) / rs.inner(rho, alpha);
  return to_long(prod);
}

long fundamental_weyl_dim(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::out_of_range("fundamental index");
  if (rs.kind() == 'A') {
    // binom(r+1, i)
    Rational b = binomial(Rational(rs.rank() + 1), i);
    return to_long(b);
  }
  if (rs.kind() == 'D' && rs.rank() == 4) {
    static const long dims[4] = {8, 29, 8, 8};
    return dims[i - 1];
  }
  throw std::domain_error("fundamental local Weyl dimension table unavailable for " + rs.name());
}

long local_weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("local Weyl dimension needs a dominant integral weight");
  long d = 1;
  for (int i = 1; i <= rs.rank(); ++i)
    for (long rep = 0; rep < to_long(lambda.c[i - 1]); ++rep) d *= fundamental_weyl_dim(rs, i);
  return d;
}

std::vector<Weight> lr_two_fundamentals(const RootSystem& rs, int i, int j) {
  if (rs.kind() != 'A') throw std::domain_error("two-fundamental decomposition requires type A");
  if (!(1 <= j && j <= i && i <= rs.rank())) throw std::out_of_range("need 1 <= j <= i <= r");
  std::vector<Weight> out;
  int lmax = std::min(j, rs.rank() + 1 - i);
  for (int l = 0; l <= lmax; ++l) {
    Weight w(rs.rank());
    if (j - l >= 1) w.c[j - l - 1] += 1;
    if (i + l <= rs.rank()) w.c[i + l - 1] += 1;
    out.push_back(w);
  }
  return out;
}

QCharacter ch_local_weyl(const RootSystem& rs, const Weight& lambda, int qmax) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("local Weyl character needs a dominant integral weight");
  QCharacter out(qmax);
  if (lambda.is_zero()) {
    out.add(0, rs.zero(), 1);
    return out;
  }
  if (rs.kind() == 'A' && rs.rank() == 1) {
    long m = to_long(lambda.c[0]);
    for (long k = 0; k <= m; ++k) {
      std::vector<long> gauss = gaussian_binomial(static_cast<int>(m), static_cast<int>(k));
      Weight w(1);
      w.c[0] = m - 2 * k;
      for (size_t d = 0; d < gauss.size(); ++d) out.add(static_cast<int>(d), w, gauss[d]);
    }
    return out;
  }
  if (rs.kind() == 'A') {
    std::vector<int> nodes;
    for (int i = 1; i <= rs.rank(); ++i)
      for (long rep = 0; rep < to_long(lambda.c[i - 1]); ++rep) nodes.push_back(i);
    if (nodes.size() == 1) {
      for (const auto& [w, m] : irreducible_character(rs, lambda)) out.add(0, w, m);
      return out;
    }
    if (nodes.size() == 2) {
      int i = std::max(nodes[0], nodes[1]);
      int j = std::min(nodes[0], nodes[1]);
      std::vector<Weight> dec = lr_two_fundamentals(rs, i, j);
      for (size_t l = 0; l < dec.size(); ++l)
        for (const auto& [w, m] : irreducible_character(rs, dec[l]))
          out.add(static_cast<int>(l), w, m);
      return out;
    }
  }
  throw std::domain_error("local Weyl character unavailable for " + rs.name() + " lambda=" +
                          lambda.str());
}

QCharacter ch_global(const RootSystem& rs, const Weight& lambda, int qmax) {
  QCharacter ch = ch_local_weyl(rs, lambda, qmax);
  for (int i = 1; i <= rs.rank(); ++i) {
    long n = to_long(lambda.c[i - 1]);
    if (n > 0) ch = ch.mul_pochhammer_inverse(static_cast<int>(n));
  }
  return ch;
}

}  // namespace sif
