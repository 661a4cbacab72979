#include "sif/qcharacter.hpp"

#include <stdexcept>

namespace sif {

QCharacter QCharacter::unit(int rank) {
  QCharacter c;
  c.add(0, Weight(rank), 1);
  return c;
}

void QCharacter::add(int q, const Weight& w, long mult) {
  if (mult == 0) return;
  if (truncation_ && q > *truncation_) return;
  long& m = terms_[q][w];
  m += mult;
  if (m == 0) {
    terms_[q].erase(w);
    if (terms_[q].empty()) terms_.erase(q);
  }
}

QCharacter& QCharacter::operator+=(const QCharacter& o) {
  for (const auto& [q, wm] : o.terms_)
    for (const auto& [w, m] : wm) add(q, w, m);
  return *this;
}

QCharacter QCharacter::operator*(const QCharacter& o) const {
  std::optional<int> tr = truncation_;
  if (o.truncation_ && (!tr || *o.truncation_ < *tr)) tr = o.truncation_;
  QCharacter out(tr);
  for (const auto& [q1, wm1] : terms_)
    for (const auto& [q2, wm2] : o.terms_) {
      if (tr && q1 + q2 > *tr) continue;
      for (const auto& [w1, m1] : wm1)
        for (const auto& [w2, m2] : wm2) out.add(q1 + q2, w1 + w2, m1 * m2);
    }
  return out;
}

QCharacter QCharacter::mul_pochhammer_inverse(int n) const {
  if (!truncation_) throw std::logic_error("pochhammer inverse needs a q-truncation");
  int qmax = *truncation_;
  // partitions with parts <= n, counted by size
  std::vector<long> p(qmax + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int d = part; d <= qmax; ++d) p[d] += p[d - part];
  QCharacter out(truncation_);
  for (const auto& [q, wm] : terms_)
    for (int d = 0; q + d <= qmax; ++d) {
      if (p[d] == 0) continue;
      for (const auto& [w, m] : wm) out.add(q + d, w, m * p[d]);
    }
  return out;
}

QCharacter QCharacter::truncated(int qmax) const {
  QCharacter out(qmax);
  if (truncation_ && *truncation_ < qmax) out = QCharacter(truncation_);
  for (const auto& [q, wm] : terms_)
    for (const auto& [w, m] : wm) out.add(q, w, m);
  return out;
}

long QCharacter::graded_dim(int q) const {
  auto it = terms_.find(q);
  if (it == terms_.end()) return 0;
  long d = 0;
  for (const auto& [w, m] : it->second) d += m;
  return d;
}

long QCharacter::dim_at_q1() const {
  long d = 0;
  for (const auto& [q, wm] : terms_)
    for (const auto& [w, m] : wm) d += m;
  return d;
}

long QCharacter::weight_mult(int q, const Weight& w) const {
  auto it = terms_.find(q);
  if (it == terms_.end()) return 0;
  auto jt = it->second.find(w);
  return jt == it->second.end() ? 0 : jt->second;
}

std::vector<long> gaussian_binomial(int m, int k) {
  if (k < 0 || k > m) return {0};
  // [m k]_q = [m-1 k-1]_q + q^k [m-1 k]_q
  std::vector<std::vector<long>> row(k + 1);
  for (int kk = 0; kk <= k; ++kk) row[kk] = {kk == 0 ? 1L : 0L};
  for (int mm = 1; mm <= m; ++mm) {
    std::vector<std::vector<long>> next(k + 1);
    next[0] = {1};
    for (int kk = 1; kk <= std::min(k, mm); ++kk) {
      std::vector<long> a = row[kk - 1];
      if (kk <= mm - 1) {
        const std::vector<long>& b = row[kk];
        if (a.size() < b.size() + kk) a.resize(b.size() + kk, 0);
        for (size_t d = 0; d < b.size(); ++d) a[d + kk] += b[d];
      }
      next[kk] = std::move(a);
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace sif
