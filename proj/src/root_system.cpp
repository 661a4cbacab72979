#include "sif/root_system.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sif {

bool Weight::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

bool Weight::is_integral() const {
  for (const auto& x : c)
    if (!is_integer(x)) return false;
  return true;
}

bool Weight::is_dominant() const {
  for (const auto& x : c)
    if (x < 0) return false;
  return true;
}

Weight Weight::operator+(const Weight& o) const {
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.c[i] += o.c[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  Weight r = *this;
  for (int i = 0; i < rank(); ++i) r.c[i] -= o.c[i];
  return r;
}

Weight Weight::operator*(const Rational& r) const {
  Weight out = *this;
  for (auto& x : out.c) x *= r;
  return out;
}

bool Weight::operator<(const Weight& o) const {
  for (int i = 0; i < rank() && i < o.rank(); ++i) {
    int cmp = ::cmp(c[i], o.c[i]);
    if (cmp != 0) return cmp < 0;
  }
  return rank() < o.rank();
}

std::string Weight::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ",";
    os << c[i].get_str();
  }
  os << ")";
  return os.str();
}

namespace {

std::vector<std::vector<long>> cartan_matrix(char kind, int r) {
  std::vector<std::vector<long>> c(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  if (kind == 'A') {
    for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
  } else if (kind == 'D') {
    for (int i = 0; i + 1 < r - 1; ++i) link(i, i + 1);  // chain 1..r-1
    link(r - 3, r - 1);                                  // fork: node r attached to r-2
  } else {  // E, Bourbaki: chain 1-3-4-5-..-r, node 2 attached to 4
    link(0, 2);
    for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
    link(1, 3);
  }
  return c;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<long>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rational d = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= d;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col];
      for (int j = 0; j < 2 * n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

RootSystem RootSystem::from_string(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad root system name: " + name);
  char kind = name[0];
  int r = 0;
  try {
    r = std::stoi(name.substr(1));
  } catch (...) {
    throw std::invalid_argument("bad root system name: " + name);
  }
  bool ok = (kind == 'A' && r >= 1 && r <= 8) || (kind == 'D' && r >= 4 && r <= 8) ||
            (kind == 'E' && r >= 6 && r <= 8);
  if (!ok) throw std::invalid_argument("unsupported root system: " + name);
  RootSystem rs;
  rs.name_ = name;
  rs.kind_ = kind;
  rs.rank_ = r;
  rs.cartan_ = cartan_matrix(kind, r);
  rs.cartan_inv_ = invert(rs.cartan_);
  rs.build_tables();
  return rs;
}

void RootSystem::build_tables() {
  // Class representatives. In type A we take chi_k = k*w_1 (k = 0..r): the
  // k-th power of the generating class. With this choice B(.,.) is
  // bimultiplicative on P for even rank (nu(g,h) = e^{i pi g h (w_1,w_1)} is
  // additive mod 2 iff r^2 is even), and there the cocycle commutator equals B
  // and the commutation factor of lattice vertex operators is class-constant.
  representatives_.clear();
  representatives_.push_back(zero());
  if (kind_ == 'A') {
    Weight chi = zero();
    for (int i = 1; i <= rank_; ++i) {
      chi = chi + fundamental(1);
      representatives_.push_back(chi);
    }
  } else if (kind_ == 'D') {
    representatives_.push_back(fundamental(1));
    representatives_.push_back(fundamental(rank_ - 1));
    representatives_.push_back(fundamental(rank_));
  } else if (kind_ == 'E' && rank_ == 6) {
    representatives_.push_back(fundamental(1));
    representatives_.push_back(fundamental(6));
  } else if (kind_ == 'E' && rank_ == 7) {
    representatives_.push_back(fundamental(7));
  }
  // gamma_exponent: least N with N*chi in Q for every representative
  long n = 1;
  for (const auto& chi : representatives_)
    for (const auto& a : to_root_basis(chi)) n = lcm_long(n, a.get_den().get_si());
  gamma_exponent_ = static_cast<int>(n);
  // cyclotomic order 2L, L = lcm of N and all inverse-Cartan denominators,
  // so that every phase e^{i pi (lambda,mu)}, lambda,mu in P, is representable
  long l = n;
  for (const auto& row : cartan_inv_)
    for (const auto& x : row) l = lcm_long(l, x.get_den().get_si());
  cyc_order_ = static_cast<int>(2 * l);
}

Weight RootSystem::fundamental(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("fundamental weight index");
  Weight w(rank_);
  w.c[i - 1] = 1;
  return w;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple root index");
  Weight w(rank_);
  for (int j = 0; j < rank_; ++j) w.c[j] = cartan_[j][i - 1];
  return w;
}

Weight RootSystem::rho() const {
  Weight w(rank_);
  for (auto& x : w.c) x = 1;
  return w;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
  if (a.rank() != rank_ || b.rank() != rank_) throw std::invalid_argument("weight rank mismatch");
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b.c[j] == 0) continue;
      s += a.c[i] * cartan_inv_[i][j] * b.c[j];
    }
  }
  return s;
}

std::vector<Rational> RootSystem::to_root_basis(const Weight& w) const {
  std::vector<Rational> out(rank_, Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[i] += cartan_inv_[i][j] * w.c[j];
  return out;
}

bool RootSystem::in_root_lattice(const Weight& w) const {
  for (const auto& a : to_root_basis(w))
    if (!is_integer(a)) return false;
  return true;
}

bool RootSystem::leq(const Weight& mu, const Weight& lambda) const {
  for (const auto& a : to_root_basis(lambda - mu))
    if (a < 0) return false;
  return true;
}

Weight RootSystem::dual_weight(const Weight& w) const {
  Weight out = w;
  if (kind_ == 'A') {
    std::reverse(out.c.begin(), out.c.end());
  } else if (kind_ == 'D' && rank_ % 2 == 1) {
    std::swap(out.c[rank_ - 2], out.c[rank_ - 1]);
  } else if (kind_ == 'E' && rank_ == 6) {
    std::swap(out.c[0], out.c[5]);
    std::swap(out.c[2], out.c[4]);
  }
  return out;
}

int RootSystem::gamma_class(const Weight& w) const {
  if (!w.is_integral()) throw std::invalid_argument("gamma_class of non-integral weight");
  for (int g = 0; g < gamma_order(); ++g)
    if (in_root_lattice(w - representatives_[g])) return g;
  throw std::logic_error("representatives do not cover P/Q");
}

int RootSystem::gamma_add(int g, int h) const {
  return gamma_class(representatives_.at(g) + representatives_.at(h));
}

Rational RootSystem::delta(int g, int h) const {
  Rational x = -inner(representatives_.at(g), representatives_.at(h));
  // reduce to [0,1)
  x -= floor_to_long(x);
  return x;
}

Cyc RootSystem::nu(int g, int h) const {
  return cyc_phase(inner(representatives_.at(g), representatives_.at(h)));
}

Cyc RootSystem::bform(const Weight& a, const Weight& b) const {
  return cyc_phase(-inner(a, b)) * nu(gamma_class(a), gamma_class(b));
}

int RootSystem::bform_sign(const Weight& a, const Weight& b) const {
  Cyc v = bform(a, b);
  if (v == cyc_one()) return 1;
  if (v == -cyc_one()) return -1;
  throw std::logic_error("B(lambda,mu) not a sign");
}

int RootSystem::epsilon_sign(const Weight& a, const Weight& b) const {
  if (!a.is_integral() || !b.is_integral())
    throw std::invalid_argument("epsilon of non-integral weight");
  // bimultiplicative extension of epsilon(w_i, w_j) = 1 (i<=j), B(w_i,w_j) (i>j)
  long parity = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < i; ++j) {
      if (b.c[j] == 0) continue;
      if (bform_sign(fundamental(i + 1), fundamental(j + 1)) == -1)
        parity += to_long(a.c[i]) * to_long(b.c[j]);
    }
  }
  return (parity % 2 == 0) ? 1 : -1;
}

Cyc RootSystem::epsilon(const Weight& a, const Weight& b) const {
  return cyc_rat(epsilon_sign(a, b));
}

Cyc RootSystem::braiding(const Weight& a, const Weight& b) const {
  // Commutation factor of Y(e^a, z) past Y(e^b, w):
  //   epsilon(a,b)/epsilon(b,a) * e^{i pi (a,b)}.
  // Equals nu(p(a), p(b)) whenever the cocycle commutator agrees with B(a,b);
  // in type A with even rank this holds for all integral a, b.
  Rational s = epsilon_sign(a, b) * epsilon_sign(b, a);
  return cyc_phase(inner(a, b)) * s;
}

bool RootSystem::mode_admissible(const Rational& n, int g, int h) const {
  return is_integer(n + inner(representatives_.at(g), representatives_.at(h)));
}

const std::vector<Weight>& RootSystem::positive_roots() const {
  if (!positive_roots_.empty()) return positive_roots_;
  // closure of simple roots: beta + alpha_i is a root iff (beta, alpha_i) = -1
  std::set<Weight> found;
  std::vector<Weight> queue;
  for (int i = 1; i <= rank_; ++i) {
    found.insert(simple_root(i));
    queue.push_back(simple_root(i));
  }
  while (!queue.empty()) {
    Weight beta = queue.back();
    queue.pop_back();
    for (int i = 1; i <= rank_; ++i) {
      if (inner(beta, simple_root(i)) == -1) {
        Weight next = beta + simple_root(i);
        if (found.insert(next).second) queue.push_back(next);
      }
    }
  }
  positive_roots_.assign(found.begin(), found.end());
  return positive_roots_;
}

std::vector<Weight> RootSystem::dominant_below(const Weight& lambda) const {
  // mu dominant with mu <= lambda forces (mu,mu) <= (lambda,lambda)
  Rational norm = inner(lambda, lambda);
  std::vector<Weight> out;
  std::vector<long> caps(rank_);
  for (int i = 0; i < rank_; ++i) {
    long c = 0;
    Weight w = fundamental(i + 1);
    Rational ni = inner(w, w);
    while (Rational(c + 1) * (c + 1) * ni <= norm) ++c;
    caps[i] = c;
  }
  Weight mu(rank_);
  std::function<void(int)> rec = [&](int i) {
    if (i == rank_) {
      if (!(mu == lambda) && inner(mu, mu) <= norm && leq(mu, lambda)) out.push_back(mu);
      return;
    }
    for (long v = 0; v <= caps[i]; ++v) {
      mu.c[i] = v;
      rec(i + 1);
    }
    mu.c[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace sif
