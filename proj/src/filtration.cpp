#include "sif/filtration.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sif {

namespace {

Rational frac_part(const Rational& q) { return q - floor_to_long(q); }

std::string mon_key(const FockMonomial& m) {
  std::ostringstream os;
  for (const auto& [n, i] : m.creators) os << n << "." << i << ",";
  os << "|";
  for (const auto& c : m.lattice.c) os << rat_str(c) << ",";
  return os.str();
}

}  // namespace

SparseVec to_sparse(const State& s) {
  SparseVec out;
  for (const auto& [mon, c] : s.terms()) out.emplace(*mon, c);
  return out;
}

State from_sparse(const SparseVec& v) {
  State s;
  for (const auto& [mon, c] : v) s.add_term(mon, c);
  return s;
}

bool SpanReducer::reduce(SparseVec& v) const {
  auto it = v.begin();
  while (it != v.end()) {
    auto r = rows_.find(it->first);
    if (r == rows_.end()) {
      ++it;
      continue;
    }
    FockMonomial pivot = it->first;
    Cyc c = it->second;
    for (const auto& [mon, rc] : r->second) {
      auto jt = v.find(mon);
      if (jt == v.end()) {
        Cyc nv = -(c * rc);
        if (!nv.is_zero()) v.emplace(mon, nv);
      } else {
        jt->second -= c * rc;
        if (jt->second.is_zero()) v.erase(jt);
      }
    }
    // row monomials are >= its pivot, so everything before pivot is final
    it = v.upper_bound(pivot);
  }
  return v.empty();
}

bool SpanReducer::insert(SparseVec v) {
  if (reduce(v)) return false;
  FockMonomial pivot = v.begin()->first;
  Cyc inv = v.begin()->second.inverse();
  for (auto& [mon, c] : v) c *= inv;
  // keep the stored rows fully reduced: clear the new pivot everywhere
  for (auto& [p, row] : rows_) {
    auto jt = row.find(pivot);
    if (jt == row.end()) continue;
    Cyc f = jt->second;
    for (const auto& [mon, c] : v) {
      auto kt = row.find(mon);
      if (kt == row.end()) {
        Cyc nv = -(f * c);
        if (!nv.is_zero()) row.emplace(mon, nv);
      } else {
        kt->second -= f * c;
        if (kt->second.is_zero()) row.erase(kt);
      }
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool SpanReducer::contains(const State& s) const {
  SparseVec v = to_sparse(s);
  return reduce(v);
}

bool FiltrationSpan::insert_state(const RootSystem& rs, const State& v, long max_dim) {
  bool changed = false;
  for (const auto& [key, comp] : v.components(rs)) {
    if (key.second > cutoff) continue;
    SpanReducer& red = comps[key];
    if (red.insert(to_sparse(comp))) changed = true;
    if (max_dim > 0 && red.rank() > max_dim)
      throw std::runtime_error("graded component dimension exceeds the configured cap");
  }
  return changed;
}

bool FiltrationSpan::contains(const RootSystem& rs, const State& v) const {
  for (const auto& [key, comp] : v.components(rs)) {
    auto it = comps.find(key);
    if (it == comps.end()) return false;
    if (!it->second.contains(comp)) return false;
  }
  return true;
}

long FiltrationSpan::rank() const {
  long r = 0;
  for (const auto& [key, red] : comps) r += red.rank();
  return r;
}

long FiltrationSpan::rank_at_cw(const Rational& cw) const {
  long r = 0;
  for (const auto& [key, red] : comps)
    if (key.second == cw) r += red.rank();
  return r;
}

std::vector<State> FiltrationSpan::basis_states() const {
  std::vector<State> out;
  for (const auto& [key, red] : comps)
    for (const auto& [pivot, row] : red.rows()) out.push_back(from_sparse(row));
  return out;
}

const State& FundamentalLift::vector_for(const Column& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return vectors[i];
  throw std::out_of_range("unknown lift label");
}

long max_dim_from_env() {
  const char* s = std::getenv("LATTICE_VOA_MAX_DIM");
  if (!s || !*s) return 5000;
  long v = std::atol(s);
  return v > 0 ? v : 5000;
}

FiltrationContext::FiltrationContext(const RootSystem& rs, long max_component_dim)
    : rs_(rs), max_dim_(max_component_dim > 0 ? max_component_dim : max_dim_from_env()) {}

const FundamentalLift& FiltrationContext::fundamental_lift(int i) {
  auto it = lifts_.find(i);
  if (it != lifts_.end()) return it->second;
  if (i < 1 || i > rs_.rank()) throw std::out_of_range("fundamental index");

  FundamentalLift lift;
  lift.node = i;
  if (rs_.kind() == 'A') {
    // match the exterior-power model basis: parallel BFS over lowering edges,
    // seeded at the highest column (1..i) <-> e^{omega_i}
    GModuleModel model = exterior_model(rs_, i);
    std::vector<State> vecs(model.dim());
    std::vector<char> have(model.dim(), 0);
    Column top;
    for (int a = 1; a <= i; ++a) top.push_back(a);
    int t0 = model.index_of(top);
    vecs[t0] = lattice_state(rs_, rs_.fundamental(i));
    have[t0] = 1;
    std::deque<int> queue{t0};
    while (!queue.empty()) {
      int idx = queue.front();
      queue.pop_front();
      for (int k = 1; k <= rs_.rank(); ++k) {
        const SparseMat* f = model.matrix('f', k, 0);
        for (const auto& [row, c] : (*f)[idx]) {
          State img = affine_f(rs_, rs_.simple_root(k), 0, vecs[idx]) * (Rational(1) / c);
          if (!have[row]) {
            vecs[row] = img;
            have[row] = 1;
            queue.push_back(row);
          } else if (!(vecs[row] == img)) {
            throw std::logic_error("lift construction inconsistent with the exterior model");
          }
        }
      }
    }
    for (int b = 0; b < model.dim(); ++b) {
      if (!have[b]) throw std::logic_error("exterior model not reachable by lowering");
      lift.labels.push_back(model.labels[b]);
      lift.vectors.push_back(vecs[b]);
    }
  } else {
    // experimental outside type A: span closure of e^{omega_i} under g at t^0
    SpanReducer red;
    std::deque<State> queue;
    State seed = lattice_state(rs_, rs_.fundamental(i));
    red.insert(to_sparse(seed));
    queue.push_back(seed);
    lift.vectors.push_back(seed);
    while (!queue.empty()) {
      State u = queue.front();
      queue.pop_front();
      for (int k = 1; k <= rs_.rank(); ++k) {
        for (int dir = 0; dir < 2; ++dir) {
          State img = dir == 0 ? affine_e(rs_, rs_.simple_root(k), 0, u)
                               : affine_f(rs_, rs_.simple_root(k), 0, u);
          if (img.is_zero()) continue;
          SparseVec v = to_sparse(img);
          if (red.insert(v)) {
            queue.push_back(img);
            lift.vectors.push_back(img);
          }
          if (red.rank() > max_dim_)
            throw std::runtime_error("lift closure exceeds the configured cap");
        }
      }
    }
  }
  return lifts_.emplace(i, std::move(lift)).first->second;
}

const FiltrationSpan& FiltrationContext::g_span(const Weight& lambda, const Rational& cutoff) {
  auto key = std::make_pair(lambda, cutoff);
  auto it = spans_.find(key);
  if (it != spans_.end()) return it->second;
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::invalid_argument("filtration weight must be dominant integral");

  FiltrationSpan sp;
  sp.lambda = lambda;
  sp.cutoff = cutoff;
  if (lambda.is_zero()) {
    sp.insert_state(rs_, vacuum(rs_), max_dim_);
    return spans_.emplace(key, std::move(sp)).first->second;
  }

  for (const Weight& mu : rs_.dominant_below(lambda)) {
    const FiltrationSpan& sub = g_span(mu, cutoff);
    for (const State& b : sub.basis_states()) sp.insert_state(rs_, b, max_dim_);
  }

  for (int i = 1; i <= rs_.rank(); ++i) {
    Weight prev = lambda - rs_.fundamental(i);
    if (!prev.is_dominant()) continue;
    const FundamentalLift& lift = fundamental_lift(i);
    // copy: recursion below may invalidate references into the span cache
    std::vector<State> prev_basis = g_span(prev, cutoff).basis_states();
    for (const State& B : lift.vectors) {
      Rational cwB = B.max_conformal_weight(rs_);
      int gB = B.gamma_class(rs_);
      for (const State& C : prev_basis) {
        Rational cwC = C.max_conformal_weight(rs_);
        int gC = C.gamma_class(rs_);
        // admissible modes k with output conformal weight cwB + cwC - k - 1
        // inside [0, cutoff]
        Rational grid = rs_.delta(gB, gC);
        Rational kmax_r = cwB + cwC - 1;
        Rational kmin_r = kmax_r - cutoff;
        Rational k = floor_to_long(kmax_r - grid) + grid;
        for (; k >= kmin_r; k -= 1) {
          State img = vertex_mode(rs_, B, k, C);
          if (!img.is_zero()) sp.insert_state(rs_, img, max_dim_);
        }
      }
    }
  }
  return spans_.emplace(key, std::move(sp)).first->second;
}

const FiltrationSpan& FiltrationContext::g_span_below(const Weight& lambda,
                                                      const Rational& cutoff) {
  auto key = std::make_pair(lambda, cutoff);
  auto it = below_.find(key);
  if (it != below_.end()) return it->second;
  FiltrationSpan sp;
  sp.lambda = lambda;
  sp.cutoff = cutoff;
  for (const Weight& mu : rs_.dominant_below(lambda)) {
    const FiltrationSpan& sub = g_span(mu, cutoff);
    for (const State& b : sub.basis_states()) sp.insert_state(rs_, b, max_dim_);
  }
  return below_.emplace(key, std::move(sp)).first->second;
}

std::vector<long> FiltrationContext::quotient_dims(const Weight& lambda, int qmax) {
  Rational base = rs_.inner(lambda, lambda) / 2;
  Rational cutoff = base + qmax;
  const FiltrationSpan& full = g_span(lambda, cutoff);
  const FiltrationSpan& below = g_span_below(lambda, cutoff);
  std::vector<long> dims;
  for (int d = 0; d <= qmax; ++d)
    dims.push_back(full.rank_at_cw(base + d) - below.rank_at_cw(base + d));
  return dims;
}

bool in_fdag(const RootSystem& rs, const State& v, const Weight& lambda, long max_dim) {
  if (v.is_zero()) return true;
  if (max_dim <= 0) max_dim = max_dim_from_env();
  auto weights_ok = [&](const State& s) {
    for (const auto& [mon, c] : s.terms())
      if (!rs.leq(mon->lattice, lambda)) return false;
    return true;
  };
  if (!weights_ok(v)) return false;
  SpanReducer red;
  red.insert(to_sparse(v));
  std::deque<State> queue{v};
  while (!queue.empty()) {
    State u = queue.front();
    queue.pop_front();
    long mmax = floor_to_long(u.max_conformal_weight(rs));
    if (mmax < 0) mmax = 0;
    for (int k = 1; k <= rs.rank(); ++k) {
      Weight alpha = rs.simple_root(k);
      for (long m = 0; m <= mmax; ++m) {
        for (int gen = 0; gen < 3; ++gen) {
          State img = gen == 0   ? affine_e(rs, alpha, m, u)
                      : gen == 1 ? affine_f(rs, alpha, m, u)
                                 : affine_h(rs, alpha, m, u);
          if (img.is_zero()) continue;
          if (!weights_ok(img)) return false;
          if (red.insert(to_sparse(img))) queue.push_back(img);
          if (red.rank() > max_dim)
            throw std::runtime_error("current-algebra closure exceeds the configured cap");
        }
      }
    }
  }
  return true;
}

State m_coefficient(const RootSystem& rs, const std::vector<std::pair<int, State>>& factors,
                    const std::vector<long>& m) {
  int s = static_cast<int>(factors.size());
  if (static_cast<int>(m.size()) != s) throw std::invalid_argument("one exponent per factor");
  if (s == 0) return vacuum(rs);

  std::vector<Weight> w;
  std::vector<Rational> cw;
  for (const auto& [node, st] : factors) {
    if (node < 1 || node > rs.rank()) throw std::out_of_range("fundamental index");
    if (st.is_zero()) return State();
    w.push_back(rs.fundamental(node));
    cw.push_back(st.max_conformal_weight(rs));
  }
  std::vector<std::vector<Rational>> mm(s, std::vector<Rational>(s, Rational(0)));
  Rational total = 0;
  for (int a = 0; a < s; ++a) total += cw[a] + m[a];
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) {
      mm[a][b] = -rs.inner(w[a], w[b]);
      total -= mm[a][b];
    }
  if (total < 0) return State();

  // window bound for the cut before factor c: the conformal weight produced to
  // the right of the cut caps the total prefactor degree crossing it
  std::vector<Rational> D(s, Rational(0));
  for (int c = 1; c < s; ++c) {
    for (int t = c; t < s; ++t) D[c] += m[t] + cw[t];
    for (int a = c; a < s; ++a)
      for (int b = a + 1; b < s; ++b) D[c] -= mm[a][b];
  }

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b) pairs.emplace_back(a, b);

  std::vector<long> jv(pairs.size(), 0);
  std::vector<Rational> cross(s, Rational(0));
  State out;

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == pairs.size()) {
      Rational coef = 1;
      for (size_t t = 0; t < pairs.size(); ++t) {
        auto [a, b] = pairs[t];
        coef *= binomial(mm[a][b], jv[t]);
        if (jv[t] % 2) coef = -coef;
      }
      if (coef == 0) return;
      std::vector<Rational> n(s);
      for (int k = 0; k < s; ++k) n[k] = Rational(-1 - m[k]);
      for (size_t t = 0; t < pairs.size(); ++t) {
        auto [a, b] = pairs[t];
        n[a] += mm[a][b] - jv[t];
        n[b] += jv[t];
      }
      State st = vacuum(rs);
      for (int k = s - 1; k >= 0; --k) {
        st = vertex_mode(rs, factors[k].second, n[k], st);
        if (st.is_zero()) return;
      }
      out += st * coef;
      return;
    }
    auto [a, b] = pairs[idx];
    long jmax = -1;
    bool first = true;
    for (int c = a + 1; c <= b; ++c) {
      long cap = floor_to_long(D[c] - cross[c]);
      if (first || cap < jmax) jmax = cap;
      first = false;
    }
    for (long j = 0; j <= jmax; ++j) {
      jv[idx] = j;
      for (int c = a + 1; c <= b; ++c) cross[c] += j;
      rec(idx + 1);
      for (int c = a + 1; c <= b; ++c) cross[c] -= j;
    }
  };
  rec(0);
  return out;
}

bool RingElement::is_zero() const {
  for (const auto& [key, v] : reduced)
    if (!v.empty()) return false;
  return true;
}

bool RingElement::operator==(const RingElement& o) const {
  if (!(lambda == o.lambda) || cutoff != o.cutoff || fingerprint != o.fingerprint) return false;
  auto strip = [](const std::map<ComponentKey, SparseVec>& m) {
    std::map<ComponentKey, SparseVec> out;
    for (const auto& [k, v] : m)
      if (!v.empty()) out.emplace(k, v);
    return out;
  };
  return strip(reduced) == strip(o.reduced);
}

RingElement phi_product(FiltrationContext& ctx, const std::vector<PhiFactor>& factors) {
  const RootSystem& rs = ctx.rs();
  // Canonical factor order: factors on distinct nodes graded-commute up to a
  // sign determined by the nodes, so sorting by node index (stable, keeping the
  // input order within a node) picks a representative independent of the input
  // permutation.
  std::vector<PhiFactor> sorted = factors;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PhiFactor& a, const PhiFactor& b) { return a.node < b.node; });
  std::vector<std::pair<int, State>> fs;
  std::vector<long> m;
  Weight lambda = rs.zero();
  Rational ecw = 0;
  for (const PhiFactor& f : sorted) {
    if (f.degree < 0) throw std::invalid_argument("factor t-degree must be >= 0");
    fs.emplace_back(f.node, f.vec);
    m.push_back(f.degree);
    lambda = lambda + rs.fundamental(f.node);
    ecw += f.vec.max_conformal_weight(rs) + f.degree;
  }
  // (mu, nu) <= (omega_a, omega_b) for mu, nu in the respective orbits, so this
  // bounds the conformal weight of every lattice component of the product.
  for (size_t a = 0; a < factors.size(); ++a)
    for (size_t b = a + 1; b < factors.size(); ++b)
      ecw += rs.inner(rs.fundamental(factors[a].node), rs.fundamental(factors[b].node));

  RingElement el;
  el.lambda = lambda;
  el.cutoff = Rational(ecw < 0 ? 0 : ceil_to_long(ecw));
  el.rep = m_coefficient(rs, fs, m);

  const FiltrationSpan& below = ctx.g_span_below(lambda, el.cutoff);
  for (const auto& [key, comp] : el.rep.components(rs)) {
    SparseVec v = to_sparse(comp);
    auto it = below.comps.find(key);
    if (it != below.comps.end()) it->second.reduce(v);
    if (!v.empty()) el.reduced.emplace(key, std::move(v));
  }

  std::ostringstream fp;
  fp << lambda.str() << "#" << rat_str(el.cutoff) << "#";
  for (const auto& [key, red] : below.comps) {
    fp << key.first.str() << "@" << rat_str(key.second) << ":";
    for (const auto& [pivot, row] : red.rows()) fp << mon_key(pivot) << ";";
  }
  el.fingerprint = std::hash<std::string>{}(fp.str());
  return el;
}

bool vertex_mult_check(FiltrationContext& ctx, int i1, const State& A, int i2, const State& B,
                       long s, long r) {
  if (s <= 0) throw std::invalid_argument("derivative order s must be positive");
  if (r < 0) throw std::invalid_argument("series degree r must be nonnegative");
  const RootSystem& rs = ctx.rs();
  Rational mm = -rs.inner(rs.fundamental(i1), rs.fundamental(i2));
  Weight lambda = rs.fundamental(i1) + rs.fundamental(i2);

  // the generating-function identity behind the rearrangement, instance check
  for (long j = 0; j <= r + s + 2; ++j) {
    Rational lhs = binomial(mm - s, j);
    if (j % 2) lhs = -lhs;
    Rational rhs = 0;
    for (long l = 0; l <= j; ++l) {
      Rational t = binomial(mm, l) * falling_factorial(Rational(j - l + s - 1), s - 1);
      rhs += (l % 2) ? -t : t;
    }
    if (lhs != rhs) throw std::logic_error("binomial rearrangement identity failed");
  }

  State lhs = vertex_mode(rs, vertex_mode(rs, A, mm - s, B), Rational(-1 - r), vacuum(rs));
  State rhs;
  for (long p = s - 1; p <= r + s - 1; ++p) {
    long q = r + s - 1 - p;
    Rational fall = falling_factorial(Rational(p), s - 1);
    if (fall == 0) continue;
    for (long l = 0; l <= q; ++l) {
      Rational c = fall * binomial(mm, l);
      if (l % 2) c = -c;
      if (c == 0) continue;
      State inner = vertex_mode(rs, B, Rational(-1 - q + l), vacuum(rs));
      rhs += vertex_mode(rs, A, mm - 1 - p - l, inner) * c;
    }
  }
  State diff = lhs - rhs;
  if (diff.is_zero()) return true;
  Rational cutoff = Rational(ceil_to_long(diff.max_conformal_weight(rs)));
  return ctx.g_span_below(lambda, cutoff).contains(rs, diff);
}

RelationReport verify_relation(FiltrationContext& ctx, int i1, int i2,
                               const std::vector<std::pair<State, State>>& pairs, long s,
                               int qmax) {
  if (s <= 0) throw std::invalid_argument("derivative order s must be positive");
  const RootSystem& rs = ctx.rs();
  RelationReport rep;
  if (pairs.empty()) {
    rep.hypothesis_ok = rep.coefficients_ok = true;
    return rep;
  }
  Rational mm = -rs.inner(rs.fundamental(i1), rs.fundamental(i2));
  Weight lambda = rs.fundamental(i1) + rs.fundamental(i2);

  State H;
  for (const auto& [a, b] : pairs) H += vertex_mode(rs, a, mm - s, b);
  if (H.is_zero()) {
    rep.hypothesis_ok = true;
  } else {
    Rational cutoff = Rational(ceil_to_long(H.max_conformal_weight(rs)));
    rep.hypothesis_ok = ctx.g_span_below(lambda, cutoff).contains(rs, H);
  }
  if (!rep.hypothesis_ok) return rep;

  rep.coefficients_ok = true;
  for (int r = 0; r <= qmax && rep.coefficients_ok; ++r) {
    std::map<ComponentKey, SparseVec> total;
    for (const auto& [a, b] : pairs) {
      for (long k = s - 1; k <= r + s - 1; ++k) {
        long kp = r + s - 1 - k;
        Rational fall = falling_factorial(Rational(k), s - 1);
        if (fall == 0) continue;
        RingElement el = phi_product(ctx, {{i1, a, k}, {i2, b, kp}});
        for (const auto& [key, v] : el.reduced)
          for (const auto& [mon, c] : v) {
            Cyc& acc = total[key][mon];
            acc += c * fall;
            if (acc.is_zero()) total[key].erase(mon);
          }
      }
    }
    for (const auto& [key, v] : total)
      if (!v.empty()) rep.coefficients_ok = false;
  }
  return rep;
}

}  // namespace sif
