#include "sif/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sif/weyl.hpp"

namespace sif {

namespace {

// Sparse rational vector over integer basis indices, with a reduced row space
// for independence tests. Pivot of a row is its smallest index.
using RatVec = std::map<int, Rational>;

class RatReducer {
 public:
  // Eliminates pivots from v in place; true iff v reduces to zero.
  bool reduce(RatVec& v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      Rational c = it->second;
      for (const auto& [idx, rc] : row) {
        Rational& t = v[idx];
        t -= c * rc;
        if (t == 0) v.erase(idx);
      }
    }
    return v.empty();
  }

  bool insert(RatVec v) {
    if (reduce(v)) return false;
    auto piv = v.begin();
    Rational lead = piv->second;
    for (auto& [idx, c] : v) c /= lead;
    int p = piv->first;
    // back-substitute into existing rows to keep the space fully reduced
    for (auto& [q, row] : rows_) {
      auto it = row.find(p);
      if (it == row.end()) continue;
      Rational c = it->second;
      for (const auto& [idx, rc] : v) {
        Rational& t = row[idx];
        t -= c * rc;
        if (t == 0) row.erase(idx);
      }
    }
    rows_.emplace(p, std::move(v));
    return true;
  }

  long rank() const { return static_cast<long>(rows_.size()); }
  const std::map<int, RatVec>& rows() const { return rows_; }

 private:
  std::map<int, RatVec> rows_;
};

int column_index(const Column& col, int a) {
  // 1-based position of value a in col, 0 if absent
  for (size_t p = 0; p < col.size(); ++p)
    if (col[p] == a) return static_cast<int>(p) + 1;
  return 0;
}

// omega_{j-l} + omega_{i+l} with omega_0 = omega_{r+1} = 0
Weight layer_weight(const RootSystem& rs, int i, int j, int l) {
  Weight h = rs.zero();
  if (j - l >= 1) h = h + rs.fundamental(j - l);
  if (i + l <= rs.rank()) h = h + rs.fundamental(i + l);
  return h;
}

// all size-n subsets of {1..m}, lexicographic
std::vector<Column> subsets(int m, int n) {
  std::vector<Column> out;
  Column cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int a = start; a <= m; ++a) {
      cur.push_back(a);
      rec(a + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

Weight content_weight(const RootSystem& rs, const Column& I, const Column& J) {
  std::vector<long> mult(rs.rank() + 2, 0);
  for (int a : I) mult[a]++;
  for (int a : J) mult[a]++;
  Weight w = rs.zero();
  for (int k = 1; k <= rs.rank(); ++k) w.c[k - 1] = Rational(mult[k] - mult[k + 1]);
  return w;
}

}  // namespace

bool columns_admissible(const Column& I, const Column& J) {
  if (I.size() > J.size()) return true;
  if (I.size() < J.size()) return false;
  for (int a = static_cast<int>(I.size()) - 1; a >= 0; --a) {
    if (I[a] < J[a]) return true;
    if (I[a] > J[a]) return false;
  }
  return false;  // equal columns
}

namespace {

// The column-switch walk, defined whenever l(I) >= l(J). Runs identically on
// equal-length pairs in either order; on the non-admissible order the result
// exceeds the swapped value by one, which is exactly what the character sum
// over all ordered pairs requires.
std::vector<int> p_set_walk(const Column& I, const Column& J) {
  int li = static_cast<int>(I.size()), lj = static_cast<int>(J.size());
  // walk down from the bottom of I, switching columns per the comparison rule
  std::vector<int> P;
  bool in_I = true;
  int a = li;  // 1-based index into the current column
  P.push_back(I[li - 1]);
  while (true) {
    if (in_I) {
      if (a <= lj && I[a - 1] > J[a - 1]) {
        in_I = false;  // same index, switch to J
      } else {
        if (--a == 0) break;
      }
    } else {
      if (I[a - 1] < J[a - 1]) {
        in_I = true;  // same index, switch back to I
      } else {
        if (--a == 0) break;
      }
    }
    P.push_back(in_I ? I[a - 1] : J[a - 1]);
  }
  std::reverse(P.begin(), P.end());
  return P;
}

int k_walk(const Column& I, const Column& J) {
  return static_cast<int>(p_set_walk(I, J).size()) - static_cast<int>(I.size());
}

}  // namespace

std::vector<int> p_set(const Column& I, const Column& J) {
  if (!columns_admissible(I, J))
    throw std::invalid_argument("p_set: column pair not in admissible order");
  return p_set_walk(I, J);
}

int k_statistic(const Column& I, const Column& J) {
  // The statistic extends to every ordered pair with l(I) >= l(J): on an
  // equal-length pair in the non-admissible order the walk counts one more
  // switch than on the swapped pair, matching the character sum and the
  // two-column tableaux with equal column lengths.
  if (I.size() < J.size())
    throw std::invalid_argument("k_statistic: left column must not be shorter");
  return k_walk(I, J);
}

std::pair<Column, Column> two_column_tableau(int r, int i, int j, int l) {
  if (i < j || j < 1 || i > r) throw std::invalid_argument("need 1 <= j <= i <= r");
  if (l < 0 || l > std::min(j, r + 1 - i))
    throw std::invalid_argument("layer out of range");
  std::vector<int> C(i + 1, 0), D(j + 1, 0);  // 1-based
  int v = i + l;
  for (int a = i; a >= j; --a) C[a] = v--;
  // boustrophedon: alternate column switches and upward steps, l switches total
  bool in_C = true;
  int idx = j;
  for (int moves = 0; moves < l;) {
    in_C = !in_C;
    ++moves;
    (in_C ? C : D)[idx] = v--;
    if (moves == l) break;
    --idx;
    (in_C ? C : D)[idx] = v--;
  }
  // both columns are now filled down to index j-l+1; duplicate the rest
  for (int a = j - l; a >= 1; --a) C[a] = D[a] = a;
  Column cc(C.begin() + 1, C.end()), dd(D.begin() + 1, D.end());
  return {cc, dd};
}

QCharacter ch_w_two_fund(const RootSystem& rs, int i, int j, CharRoute route) {
  if (rs.kind() != 'A') throw std::invalid_argument("two-fundamental characters: type A only");
  if (j < 1 || i < j || i > rs.rank()) throw std::invalid_argument("need 1 <= j <= i <= rank");
  QCharacter ch;
  if (route == CharRoute::Tableaux) {
    std::vector<Column> Is = subsets(rs.rank() + 1, i), Js = subsets(rs.rank() + 1, j);
    for (const Column& I : Is)
      for (const Column& J : Js) ch.add(k_walk(I, J), content_weight(rs, I, J), 1);
  } else {
    int lmax = std::min(j, rs.rank() + 1 - i);
    for (int l = 0; l <= lmax; ++l) {
      WeightMult wm = irreducible_character(rs, layer_weight(rs, i, j, l));
      for (const auto& [w, mlt] : wm) ch.add(l, w, mlt);
    }
  }
  return ch;
}

std::vector<KernelElement> quadratic_kernel(const RootSystem& rs, int i, int j, int l) {
  if (rs.kind() != 'A') throw std::invalid_argument("quadratic kernel: type A only");
  if (j < 1 || i < j || i > rs.rank()) throw std::invalid_argument("need 1 <= j <= i <= rank");
  int lmax = std::min(j, rs.rank() + 1 - i);
  if (l < 1 || l > lmax) throw std::invalid_argument("layer out of range");

  GModuleModel Mi = exterior_model(rs, i), Mj = exterior_model(rs, j);
  int di = Mi.dim(), dj = Mj.dim();
  auto tensor_index = [dj](int a, int b) { return a * dj + b; };

  // raising operator e_k (x) 1 + 1 (x) e_k on a tensor basis vector
  auto raise = [&](int k, int a, int b) {
    RatVec out;
    for (const auto& [row, c] : (*Mi.matrix('e', k, 0))[a]) out[tensor_index(row, b)] += c;
    for (const auto& [row, c] : (*Mj.matrix('e', k, 0))[b]) out[tensor_index(a, row)] += c;
    return out;
  };
  auto lower = [&](int k, const RatVec& v) {
    RatVec out;
    for (const auto& [t, c] : v) {
      int a = t / dj, b = t % dj;
      for (const auto& [row, fc] : (*Mi.matrix('f', k, 0))[a]) {
        Rational& x = out[tensor_index(row, b)];
        x += c * fc;
        if (x == 0) out.erase(tensor_index(row, b));
      }
      for (const auto& [row, fc] : (*Mj.matrix('f', k, 0))[b]) {
        Rational& x = out[tensor_index(a, row)];
        x += c * fc;
        if (x == 0) out.erase(tensor_index(a, row));
      }
    }
    return out;
  };

  std::vector<KernelElement> out;
  for (int lv = l; lv <= lmax; ++lv) {
    Weight h = layer_weight(rs, i, j, lv);
    std::vector<int> slice;
    for (int a = 0; a < di; ++a)
      for (int b = 0; b < dj; ++b)
        if (Mi.weights[a] + Mj.weights[b] == h) slice.push_back(tensor_index(a, b));

    // nullspace of the stacked raising maps on the weight slice
    std::vector<RatVec> columns(slice.size());
    for (size_t c = 0; c < slice.size(); ++c) {
      int a = slice[c] / dj, b = slice[c] % dj;
      for (int k = 1; k <= rs.rank(); ++k)
        for (const auto& [row, v] : raise(k, a, b))
          if (v != 0) columns[c][k * di * dj + row] = v;
    }
    // eliminate: treat columns as unknown coefficients, rows as constraints
    RatReducer rows;
    std::vector<RatVec> basis_of_kernel;
    // incremental kernel: maintain combos expressing reduced columns
    std::vector<std::pair<RatVec, RatVec>> reduced;  // (image vector, combo)
    for (size_t c = 0; c < slice.size(); ++c) {
      RatVec img = columns[c], combo;
      combo[static_cast<int>(c)] = 1;
      for (const auto& [img0, combo0] : reduced) {
        if (img.empty()) break;
        auto it = img.find(img0.begin()->first);
        if (it == img.end()) continue;
        Rational f = it->second / img0.begin()->second;
        for (const auto& [idx, v] : img0) {
          Rational& t = img[idx];
          t -= f * v;
          if (t == 0) img.erase(idx);
        }
        for (const auto& [idx, v] : combo0) {
          Rational& t = combo[idx];
          t -= f * v;
          if (t == 0) combo.erase(idx);
        }
      }
      if (img.empty())
        basis_of_kernel.push_back(combo);
      else
        reduced.emplace_back(std::move(img), std::move(combo));
    }
    if (basis_of_kernel.size() != 1)
      throw std::logic_error("highest-weight multiplicity is not one");

    RatVec hwv;
    for (const auto& [c, v] : basis_of_kernel[0]) hwv[slice[c]] = v;
    // normalize the leading coefficient for a deterministic representative
    Rational lead = hwv.begin()->second;
    for (auto& [idx, v] : hwv) v /= lead;

    // lowering closure of the highest weight vector
    RatReducer span;
    std::vector<RatVec> basis;
    std::vector<RatVec> queue{hwv};
    span.insert(hwv);
    basis.push_back(hwv);
    while (!queue.empty()) {
      RatVec v = std::move(queue.back());
      queue.pop_back();
      for (int k = 1; k <= rs.rank(); ++k) {
        RatVec w = lower(k, v);
        if (w.empty()) continue;
        RatVec probe = w;
        if (span.insert(probe)) {
          basis.push_back(w);
          queue.push_back(w);
        }
      }
    }
    if (static_cast<long>(basis.size()) != irreducible_dim(rs, h))
      throw std::logic_error("kernel summand dimension mismatch");

    for (const RatVec& v : basis) {
      KernelElement el;
      el.i = i;
      el.j = j;
      el.level = lv;
      for (const auto& [t, c] : v)
        el.tensor[{Mi.labels[t / dj], Mj.labels[t % dj]}] = c;
      out.push_back(std::move(el));
    }
  }
  return out;
}

FreeMonomial free_monomial(const FreeGen& a, const FreeGen& b) {
  auto key = [](const FreeGen& g) { return std::make_tuple(g.first.size(), g.first, g.second); };
  return key(a) <= key(b) ? FreeMonomial{a, b} : FreeMonomial{b, a};
}

bool RelationSeries::is_trivial() const {
  for (const auto& [n, v] : coefficients)
    if (!v.empty()) return false;
  return true;
}

RelationSeries relation_series(const KernelElement& elem, long s, int qmax) {
  if (s < 1 || s > elem.level) throw std::invalid_argument("derivative order out of range");
  RelationSeries out;
  out.i = elem.i;
  out.j = elem.j;
  out.s = s;
  out.qmax = qmax;
  for (int n = 0; n <= qmax; ++n) {
    FreeVec& coeff = out.coefficients[n];
    for (const auto& [cols, c] : elem.tensor) {
      for (long k = s - 1; k <= n + s - 1; ++k) {
        long kp = n + s - 1 - k;
        Rational fall = falling_factorial(Rational(k), s - 1);
        if (fall == 0) continue;
        FreeMonomial mon =
            free_monomial({cols.first, static_cast<int>(k)}, {cols.second, static_cast<int>(kp)});
        Rational& acc = coeff[mon];
        acc += c * fall;
        if (acc == 0) coeff.erase(mon);
      }
    }
  }
  return out;
}

bool relation_series_vanishes(FiltrationContext& ctx, const KernelElement& elem, long s,
                              int qmax) {
  const FundamentalLift& li = ctx.fundamental_lift(elem.i);
  const FundamentalLift& lj = ctx.fundamental_lift(elem.j);
  std::vector<std::pair<State, State>> pairs;
  for (const auto& [cols, c] : elem.tensor)
    pairs.emplace_back(li.vector_for(cols.first) * c, lj.vector_for(cols.second));
  RelationReport rep = verify_relation(ctx, elem.i, elem.j, pairs, s, qmax);
  return rep.hypothesis_ok && rep.coefficients_ok;
}

}  // namespace sif
