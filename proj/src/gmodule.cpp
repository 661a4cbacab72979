#include "sif/gmodule.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sif {

int GModuleModel::index_of(const Column& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("unknown basis label");
  return static_cast<int>(it - labels.begin());
}

const SparseMat* GModuleModel::matrix(char gen, int k, int j) const {
  if (j < 0 || j >= t_depth()) return nullptr;
  switch (gen) {
    case 'e':
      return &xe[j][k - 1];
    case 'f':
      return &xf[j][k - 1];
    case 'h':
      return &xh[j][k - 1];
    default:
      throw std::invalid_argument("generator must be e, f or h");
  }
}

namespace {

Weight column_weight(const RootSystem& rs, const Column& I) {
  // sum of eps-bar_a = omega_a - omega_{a-1} over entries, omega_0 = omega_{r+1} = 0
  Weight w(rs.rank());
  for (int a : I) {
    if (a <= rs.rank()) w.c[a - 1] += 1;
    if (a - 1 >= 1) w.c[a - 2] -= 1;
  }
  return w;
}

}  // namespace

GModuleModel exterior_model(const RootSystem& rs, int i) {
  if (rs.kind() != 'A') throw std::domain_error("exterior model requires type A");
  if (i < 1 || i > rs.rank()) throw std::out_of_range("fundamental index");
  int n = rs.rank() + 1;
  GModuleModel m;
  // all i-subsets in lexicographic order
  Column cur;
  std::function<void(int)> gen = [&](int start) {
    if (static_cast<int>(cur.size()) == i) {
      m.labels.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      gen(v + 1);
      cur.pop_back();
    }
  };
  gen(1);
  for (const Column& I : m.labels) m.weights.push_back(column_weight(rs, I));
  m.highest_weight = rs.fundamental(i);

  int d = m.dim();
  m.xe.assign(1, std::vector<SparseMat>(rs.rank(), SparseMat(d)));
  m.xf.assign(1, std::vector<SparseMat>(rs.rank(), SparseMat(d)));
  m.xh.assign(1, std::vector<SparseMat>(rs.rank(), SparseMat(d)));
  for (int col = 0; col < d; ++col) {
    const Column& I = m.labels[col];
    for (int k = 1; k <= rs.rank(); ++k) {
      // e_k: k+1 -> k, f_k: k -> k+1; adjacent substitution keeps the order
      auto has = [&](int v) { return std::binary_search(I.begin(), I.end(), v); };
      if (has(k + 1) && !has(k)) {
        Column J = I;
        *std::find(J.begin(), J.end(), k + 1) = k;
        std::sort(J.begin(), J.end());
        m.xe[0][k - 1][col][m.index_of(J)] = 1;
      }
      if (has(k) && !has(k + 1)) {
        Column J = I;
        *std::find(J.begin(), J.end(), k) = k + 1;
        std::sort(J.begin(), J.end());
        m.xf[0][k - 1][col][m.index_of(J)] = 1;
      }
      Rational hval = m.weights[col].c[k - 1];
      if (hval != 0) m.xh[0][k - 1][col][col] = hval;
    }
  }
  return m;
}

GModuleModel dual_model(const GModuleModel& m) {
  GModuleModel d;
  d.labels = m.labels;
  for (const Weight& w : m.weights) d.weights.push_back(w * Rational(-1));
  d.highest_weight = m.highest_weight;  // lowest weight of the dual; kept as tag
  auto transpose_neg = [&](const std::vector<std::vector<SparseMat>>& src) {
    std::vector<std::vector<SparseMat>> out(src.size());
    for (size_t j = 0; j < src.size(); ++j) {
      out[j].assign(src[j].size(), SparseMat(m.dim()));
      for (size_t k = 0; k < src[j].size(); ++k)
        for (int col = 0; col < m.dim(); ++col)
          for (const auto& [row, c] : src[j][k][col]) out[j][k][row][col] = -c;
    }
    return out;
  };
  d.xe = transpose_neg(m.xe);
  d.xf = transpose_neg(m.xf);
  d.xh = transpose_neg(m.xh);
  return d;
}

GModuleModel jet_extension(const GModuleModel& m) {
  int d = m.dim();
  GModuleModel j;
  j.highest_weight = m.highest_weight;
  for (int copy = 0; copy < 2; ++copy)
    for (int b = 0; b < d; ++b) {
      Column lab = m.labels[b];
      lab.push_back(copy == 0 ? 0 : -1);  // tag the t-layer
      j.labels.push_back(lab);
      j.weights.push_back(m.weights[b]);
    }
  auto extend = [&](const std::vector<std::vector<SparseMat>>& src) {
    // power 0: block-diagonal; power 1: maps layer 0 to layer 1
    std::vector<std::vector<SparseMat>> out(2);
    size_t nk = src[0].size();
    out[0].assign(nk, SparseMat(2 * d));
    out[1].assign(nk, SparseMat(2 * d));
    for (size_t k = 0; k < nk; ++k)
      for (int col = 0; col < d; ++col)
        for (const auto& [row, c] : src[0][k][col]) {
          out[0][k][col][row] = c;
          out[0][k][col + d][row + d] = c;
          out[1][k][col][row + d] = c;
        }
    return out;
  };
  j.xe = extend(m.xe);
  j.xf = extend(m.xf);
  j.xh = extend(m.xh);
  return j;
}

GradedVec Globalized::act(char gen, int k, long m, const GradedVec& v) const {
  GradedVec out;
  for (const auto& [key, coeff] : v) {
    auto [idx, deg] = key;
    long k0 = direction > 0 ? deg : -static_cast<long>(deg);
    for (int j = 0; j < base->t_depth(); ++j) {
      const SparseMat* mat = base->matrix(gen, k, j);
      if (!mat) continue;
      auto it = (*mat)[idx];
      long newexp = m + k0 - j;
      if (direction > 0 && (newexp < 0 || newexp > qmax)) continue;
      if (direction < 0 && (newexp > 0 || -newexp > qmax)) continue;
      Rational b = binomial(Rational(m), j);
      if (b == 0) continue;
      for (const auto& [row, c] : it) {
        Rational add = coeff * b * c;
        if (add == 0) continue;
        auto kk = std::make_pair(row, static_cast<int>(direction > 0 ? newexp : -newexp));
        out[kk] += add;
        if (out[kk] == 0) out.erase(kk);
      }
    }
  }
  return out;
}

long Globalized::graded_dim(int q) const {
  return (q >= 0 && q <= qmax) ? base->dim() : 0;
}

Globalized globalize(const GModuleModel& base, int direction, int qmax) {
  Globalized g;
  g.base = &base;
  g.direction = direction;
  g.qmax = qmax;
  return g;
}

Rational duality_pairing(const GradedVec& a, const GradedVec& b) {
  Rational s = 0;
  for (const auto& [key, ca] : a) {
    auto it = b.find(key);
    if (it != b.end()) s += ca * it->second;
  }
  return s;
}

std::string column_str(const Column& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

}  // namespace sif
