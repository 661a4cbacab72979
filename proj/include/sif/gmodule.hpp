#pragma once

#include <map>
#include <vector>

#include "sif/root_system.hpp"

namespace sif {

using Column = std::vector<int>;  // strictly increasing entries

// Sparse matrix, stored by column: mat[col] maps row -> coefficient.
using SparseMat = std::vector<std::map<int, Rational>>;

// Finite-dimensional g[t]-module with explicit basis and Chevalley action
// matrices per t-power. Power j >= xe.size() acts by zero (nilpotent
// t-action); evaluation modules have depth 1.
struct GModuleModel {
  std::vector<Column> labels;
  std::vector<Weight> weights;
  Weight highest_weight;
  std::vector<std::vector<SparseMat>> xe, xf, xh;  // [t-power j][node k-1]

  int dim() const { return static_cast<int>(labels.size()); }
  int t_depth() const { return static_cast<int>(xe.size()); }
  int index_of(const Column& label) const;
  // Chevalley generator gen in {'e','f','h'} at node k (1-based), power j.
  const SparseMat* matrix(char gen, int k, int j) const;
};

// Exterior-power model of the type-A fundamental module V_{omega_i}: basis
// the i-subsets of {1..r+1} (Pluecker labels), Chevalley action by index
// substitution.
GModuleModel exterior_model(const RootSystem& rs, int i);
GModuleModel dual_model(const GModuleModel& m);
// V (x) C[t]/t^2 with x t acting as x shifted one step; exercises nonzero
// t-powers in the globalized action.
GModuleModel jet_extension(const GModuleModel& m);

// Element of U[t] or U[t^-1]: map (basis index, |t-degree|) -> coefficient.
using GradedVec = std::map<std::pair<int, int>, Rational>;

// Globalization per the binomial transfer formula
// x t^m (u (x) t^k) = sum_j binom(m,j) (x t^j u) (x) t^{m+k-j}, with t-degrees
// clamped to [0, qmax] (direction +1) or [-qmax, 0] (direction -1, quotient).
struct Globalized {
  const GModuleModel* base = nullptr;
  int direction = 1;  // +1: U[t], -1: U[t^-1]
  int qmax = 0;

  GradedVec act(char gen, int k, long m, const GradedVec& v) const;
  long graded_dim(int q) const;  // = dim of base for every 0 <= q <= qmax
};

Globalized globalize(const GModuleModel& base, int direction, int qmax);

// Pairing (u_a (x) t^k, u*_b (x) t^-l) = delta_{ab} delta_{kl} between U[t]
// and (U*)[t^-1].
Rational duality_pairing(const GradedVec& a, const GradedVec& b);

std::string column_str(const Column& c);

}  // namespace sif
