#pragma once

#include "sif/qcharacter.hpp"

namespace sif {

// Character of the irreducible highest-weight module V_lambda, computed by
// weight-string saturation and the Freudenthal multiplicity recursion.
WeightMult irreducible_character(const RootSystem& rs, const Weight& lambda);
long irreducible_dim(const RootSystem& rs, const Weight& lambda);
// Weyl dimension formula; independent cross-check of the character sum.
long weyl_dim_formula(const RootSystem& rs, const Weight& lambda);

long fundamental_weyl_dim(const RootSystem& rs, int i);
// dim W_lambda = prod_i (dim W_{omega_i})^{lambda_i}.
long local_weyl_dim(const RootSystem& rs, const Weight& lambda);

// V_{omega_i} (x) V_{omega_j} = (+)_{l=0}^{min(j, r+1-i)} V_{omega_{j-l} + omega_{i+l}}
// in type A, with omega_0 = omega_{r+1} = 0. Requires 1 <= j <= i <= r.
std::vector<Weight> lr_two_fundamentals(const RootSystem& rs, int i, int j);

// Graded character of the local Weyl module W_lambda. Supported: lambda = 0,
// type-A fundamental weights and sums of two fundamentals, and sl2 m*omega
// (Gaussian-binomial grading).
QCharacter ch_local_weyl(const RootSystem& rs, const Weight& lambda, int qmax);

// ch of the global Weyl module: ch W_lambda * prod_i 1/(q)_{lambda_i}.
QCharacter ch_global(const RootSystem& rs, const Weight& lambda, int qmax);

}  // namespace sif
