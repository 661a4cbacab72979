#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sif/filtration.hpp"
#include "sif/gmodule.hpp"
#include "sif/qcharacter.hpp"

namespace sif {

// True iff (I, J) is an admissible ordered pair for the straightening walk:
// l(I) > l(J), or equal lengths with I < J at the topmost differing entry.
bool columns_admissible(const Column& I, const Column& J);

// The straightening set P(I, J), built top-down by the column-switch walk.
// Throws std::invalid_argument unless columns_admissible(I, J).
std::vector<int> p_set(const Column& I, const Column& J);

// k(I, J) = |P(I, J)| - l(I). Counts the defect of the two-column tableau
// with columns I, J from being semistandard: k = 0 iff i_a <= j_a for all a.
// Defined for every ordered pair with l(I) >= l(J); on an equal-length pair
// in the non-admissible order it exceeds the swapped value by one (the value
// the character sum over ordered pairs requires). Throws if l(I) < l(J).
int k_statistic(const Column& I, const Column& J);

// Two-column tableau (C, D) of shape omega_i + omega_j with k(C, D) = l and
// content weight omega_{i+l} + omega_{j-l}: entries 1..j-l twice, entries
// j-l+1..i+l once. Requires i >= j >= 1, 0 <= l <= min(j, r+1-i).
std::pair<Column, Column> two_column_tableau(int r, int i, int j, int l);

enum class CharRoute { Tableaux, LR };

// q-character of W_{omega_i + omega_j} in type A, 1 <= j <= i <= r, by two
// independent routes: the column-pair sum weighted by q^{k(I,J)}, or the
// Littlewood-Richardson layers sum_l q^l ch V_{omega_{j-l} + omega_{i+l}}.
QCharacter ch_w_two_fund(const RootSystem& rs, int i, int j, CharRoute route);

// Element of the tensor square of fundamental modules, in Pluecker
// coordinates: map (I, J) -> coefficient of X_I (x) X_J.
using ColumnTensor = std::map<std::pair<Column, Column>, Rational>;

// One basis vector of an irreducible summand of the quadratic kernel; level
// is the layer l' of the summand V_{omega_{j-l'} + omega_{i+l'}}.
struct KernelElement {
  int i = 0;
  int j = 0;
  int level = 0;
  ColumnTensor tensor;
};

// Basis of the sum over l' >= l of the summands V_{omega_{j-l'}+omega_{i+l'}}
// inside V_{omega_i} (x) V_{omega_j} (type A, Pluecker coordinates), computed
// by highest-weight extraction and lowering-operator closure in the
// exterior-power models. Requires 1 <= l <= min(j, r+1-i).
std::vector<KernelElement> quadratic_kernel(const RootSystem& rs, int i, int j, int l);

// Generator X_I t^{-k} of the free commutative ring, and a degree-2 monomial
// with the two generators in canonical (sorted) order.
using FreeGen = std::pair<Column, int>;
using FreeMonomial = std::pair<FreeGen, FreeGen>;
using FreeVec = std::map<FreeMonomial, Rational>;

FreeMonomial free_monomial(const FreeGen& a, const FreeGen& b);

// Coefficients of the series sum_m (d/dz)^{s-1} A^m(z) B^m(z) as elements of
// the free commutative ring on the X_I t^{-k}, per z-degree up to qmax.
struct RelationSeries {
  int i = 0;
  int j = 0;
  long s = 1;
  int qmax = 0;
  std::map<int, FreeVec> coefficients;  // z-degree -> free-ring element

  bool is_trivial() const;  // every stored coefficient cancels to zero
};

// Requires 1 <= s <= elem.level.
RelationSeries relation_series(const KernelElement& elem, long s, int qmax);

// Checks via the filtration reduction that every coefficient of the series
// vanishes in the coordinate ring (z-degrees 0..qmax).
bool relation_series_vanishes(FiltrationContext& ctx, const KernelElement& elem, long s,
                              int qmax);

}  // namespace sif
