#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sif/gmodule.hpp"
#include "sif/voa.hpp"

namespace sif {

using SparseVec = std::map<FockMonomial, Cyc>;
// Graded component label: (h-weight, conformal weight).
using ComponentKey = std::pair<Weight, Rational>;

SparseVec to_sparse(const State& s);
State from_sparse(const SparseVec& v);

// Row space in reduced echelon form over the Fock monomial basis. Pivot of a
// row is its smallest monomial; rows are fully reduced against each other, so
// the remainder of reduce() is the canonical representative mod the span.
class SpanReducer {
 public:
  // Eliminates all pivot monomials from v in place; true iff v ends up zero.
  bool reduce(SparseVec& v) const;
  // Reduces, normalizes and inserts; true iff v was independent.
  bool insert(SparseVec v);
  bool contains(const State& s) const;
  long rank() const { return static_cast<long>(rows_.size()); }
  const std::map<FockMonomial, SparseVec>& rows() const { return rows_; }

 private:
  std::map<FockMonomial, SparseVec> rows_;  // pivot -> row, pivot coeff 1
};

// Spanning data for the filtration space G_lambda up to a conformal-weight
// cutoff, split into graded components.
struct FiltrationSpan {
  Weight lambda;
  Rational cutoff;
  std::map<ComponentKey, SpanReducer> comps;

  bool insert_state(const RootSystem& rs, const State& v, long max_dim);
  bool contains(const RootSystem& rs, const State& v) const;
  long rank() const;
  long rank_at_cw(const Rational& cw) const;
  std::vector<State> basis_states() const;
};

// Spanning states of the unique lift of the dual fundamental Weyl module
// attached to node i: the g-orbit span of e^{omega_i}. In type A the basis is
// labeled by Pluecker columns matched to the exterior-power model; other types
// carry no labels (experimental).
struct FundamentalLift {
  int node = 0;
  std::vector<Column> labels;
  std::vector<State> vectors;
  const State& vector_for(const Column& label) const;
};

// Memoizing home for lifts and filtration spans of one root system; spans are
// built deterministically, so reduced coordinates against them are canonical.
class FiltrationContext {
 public:
  explicit FiltrationContext(const RootSystem& rs, long max_component_dim = 0);

  const RootSystem& rs() const { return rs_; }
  long max_component_dim() const { return max_dim_; }

  const FundamentalLift& fundamental_lift(int i);
  // G_lambda by the inductive definition: all G_mu for dominant mu < lambda
  // plus B_(k) G_{lambda - omega_i} over lift vectors B, with k enumerated on
  // the parity grid so the output conformal weight lands in [0, cutoff].
  const FiltrationSpan& g_span(const Weight& lambda, const Rational& cutoff);
  // Union of G_mu over dominant mu < lambda; the reduction modulus for
  // RingElement coordinates.
  const FiltrationSpan& g_span_below(const Weight& lambda, const Rational& cutoff);

  // dim of (G_lambda / G_{<lambda}) at conformal weight (lambda,lambda)/2 + d
  // for d = 0..qmax.
  std::vector<long> quotient_dims(const Weight& lambda, int qmax);

 private:
  const RootSystem& rs_;
  long max_dim_;
  std::map<int, FundamentalLift> lifts_;
  std::map<std::pair<Weight, Rational>, FiltrationSpan> spans_;
  std::map<std::pair<Weight, Rational>, FiltrationSpan> below_;
};

// Reads LATTICE_VOA_MAX_DIM (default 5000).
long max_dim_from_env();

// True iff the closure of v under all currents x t^m, m >= 0, has every
// h-weight <= lambda; the membership criterion for the dual Demazure-type
// space attached to lambda.
bool in_fdag(const RootSystem& rs, const State& v, const Weight& lambda, long max_dim = 0);

// Coefficient of z_1^{m_1}..z_s^{m_s} in
//   prod_{a<b} i_{z_a,z_b}(z_a - z_b)^{m_{a,b}} Y(A^1,z_1)..Y(A^s,z_s)|0>,
// m_{a,b} = -(omega_{node_a}, omega_{node_b}). Factors are (node, lift state).
State m_coefficient(const RootSystem& rs, const std::vector<std::pair<int, State>>& factors,
                    const std::vector<long>& m);

// A lift state placed in t-degree -degree.
struct PhiFactor {
  int node;
  State vec;
  long degree;
};

// Class of a product of dual-Weyl elements in the graded component of the
// coordinate ring: m_coefficient reduced modulo span(G_{<lambda}).
struct RingElement {
  Weight lambda;
  Rational cutoff;
  State rep;
  std::map<ComponentKey, SparseVec> reduced;
  size_t fingerprint = 0;

  bool is_zero() const;
  bool operator==(const RingElement& o) const;
};

RingElement phi_product(FiltrationContext& ctx, const std::vector<PhiFactor>& factors);

// (A_(m-s) B)_(-1-r)|0> against the z^r coefficient of the derivative product
// formula, compared modulo G_{<lambda}; also validates the underlying
// binomial identity instances. s >= 1, r >= 0.
bool vertex_mult_check(FiltrationContext& ctx, int i1, const State& A, int i2, const State& B,
                       long s, long r);

struct RelationReport {
  bool hypothesis_ok = false;    // sum A^l_(m-s) B^l lies in G_{<lambda}
  bool coefficients_ok = false;  // every z-coefficient reduces to 0
};

// Checks that sum_l (d/dz)^{s-1} A^l(z) * B^l(z) vanishes coefficientwise in
// the coordinate ring, for z-degrees r = 0..qmax.
RelationReport verify_relation(FiltrationContext& ctx, int i1, int i2,
                               const std::vector<std::pair<State, State>>& pairs, long s,
                               int qmax);

}  // namespace sif
