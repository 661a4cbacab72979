#pragma once

#include "sif/state.hpp"

namespace sif {

State vacuum(const RootSystem& rs);
State lattice_state(const RootSystem& rs, const Weight& mu);  // 1 (x) e^mu

// Heisenberg mode h t^k: creation (k < 0), scalar (h,mu) (k = 0),
// annihilation derivation (k > 0).
State heis_act(const RootSystem& rs, const Weight& h, long k, const State& v);

// The derivation T: T(h t^-n) = n h t^-n-1, T(e^mu) = mu t^-1 e^mu.
State translation(const RootSystem& rs, const State& v);

// Mode (1 (x) e^lam)_(n) of the exponential field; off-parity terms of v are
// annihilated. n may be rational with denominator dividing gamma_exponent.
State exp_mode(const RootSystem& rs, const Weight& lam, const Rational& n, const State& v);

// General mode A_(n) for arbitrary A, by recursive normal-ordered peeling of
// the creators of A.
State vertex_mode(const RootSystem& rs, const State& A, const Rational& n, const State& v);

// Currents of the affine Lie algebra realized on the lattice VOA:
// e_alpha t^m, f_alpha t^m (alpha a root, (alpha,alpha) = 2), h t^m.
State affine_e(const RootSystem& rs, const Weight& alpha, long m, const State& v);
State affine_f(const RootSystem& rs, const Weight& alpha, long m, const State& v);
State affine_h(const RootSystem& rs, const Weight& h, long m, const State& v);

State conformal_vector(const RootSystem& rs);
// omega_(1); eigenvalue (mu,mu)/2 + sum of creator degrees on monomials.
State conformal_weight_op(const RootSystem& rs, const State& v);

// Both sides of the graded Borcherds identity at indices (n, m, k); true iff
// they agree exactly. Throws on inadmissible parity.
bool check_borcherds(const RootSystem& rs, const State& a, const State& b, const State& c,
                     const Rational& n, const Rational& m, const Rational& k);

// Commutator formula [a_(m), b_(k)]c = sum_j binom(m,j) (a_(j)b)_(m+k-j) c for
// parity-0 a and integer m; returns (LHS, RHS).
std::pair<State, State> commutator_formula(const RootSystem& rs, const State& a, long m,
                                           const State& b, const Rational& k, const State& c);

// Verifies i_{z,w}(z-w)^n Y(A,z)Y(B,w) = K i_{w,z}(z-w)^n Y(B,w)Y(A,z)
// coefficientwise on each pair of lattice sectors of A and B, with K the
// commutation factor braiding(.,.) of the sectors; applied to every basis
// state of conformal weight <= cutoff and compared on output components of
// conformal weight <= cutoff.
bool check_locality(const RootSystem& rs, const State& A, const State& B, const Rational& n,
                    const Rational& cutoff);

// Smallest admissible n with A_(n+j)B = 0 for all integers j >= 0.
Rational exact_locality_order(const RootSystem& rs, const State& A, const State& B);

// All Fock monomials of conformal weight <= cwmax.
std::vector<FockMonomial> enumerate_basis(const RootSystem& rs, const Rational& cwmax);

}  // namespace sif
