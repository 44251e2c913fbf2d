#pragma once

#include "spoly/operators.hpp"
#include "spoly/stability.hpp"

namespace spoly {

// Factorization of a diagonally-supported 2n-variable polynomial
// f = sum a(alpha) z^alpha w^alpha into C * f_1(z_1 w_1) ... f_n(z_n w_n),
// the shape forced on stable diagonal polynomials. Factors are univariate
// in t = z_i w_i, normalized monic-up-to-sign with the residue absorbed
// into C.
struct DiagonalFactorization {
  bool ok = false;
  std::string reason;              // when !ok: which relation failed
  Cplx constant = 0.0;
  std::vector<Polynomial> factors; // univariate in t
  std::vector<std::vector<Cplx>> root_sets;
  double max_relation_residual = 0.0;  // log-multiplicativity residual
  double reconstruction_residual = 0.0;
  bool roots_all_real = false;
  bool roots_all_nonnegative = false;  // the stability audit
};

// Requires the support of f to consist of (alpha, alpha) pairs. Checks the
// support box for unique extrema and interior zeros, verifies the cross-
// coordinate multiplicativity relation
//   lam(g) lam(g+e_i+e_j) = lam(g+e_i) lam(g+e_j)   (i != j)
// at 1e-9 relative, rebuilds the factors from axis slices, and audits their
// roots for realness and nonnegativity.
DiagonalFactorization factor_diagonal_stable(const Polynomial& f);

struct MultiplierReport {
  bool is_multiplier = false;
  // '+': nonnegative sequence (the symbol with alternating w-signs worked);
  // '-': alternating sequence; 0: rejected.
  char sign_branch = 0;
  DiagonalFactorization plus_branch;
  DiagonalFactorization minus_branch;
  // Per-coordinate test polynomials sum_k binom(kappa_i,k) u_i(k) z^k whose
  // real nonpositive-rootedness characterizes the accepted branch.
  std::vector<Polynomial> coordinate_polys;
  std::string note;
};

// Bounded-degree multiplier classification of a real diagonal sequence:
// accepted exactly when one of the two associated diagonal forms factors
// with real nonnegative roots.
MultiplierReport is_kappa_multiplier(const DiagonalSequence& lambda,
                                     const MultiIndex& kappa);

// Complex diagonal sequences preserving right-half-plane stability: a
// constant complex multiple of a nonnegative multiplier sequence.
struct HurwitzMultiplierReport {
  bool preserves = false;
  Cplx phase = 1.0;  // removed constant multiple
  MultiplierReport base;
  std::string note;
};
HurwitzMultiplierReport hurwitz_multiplier(const DiagonalSequence& lambda,
                                           const MultiIndex& kappa);

// Witness search backing a rejection: a real-stable input whose image under
// the diagonal operator fails the line-restriction test. Empty optional
// when no witness surfaced within the budget.
std::optional<Polynomial> multiplier_rejection_witness(
    const DiagonalSequence& lambda, const MultiIndex& kappa, int attempts,
    std::uint64_t seed);

// sum_k binom(kappa, k) u(k) z^k: the univariate polynomial whose real
// nonpositive-rootedness characterizes one-coordinate nonnegative
// multiplier sequences.
Polynomial coordinate_test_polynomial(int kappa, std::span<const double> u);

// Audit of a single coordinate sequence for the right-half-plane setting:
// nonnegative values and a real nonpositive-rooted test polynomial.
struct CoordinateAudit {
  bool pass = false;
  Polynomial test_poly;
  std::vector<Cplx> roots;
  std::string reason;
};
CoordinateAudit audit_coordinate_sequence(int kappa, std::span<const double> u);

}  // namespace spoly
