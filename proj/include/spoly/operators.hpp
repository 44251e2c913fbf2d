#pragma once

#include <functional>
#include <map>

#include "spoly/polynomial.hpp"
#include "spoly/rng.hpp"

namespace spoly {

// Finite action table of a linear operator on polynomials of degree <= kappa:
// image of every monomial z^alpha, alpha <= kappa. Images share one variable
// count (usually the domain's).
struct MonomialOperator {
  MultiIndex kappa;
  int image_nvars = 0;
  std::map<MultiIndex, Polynomial, GradedLexLess> table;

  Polynomial apply(const Polynomial& f) const;

  static MonomialOperator identity(const MultiIndex& kappa);
  static MonomialOperator from_rule(
      const MultiIndex& kappa, int image_nvars,
      const std::function<Polynomial(const MultiIndex&)>& rule);
};

// T(z^alpha) = values(alpha) * z^alpha.
struct DiagonalSequence {
  MultiIndex kappa;
  std::map<MultiIndex, Cplx, GradedLexLess> values;

  Cplx at(const MultiIndex& alpha) const;
  bool complete() const;  // defined for every alpha <= kappa
  MonomialOperator as_operator() const;

  static DiagonalSequence from_univariate(int kappa,
                                          std::span<const double> lambda);
};

// --- symmetrization ---------------------------------------------------
Polynomial symmetrize(const Polynomial& f);  // average over all permutations
// Average of f over the cyclic group generated by sigma.
Polynomial transposition_average(const Polynomial& f, std::span<const int> sigma);
// p*f + (1-p)*(swap of variables i and j), 0 <= p <= 1.
Polynomial partial_swap(const Polynomial& f, double p, int i, int j);

struct AveragingTrace {
  Polynomial result;
  std::vector<double> symmetry_indices;  // steps+1 values, start included
};
// Repeated averaging over seeded random transpositions; the symmetry index
// trace is nonincreasing and the iterates converge to symmetrize(f).
AveragingTrace iterate_transposition_averages(const Polynomial& f, int steps,
                                              std::uint64_t seed);

// --- degree and support surgery ---------------------------------------
// Unique block-symmetric multi-affine lift on |kappa| variables:
// z_i^m -> e_m(block i) / binom(kappa_i, m).
Polynomial polarize(const Polynomial& g, const MultiIndex& kappa);
// Diagonal restriction merging each block back to one variable (inverse).
Polynomial block_diagonal(const Polynomial& f, const MultiIndex& kappa);

Polynomial multiaffine_part(const Polynomial& f);
// Exponents folded mod 2 on the selected variables (all when empty).
Polynomial fold_mod2(const Polynomial& f, std::span<const int> vars = {});
// Keep the (0,0) and (1,1) blocks in variables i, j, attaching the latter
// to z_i; the result does not involve z_j.
Polynomial asano_contract(const Polynomial& f, int i, int j);

// --- products and convolutions ----------------------------------------
// Coefficient-wise product normalized by binom(kappa, alpha); plain
// coefficient product in the multi-affine case kappa = (1,...,1).
Polynomial schur_hadamard(const Polynomial& f, const Polynomial& g,
                          const MultiIndex& kappa);
// Symmetric-difference convolution of multi-affine polynomials.
Polynomial convolution(const Polynomial& f, const Polynomial& g);

// Weyl-algebra product on 2n variables (z-block then w-block), deformed by
// t >= 0 componentwise: sum_alpha ((-1)^alpha t^alpha / alpha!)
// d^alpha f / dz^alpha * d^alpha g / dw^alpha. t = 0 gives the plain product.
Polynomial weyl_product(const Polynomial& f, const Polynomial& g,
                        std::span<const double> t);
// Univariate diagonal composition sum_k (t^k / k!) f^(k) g^(k); preserves
// real-rootedness for t < 0.
Polynomial debruijn_compose(const Polynomial& f, const Polynomial& g, double t);

enum class ComposeVariant { HalfPlaneTheta, UpperHalfPlane, Disk };

// Derivative-sum composition of f(u,v) and g(z,w); the result lives in 4n
// variables ordered (u, v, z, w). Requires deg_u(f) <= kappa and
// deg_z(g) <= kappa.
Polynomial master_compose(const Polynomial& f, const Polynomial& g,
                          const MultiIndex& kappa, ComposeVariant variant);

// Coefficient-transform composition of f(z,w) = sum binom(kappa,a) P_a(w) z^a
// and g(z,w) = sum binom(kappa,a) Q_a(z) w^a, in 2n variables. The
// derivative route computes the same polynomial from partial derivatives at
// zero; both are exposed so their agreement is testable.
Polynomial coefficient_compose(const Polynomial& f, const Polynomial& g,
                               const MultiIndex& kappa, ComposeVariant variant);
Polynomial coefficient_compose_derivative_route(const Polynomial& f,
                                                const Polynomial& g,
                                                const MultiIndex& kappa,
                                                ComposeVariant variant);

// --- differential operators --------------------------------------------
// sum Q_alpha * d^alpha f over the spec table.
Polynomial apply_diff_operator(
    const std::map<MultiIndex, Polynomial, GradedLexLess>& spec,
    const Polynomial& f);

enum class LiebSokalVariant { SumDerivative, Collapse, AlternatingCollapse };

// Degree-d two-variable derivative operators acting on z_1, z_2:
//   SumDerivative:      (1/d!) sum_k d^d f / dz_1^k dz_2^{d-k}
//   Collapse:           (1/d!) sum_k k! (d/dz_2)^{d-k} Q_k
//   AlternatingCollapse: (1/d!) sum_k (-1)^k (d-k)! (d/dz_2)^k Q_k
// where f = sum_k z_1^k Q_k(z_2,...). Requires deg_{z1}, deg_{z2} <= d.
Polynomial hard_lieb_sokal(const Polynomial& f, LiebSokalVariant variant, int d);

// sum_i P_i(d/dz) Q_i(z).
Polynomial lieb_sokal_substitute(std::span<const Polynomial> ps,
                                 std::span<const Polynomial> qs);

// Coefficient-wise real part: (f(z) + conj(f(conj z)))/2.
Polynomial real_coefficient_part(const Polynomial& f);

}  // namespace spoly
