#pragma once

#include <vector>

#include "spoly/polynomial.hpp"

namespace spoly {

// All complex roots (with multiplicity) of the dense univariate polynomial
// c[0] + c[1] z + ... + c[d] z^d. Leading/trailing near-zero coefficients are
// stripped at tolerance 1e-14 relative to the largest coefficient.
//
// Deterministic: Aberth-Ehrlich simultaneous iteration from a fixed initial
// circle, capped at 200 sweeps, with a companion-matrix fallback for
// stragglers at degree <= 30, then Newton polishing. A constant polynomial
// yields an empty list; the zero polynomial throws std::domain_error.
std::vector<Cplx> univariate_roots(std::vector<Cplx> coeffs);

std::vector<Cplx> univariate_roots(const Polynomial& f);  // requires nvars==1

// Max |f(root)| residual scaled the way the root contract states it.
double root_residual(std::span<const Cplx> coeffs, Cplx root);

// True when every root has |imag| <= tol * max(1, |root|).
bool all_roots_real(std::span<const Cplx> roots, double tol);

}  // namespace spoly
