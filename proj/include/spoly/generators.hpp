#pragma once

#include "spoly/domains.hpp"
#include "spoly/polynomial.hpp"
#include "spoly/rng.hpp"

namespace spoly {

// Seeded families of polynomials that are stable by construction; every
// preservation test draws its inputs here. Products of affine forms
// a + sum b_j z_j with b_j >= 0 and Im(a) >= 0 are upper-half-plane stable;
// disk and exterior families are Moebius transports; polarizations of
// real-rooted univariates give the symmetric multi-affine family.

// prod_k (a_k + sum_j b_kj z_j), b_kj >= 0, Im(a_k) >= margin.
Polynomial random_upper_stable(Rng& rng, int nvars, int factors,
                               double margin = 0.0);

// Same with real a_k: real stable.
Polynomial random_real_stable(Rng& rng, int nvars, int factors);

// Re(a_k) >= margin instead: weakly Hurwitz stable.
Polynomial random_hurwitz_stable(Rng& rng, int nvars, int factors,
                                 double margin = 0.1);

// Affine factors over a random partition of the variables: multi-affine.
Polynomial random_multiaffine_upper_stable(Rng& rng, int nvars,
                                           double margin = 0.0);
Polynomial random_multiaffine_hurwitz_stable(Rng& rng, int nvars);

// Upper-stable with degree capped by kappa, transported onto the open unit
// disk (or its exterior; the exterior family has full degree kappa).
Polynomial random_disk_stable(Rng& rng, const MultiIndex& kappa);
Polynomial random_multiaffine_disk_stable(Rng& rng, int nvars);
Polynomial random_multiaffine_exterior_stable(Rng& rng, int nvars);

// prod (z - r_k) with real roots.
Polynomial random_real_rooted(Rng& rng, int degree);
// Real-rooted with all roots <= -margin (nonpositive).
Polynomial random_real_rooted_nonpositive(Rng& rng, int degree,
                                          double margin = 0.05);

// C * prod_i f_i(z_i w_i) in 2n variables with f_i real-rooted at
// nonnegative roots: the stable diagonal family.
Polynomial random_stable_diagonal(Rng& rng, int n, int maxdeg);

}  // namespace spoly
