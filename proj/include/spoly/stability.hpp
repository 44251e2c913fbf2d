#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "spoly/domains.hpp"
#include "spoly/polynomial.hpp"
#include "spoly/roots.hpp"

namespace spoly {

// Honest output contract of every stability test. Certified verdicts carry
// the closure convention in `detail`; Falsified verdicts carry a witness
// verified to lie in the domain with |f(witness)| <= kEpsZero * scale(f);
// Unknown reports the search effort.
struct StabilityVerdict {
  enum class Kind { Certified, Falsified, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<Cplx> witness;
  double abs_at_witness = 0.0;
  long trials = 0;
  double min_abs = std::numeric_limits<double>::infinity();
  std::vector<Cplx> argmin;
  std::string detail;

  bool certified() const { return kind == Kind::Certified; }
  bool falsified() const { return kind == Kind::Falsified; }
  bool unknown() const { return kind == Kind::Unknown; }

  static StabilityVerdict certify(std::string why);
  static StabilityVerdict falsification(std::vector<Cplx> w, double absval,
                                        std::string why, long trials = 0);
};

struct FalsifyOptions {
  long budget = 10000;
  std::uint64_t seed = 0;
  bool force_serial = false;  // run the serial reference path
};

// Seeded Monte-Carlo zero search inside omega; can refute stability, never
// certify it. Alternates random line restrictions (half-plane products)
// with per-variable univariate slicing, both resolved by the root finder
// and Newton-polished in extended precision. Deterministic per
// (seed, budget) and independent of thread count.
StabilityVerdict falsify(const Polynomial& f, const DomainProduct& omega,
                         const FalsifyOptions& opt = {});

// Plain sequential loop kept as the reference implementation the parallel
// kernel is tested against.
StabilityVerdict falsify_serial(const Polynomial& f, const DomainProduct& omega,
                                const FalsifyOptions& opt = {});

// Exact univariate certification by root location.
StabilityVerdict stable_univariate(const Polynomial& f,
                                   const CircularDomain& domain);

enum class BivariateCriterion {
  MaxPrinciple,    // complex multi-affine a+bz+cw+dzw vs the closed upper half-plane
  RealMultiAffine, // real multi-affine bivariate: bc >= ad
  RealQuadratic,   // real a+2bz+cz^2: b^2 >= ac
};

struct CriterionReport {
  StabilityVerdict verdict;
  // Diagnostic values: coefficients, Im(b/d), Im(c/d), quadratic minima, ...
  std::vector<std::pair<std::string, double>> diagnostics;
};

CriterionReport bivariate_criteria(const Polynomial& f, BivariateCriterion which,
                                   const FalsifyOptions& opt = {});

// Block-symmetric multi-affine certification through the diagonal: with a
// single block the diagonal is univariate and the verdict is exact both
// ways; a diagonal root xi in the domain lifts to the exact witness
// (xi,...,xi). For several blocks only refutation is exact and the
// no-witness case reports Unknown. Non-convex domains require full block
// degrees. block_sizes empty means one block (fully symmetric).
StabilityVerdict certify_symmetric_multiaffine(
    const Polynomial& f, const CircularDomain& domain,
    const std::vector<int>& block_sizes = {},
    const FalsifyOptions& opt = {});

// Stability of h = f + i*g (f, g real) tested two ways: directly, and via
// the (n+1)-variable lift f + z_{n+1} g. The routes must agree.
struct KreinReport {
  StabilityVerdict direct;
  StabilityVerdict lifted;
  bool agree = false;
};
KreinReport krein_real_stable(const Polynomial& f, const Polynomial& g,
                              const FalsifyOptions& opt = {});

// Homogeneous f: true when some rotation e^{-i alpha} f has all positive
// coefficients (alpha taken from the largest coefficient).
struct PhaseReport {
  bool same_phase = false;
  double alpha = 0.0;
};
PhaseReport same_phase_check(const Polynomial& f);

// Real-coefficient f: restrict to seeded real base + positive direction
// lines and demand real-rootedness of each restriction (tolerance 1e-8 on
// imaginary parts). A complex root pair yields an exact witness.
StabilityVerdict real_stable_consistent(const Polynomial& f, int restrictions,
                                        std::uint64_t seed);

// Shape-dispatching entry point: exact criteria where available
// (univariate, bivariate multi-affine against upper half-planes, symmetric
// multi-affine over one repeated domain), the falsifier otherwise.
StabilityVerdict decide_stability(const Polynomial& f, const DomainProduct& omega,
                                  const FalsifyOptions& opt = {});

}  // namespace spoly
