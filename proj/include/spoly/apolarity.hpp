#pragma once

#include "spoly/domains.hpp"
#include "spoly/polynomial.hpp"

namespace spoly {

// Apolar pairing {f,g}_kappa = sum_{a <= kappa} (-1)^{|a|} f^(a)(0) g^(kappa-a)(0).
// The alternating per-index sign is the convention consistent with the
// univariate pairing; `constant_sign` switches to a single global sign
// (-1)^{|kappa|} for auditing the alternative reading. Nonvanishing is
// unaffected by the choice. Requires deg f, deg g <= kappa.
Cplx apolar_pairing(const Polynomial& f, const Polynomial& g,
                    const MultiIndex& kappa, bool constant_sign = false);

// sum (-1)^{|a|} f^(a)(z) g^(kappa-a)(z): a constant function of z equal to
// the pairing; exposed so constancy is testable.
Cplx pairing_field(const Polynomial& f, const Polynomial& g,
                   const MultiIndex& kappa, std::span<const Cplx> z);

// |{f,g}_kappa - {F,G}_kappa| where F, G are the degree-compensated Moebius
// substitutions of f, g.
double moebius_invariance_residual(const Polynomial& f, const Polynomial& g,
                                   const MultiIndex& kappa,
                                   std::span<const MoebiusMap> maps);

enum class GraceVariant { DiskExterior, HalfPlane, Univariate };

// Grace-type nonvanishing check with an explicit hypothesis audit. Failed
// hypotheses are report content, never silent assumptions, so the classical
// counterexamples run as regression tests.
struct GraceReport {
  Cplx pairing = 0.0;
  double scale = 0.0;             // scale(f) * scale(g)
  bool hypotheses_ok = false;
  std::vector<std::string> audit; // failed hypotheses, empty when ok
  bool pass = false;              // hypotheses_ok && |pairing| > 1e-9 * scale
};

// DiskExterior: every domain an open disk or exterior; f stable on the
//   product with full degree at exterior coordinates, g stable on the
//   complement product with full degree at disk coordinates (degrees are
//   audited; stability of the inputs is the caller's contract).
// HalfPlane: domains[0], domains[1] are open half-planes with intersecting
//   interiors; audited support condition: kappa <= alpha + beta for some
//   alpha in supp(f), beta in supp(g).
// Univariate: n = 1 against domains[0]; audited: deg g = kappa.
GraceReport grace_check(const Polynomial& f, const Polynomial& g,
                        const MultiIndex& kappa,
                        std::span<const CircularDomain> domains,
                        GraceVariant variant);

}  // namespace spoly
