#include "spoly/apolarity.hpp"

#include <cmath>
#include <numbers>

namespace spoly {

namespace {

void check_degrees(const Polynomial& f, const Polynomial& g,
                   const MultiIndex& kappa) {
  const int n = static_cast<int>(kappa.size());
  if (f.nvars() != n || g.nvars() != n)
    throw std::invalid_argument("arity mismatch");
  for (int i = 0; i < n; ++i)
    if (f.degree(i) > kappa[i] || g.degree(i) > kappa[i])
      throw std::invalid_argument("degree exceeds kappa");
}

// f^(alpha)(0) = alpha! * coefficient(alpha).
Cplx deriv_at_zero(const Polynomial& f, const MultiIndex& alpha) {
  return f.coeff(alpha) * factorial(alpha);
}

}  // namespace

Cplx apolar_pairing(const Polynomial& f, const Polynomial& g,
                    const MultiIndex& kappa, bool constant_sign) {
  check_degrees(f, g, kappa);
  Cplx sum = 0.0;
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    const Cplx fa = deriv_at_zero(f, alpha);
    if (fa == Cplx(0.0)) return;
    const Cplx gb = deriv_at_zero(g, sub(kappa, alpha));
    if (gb == Cplx(0.0)) return;
    const double sign = constant_sign
                            ? (total(kappa) % 2 == 0 ? 1.0 : -1.0)
                            : (total(alpha) % 2 == 0 ? 1.0 : -1.0);
    sum += sign * fa * gb;
  });
  return sum;
}

Cplx pairing_field(const Polynomial& f, const Polynomial& g,
                   const MultiIndex& kappa, std::span<const Cplx> z) {
  check_degrees(f, g, kappa);
  Cplx sum = 0.0;
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    const Cplx fa = f.derivative(alpha).evaluate(z);
    const Cplx gb = g.derivative(sub(kappa, alpha)).evaluate(z);
    const double sign = total(alpha) % 2 == 0 ? 1.0 : -1.0;
    sum += sign * fa * gb;
  });
  return sum;
}

double moebius_invariance_residual(const Polynomial& f, const Polynomial& g,
                                   const MultiIndex& kappa,
                                   std::span<const MoebiusMap> maps) {
  const Cplx lhs = apolar_pairing(f, g, kappa);
  const Cplx rhs = apolar_pairing(mobius_transform(f, maps, kappa),
                                  mobius_transform(g, maps, kappa), kappa);
  return std::abs(lhs - rhs);
}

GraceReport grace_check(const Polynomial& f, const Polynomial& g,
                        const MultiIndex& kappa,
                        std::span<const CircularDomain> domains,
                        GraceVariant variant) {
  GraceReport rep;
  check_degrees(f, g, kappa);
  const int n = static_cast<int>(kappa.size());

  switch (variant) {
    case GraceVariant::DiskExterior: {
      if (static_cast<int>(domains.size()) != n)
        throw std::invalid_argument("need one domain per variable");
      for (int i = 0; i < n; ++i) {
        const auto& d = domains[i];
        if (d.kind() == CircularDomain::Kind::HalfPlane)
          rep.audit.push_back("domain " + std::to_string(i + 1) +
                              " is a half-plane, not a disk or exterior");
        if (d.kind() == CircularDomain::Kind::DiskExterior &&
            f.degree(i) != kappa[i])
          rep.audit.push_back("deg_" + std::to_string(i + 1) +
                              "(f) < kappa at an exterior coordinate");
        if (d.kind() == CircularDomain::Kind::Disk && g.degree(i) != kappa[i])
          rep.audit.push_back("deg_" + std::to_string(i + 1) +
                              "(g) < kappa at a disk coordinate");
      }
      break;
    }
    case GraceVariant::HalfPlane: {
      if (domains.size() < 2)
        throw std::invalid_argument("need the two half-planes");
      for (int k = 0; k < 2; ++k)
        if (domains[k].kind() != CircularDomain::Kind::HalfPlane)
          rep.audit.push_back("domain " + std::to_string(k + 1) +
                              " is not a half-plane");
      // Half-planes through rotated boundaries always intersect unless they
      // are parallel with disjoint interiors; opposite orientation is the
      // only empty case for origin-anchored ones.
      if (domains[0].kind() == CircularDomain::Kind::HalfPlane &&
          domains[1].kind() == CircularDomain::Kind::HalfPlane) {
        const double diff = std::abs(
            std::remainder(domains[0].theta() - domains[1].theta(),
                           2 * std::numbers::pi));
        if (std::abs(diff - std::numbers::pi) < 1e-12)
          rep.audit.push_back("half-planes have empty intersection");
      }
      bool support_ok = false;
      for (const auto& [alpha, ca] : f.terms())
        for (const auto& [beta, cb] : g.terms())
          if (leq(kappa, add(alpha, beta))) support_ok = true;
      if (!support_ok)
        rep.audit.push_back(
            "no alpha in supp(f), beta in supp(g) with kappa <= alpha+beta");
      break;
    }
    case GraceVariant::Univariate: {
      if (n != 1) throw std::invalid_argument("univariate variant needs n = 1");
      if (g.degree(0) != kappa[0])
        rep.audit.push_back("deg(g) != kappa");
      if (f.is_zero() || g.is_zero()) rep.audit.push_back("zero input");
      break;
    }
  }

  rep.hypotheses_ok = rep.audit.empty();
  rep.pairing = apolar_pairing(f, g, kappa);
  rep.scale = f.max_coeff_magnitude() * g.max_coeff_magnitude();
  rep.pass = rep.hypotheses_ok && std::abs(rep.pairing) > 1e-9 * rep.scale;
  return rep;
}

}  // namespace spoly
