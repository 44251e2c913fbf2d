#include "spoly/multiplier.hpp"

#include <cmath>

#include "spoly/generators.hpp"
#include "spoly/roots.hpp"

namespace spoly {

namespace {

// Diagonal coefficients a(alpha) keyed by alpha, validated to live on the
// (alpha, alpha) support of a 2n-variable polynomial.
std::map<MultiIndex, Cplx, GradedLexLess> diagonal_coeffs(const Polynomial& f,
                                                          int* n_out) {
  if (f.nvars() % 2 != 0)
    throw std::invalid_argument("expected 2n variables");
  const int n = f.nvars() / 2;
  std::map<MultiIndex, Cplx, GradedLexLess> a;
  for (const auto& [e, c] : f.terms()) {
    MultiIndex zpart(e.begin(), e.begin() + n);
    MultiIndex wpart(e.begin() + n, e.end());
    if (zpart != wpart)
      throw std::invalid_argument("support is not diagonal in (z, w)");
    a.emplace(zpart, c);
  }
  *n_out = n;
  return a;
}

}  // namespace

DiagonalFactorization factor_diagonal_stable(const Polynomial& f) {
  DiagonalFactorization out;
  int n = 0;
  const auto a = diagonal_coeffs(f, &n);
  if (a.empty()) {
    out.reason = "zero polynomial";
    return out;
  }

  // Unique minimal and maximal support elements.
  MultiIndex xi = a.begin()->first, top = a.begin()->first;
  for (const auto& [al, c] : a) {
    for (int i = 0; i < n; ++i) {
      xi[i] = std::min(xi[i], al[i]);
      top[i] = std::max(top[i], al[i]);
    }
  }
  if (!a.count(xi) || !a.count(top)) {
    out.reason = "support extrema are not unique";
    return out;
  }

  // lam(alpha) = (-1)^{|alpha|} a(alpha) / binom(top, alpha) on the box.
  auto lam = [&](const MultiIndex& al) -> Cplx {
    auto it = a.find(al);
    if (it == a.end()) return 0.0;
    const double s = total(al) % 2 == 0 ? 1.0 : -1.0;
    return s * it->second / binom(top, al);
  };

  double lam_scale = 0.0;
  bool interior_zero = false;
  for_each_below(sub(top, xi), [&](const MultiIndex& off) {
    const Cplx v = lam(add(xi, off));
    lam_scale = std::max(lam_scale, std::abs(v));
    if (v == Cplx(0.0)) interior_zero = true;
  });
  if (interior_zero) {
    out.reason = "interior zero in the support box";
    return out;
  }

  // Cross-coordinate multiplicativity, i != j.
  double worst = 0.0;
  for_each_below(top, [&](const MultiIndex& g) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (g[i] + 1 > top[i] || g[j] + 1 > top[j]) continue;
        MultiIndex gi = g, gj = g, gij = g;
        ++gi[i];
        ++gj[j];
        ++gij[i];
        ++gij[j];
        const Cplx lhs = lam(g) * lam(gij);
        const Cplx rhs = lam(gi) * lam(gj);
        worst = std::max(worst,
                         std::abs(lhs - rhs) / std::max(lam_scale * lam_scale, 1e-300));
      }
    }
  });
  out.max_relation_residual = worst;
  if (n > 1 && worst > 1e-9) {
    out.reason = "coefficient multiplicativity fails across coordinates";
    return out;
  }

  // Axis-slice reconstruction: f_i(t) = sum_k (-1)^k binom(top_i,k)
  // lam(xi + (k - xi_i) e_i) t^k, k = xi_i .. top_i, then C = lam(xi)^{1-n}.
  out.factors.clear();
  Cplx c_total = std::pow(lam(xi), 1.0 - n);
  for (int i = 0; i < n; ++i) {
    Polynomial fi(1);
    for (int k = xi[i]; k <= top[i]; ++k) {
      MultiIndex al = xi;
      al[i] = k;
      const double s = k % 2 == 0 ? 1.0 : -1.0;
      fi.add_term({k}, s * binom(top[i], k) * lam(al));
    }
    // monic up to sign
    const Cplx lead = fi.coeff({fi.degree(0)});
    const double mag = std::abs(lead);
    fi *= Cplx(1.0 / mag);
    c_total *= mag;
    out.factors.push_back(fi);
  }
  out.constant = c_total;

  // Definitive check: the product reproduces f.
  Polynomial recon = Polynomial::constant(2 * n, out.constant);
  for (int i = 0; i < n; ++i) {
    Polynomial lifted(2 * n);
    for (const auto& [e, c] : out.factors[i].terms()) {
      MultiIndex b(2 * n, 0);
      b[i] = e[0];
      b[n + i] = e[0];
      lifted.add_term(b, c);
    }
    recon *= lifted;
  }
  Polynomial diff = recon - f;
  out.reconstruction_residual =
      diff.max_coeff_magnitude() / std::max(f.max_coeff_magnitude(), 1e-300);
  if (out.reconstruction_residual > 1e-8) {
    out.reason = "axis slices do not reproduce the polynomial";
    out.factors.clear();
    return out;
  }

  out.ok = true;
  out.roots_all_real = true;
  out.roots_all_nonnegative = true;
  for (const auto& fi : out.factors) {
    if (fi.degree(0) < 1) {
      out.root_sets.emplace_back();
      continue;
    }
    auto roots = univariate_roots(fi);
    for (const Cplx& r : roots) {
      if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r)))
        out.roots_all_real = false;
      if (r.real() < -1e-7) out.roots_all_nonnegative = false;
    }
    out.root_sets.push_back(std::move(roots));
  }
  if (!out.roots_all_real) out.roots_all_nonnegative = false;
  return out;
}

namespace {

// The diagonal form associated with the symbol of sign s: coefficients
// s_parity * binom(kappa, alpha) * lambda(alpha) on z^alpha w^alpha.
Polynomial associated_diagonal(const DiagonalSequence& lambda,
                               const MultiIndex& kappa, bool alternating) {
  const int n = static_cast<int>(kappa.size());
  Polynomial f(2 * n);
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    Cplx v = lambda.at(alpha) * binom(kappa, alpha);
    if (alternating && total(alpha) % 2 == 1) v = -v;
    if (v == Cplx(0.0)) return;
    MultiIndex e(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      e[i] = alpha[i];
      e[n + i] = alpha[i];
    }
    f.add_term(e, v);
  });
  return f;
}

// Coordinate test polynomial sum_k binom(kappa_i, k) u_i(k) z^k recovered
// from an accepted factor: substitute t -> -z (and renormalize the sign so
// the lowest coefficient is positive).
Polynomial coordinate_poly_from_factor(const Polynomial& fi) {
  Polynomial p(1);
  for (const auto& [e, c] : fi.terms())
    p.add_term(e, (e[0] % 2 == 0 ? 1.0 : -1.0) * c);
  // normalize leading sign for readability
  if (!p.is_zero()) {
    auto low = p.terms().begin();
    if (low->second.real() < 0) p *= Cplx(-1.0);
  }
  return p;
}

}  // namespace

MultiplierReport is_kappa_multiplier(const DiagonalSequence& lambda,
                                     const MultiIndex& kappa) {
  if (lambda.kappa != kappa) throw std::invalid_argument("kappa mismatch");
  if (!lambda.complete())
    throw std::invalid_argument("diagonal sequence incomplete");
  bool all_real = true;
  for (const auto& [a, v] : lambda.values)
    if (std::abs(v.imag()) > kEpsZero) all_real = false;
  if (!all_real)
    throw std::invalid_argument("multiplier classification needs real values");

  MultiplierReport rep;
  rep.plus_branch = factor_diagonal_stable(associated_diagonal(lambda, kappa, true));
  rep.minus_branch = factor_diagonal_stable(associated_diagonal(lambda, kappa, false));

  const DiagonalFactorization* accepted = nullptr;
  if (rep.plus_branch.ok && rep.plus_branch.roots_all_nonnegative) {
    accepted = &rep.plus_branch;
    rep.sign_branch = '+';
  } else if (rep.minus_branch.ok && rep.minus_branch.roots_all_nonnegative) {
    accepted = &rep.minus_branch;
    rep.sign_branch = '-';
  }
  if (accepted) {
    rep.is_multiplier = true;
    for (const auto& fi : accepted->factors)
      rep.coordinate_polys.push_back(coordinate_poly_from_factor(fi));
    rep.note = rep.sign_branch == '+'
                   ? "product of nonnegative coordinate sequences"
                   : "product of alternating coordinate sequences";
  } else {
    rep.note = "no associated diagonal form factors with real nonnegative roots";
  }
  return rep;
}

HurwitzMultiplierReport hurwitz_multiplier(const DiagonalSequence& lambda,
                                           const MultiIndex& kappa) {
  HurwitzMultiplierReport rep;
  // Remove the constant complex multiple: rotate by the largest entry.
  Cplx lead = 0.0;
  for (const auto& [a, v] : lambda.values)
    if (std::abs(v) > std::abs(lead)) lead = v;
  if (lead == Cplx(0.0)) {
    rep.preserves = true;  // the zero operator
    rep.note = "identically zero sequence";
    return rep;
  }
  rep.phase = lead / std::abs(lead);
  DiagonalSequence normalized;
  normalized.kappa = lambda.kappa;
  bool nonneg_real = true;
  for (const auto& [a, v] : lambda.values) {
    const Cplx w = v / rep.phase;
    if (std::abs(w.imag()) > 1e-10 * std::max(1.0, std::abs(w)) ||
        w.real() < -1e-10)
      nonneg_real = false;
    normalized.values[a] = w.real();
  }
  if (!nonneg_real) {
    rep.note = "not a constant multiple of a nonnegative real sequence";
    return rep;
  }
  rep.base = is_kappa_multiplier(normalized, kappa);
  rep.preserves = rep.base.is_multiplier && rep.base.sign_branch == '+';
  if (!rep.preserves && rep.base.is_multiplier)
    rep.note = "multiplier sequence but not with the nonnegative pattern";
  return rep;
}

Polynomial coordinate_test_polynomial(int kappa, std::span<const double> u) {
  if (static_cast<int>(u.size()) != kappa + 1)
    throw std::invalid_argument("need kappa+1 sequence values");
  Polynomial p(1);
  for (int k = 0; k <= kappa; ++k) p.add_term({k}, binom(kappa, k) * u[k]);
  return p;
}

CoordinateAudit audit_coordinate_sequence(int kappa, std::span<const double> u) {
  CoordinateAudit audit;
  audit.test_poly = coordinate_test_polynomial(kappa, u);
  for (double v : u)
    if (v < 0) {
      audit.reason = "negative sequence value";
      return audit;
    }
  if (audit.test_poly.is_zero()) {
    audit.reason = "identically zero sequence";
    return audit;
  }
  if (audit.test_poly.degree(0) >= 1)
    audit.roots = univariate_roots(audit.test_poly);
  for (const Cplx& r : audit.roots) {
    if (std::abs(r.imag()) > 1e-7 * std::max(1.0, std::abs(r))) {
      audit.reason = "test polynomial has a complex root";
      return audit;
    }
    if (r.real() > 1e-7) {
      audit.reason = "test polynomial has a positive root";
      return audit;
    }
  }
  audit.pass = true;
  return audit;
}

std::optional<Polynomial> multiplier_rejection_witness(
    const DiagonalSequence& lambda, const MultiIndex& kappa, int attempts,
    std::uint64_t seed) {
  const MonomialOperator op = lambda.as_operator();
  const int n = static_cast<int>(kappa.size());
  for (int k = 0; k < attempts; ++k) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
    // real-stable products with degrees inside kappa
    Polynomial f = Polynomial::constant(n, 1.0);
    MultiIndex deg(n, 0);
    for (;;) {
      std::vector<int> open;
      for (int j = 0; j < n; ++j)
        if (deg[j] < kappa[j]) open.push_back(j);
      if (open.empty() || (total(deg) > 0 && rng.uniform01() < 0.3)) break;
      Polynomial aff = Polynomial::constant(n, Cplx(rng.uniform(-1.5, 1.5), 0.0));
      for (int j : open)
        if (rng.uniform01() < 0.8) {
          MultiIndex e(n, 0);
          e[j] = 1;
          aff.add_term(e, rng.uniform(0.1, 1.5));
          ++deg[j];
        }
      if (aff.total_degree() < 1) continue;
      f *= aff;
    }
    Polynomial img = op.apply(f);
    if (img.is_zero() || !img.has_real_coeffs(1e-9)) continue;
    StabilityVerdict v = real_stable_consistent(real_coefficient_part(img), 60,
                                                seed ^ (k + 1));
    if (v.falsified()) return f;
  }
  return std::nullopt;
}

}  // namespace spoly
