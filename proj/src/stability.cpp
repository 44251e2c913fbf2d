#include "spoly/stability.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace spoly {

namespace {

using CplxL = std::complex<long double>;

CplxL eval_ld(const FlatPoly& fp, const CplxL* pt) {
  CplxL s = 0.0L;
  const int* e = fp.expo.data();
  for (std::size_t t = 0; t < fp.coef.size(); ++t, e += fp.nvars) {
    CplxL m = CplxL(fp.coef[t].real(), fp.coef[t].imag());
    for (int i = 0; i < fp.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) m *= pt[i];
    s += m;
  }
  return s;
}

// Newton on t -> f(base + t*dir), all in extended precision. Derivative is
// assembled termwise from the product rule.
CplxL polish_on_line(const FlatPoly& fp, const CplxL* base, const CplxL* dir,
                     CplxL t) {
  const int n = fp.nvars;
  std::vector<CplxL> lin(n);
  for (int it = 0; it < 24; ++it) {
    for (int i = 0; i < n; ++i) lin[i] = base[i] + t * dir[i];
    CplxL val = 0.0L, dval = 0.0L;
    const int* e = fp.expo.data();
    for (std::size_t tt = 0; tt < fp.coef.size(); ++tt, e += n) {
      CplxL prod = CplxL(fp.coef[tt].real(), fp.coef[tt].imag());
      CplxL logd = 0.0L;
      bool at_zero = false;
      for (int i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        for (int k = 0; k < e[i]; ++k) prod *= lin[i];
        if (std::abs(lin[i]) < 1e-300L)
          at_zero = true;
        else
          logd += static_cast<long double>(e[i]) * dir[i] / lin[i];
      }
      val += prod;
      if (!at_zero) dval += prod * logd;
    }
    if (std::abs(dval) == 0.0L) break;
    const CplxL step = val / dval;
    t -= step;
    if (std::abs(step) <= 1e-20L * (1.0L + std::abs(t))) break;
  }
  return t;
}

struct TrialOutcome {
  bool found = false;
  std::vector<Cplx> witness;
  double abs_at_witness = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  std::vector<Cplx> argmin;
};

// Accepts a candidate parameter on a line when the polished point lies in
// omega and the extended-precision residual clears the witness contract.
bool try_witness(const FlatPoly& fp, const DomainProduct& omega,
                 const std::vector<CplxL>& base, const std::vector<CplxL>& dir,
                 Cplx t0, TrialOutcome& out) {
  const int n = fp.nvars;
  const CplxL t = polish_on_line(fp, base.data(), dir.data(),
                                 CplxL(t0.real(), t0.imag()));
  std::vector<CplxL> ptl(n);
  std::vector<Cplx> pt(n);
  for (int i = 0; i < n; ++i) {
    ptl[i] = base[i] + t * dir[i];
    pt[i] = Cplx(static_cast<double>(ptl[i].real()),
                 static_cast<double>(ptl[i].imag()));
  }
  if (!omega.contains(pt)) return false;
  const double resid = static_cast<double>(std::abs(eval_ld(fp, ptl.data())));
  if (resid > kEpsZero * fp.scale) return false;
  out.found = true;
  out.witness = std::move(pt);
  out.abs_at_witness = resid;
  return true;
}

TrialOutcome run_trial(const FlatPoly& fp, const DomainProduct& omega,
                       std::uint64_t seed, long trial, bool use_lines) {
  const int n = fp.nvars;
  Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(trial));
  TrialOutcome out;

  // A plain interior sample feeds the Unknown statistics.
  std::vector<Cplx> probe = omega.sample(rng);
  out.min_abs = std::abs(fp.eval(probe.data()));
  out.argmin = probe;

  std::vector<Cplx> coeffs;
  std::vector<CplxL> base(n), dir(n);
  const bool line_mode = use_lines && trial % 2 == 0;
  if (line_mode) {
    // Real spread along each boundary, positive depth: a root with positive
    // imaginary part lands componentwise inside every half-plane factor.
    std::vector<Cplx> b(n), d(n);
    for (int i = 0; i < n; ++i) {
      const Cplx rot = std::polar(1.0, -omega.factor(i).theta());
      b[i] = rot * Cplx(rng.cauchy(), 0.0);
      d[i] = rot * Cplx(0.0, 0.0) + rot * Cplx(1e-3 + rng.exponential(), 0.0);
      base[i] = CplxL(b[i].real(), b[i].imag());
      dir[i] = CplxL(d[i].real(), d[i].imag());
    }
    fp.line(b.data(), d.data(), coeffs);
  } else {
    const int var = rng.uniform_int(0, n - 1);
    for (int i = 0; i < n; ++i) {
      base[i] = CplxL(probe[i].real(), probe[i].imag());
      dir[i] = 0.0L;
    }
    dir[var] = 1.0L;
    base[var] = 0.0L;
    fp.slice(var, probe.data(), coeffs);
  }

  double cscale = 0.0;
  for (const Cplx& c : coeffs) cscale = std::max(cscale, std::abs(c));
  if (cscale == 0.0 || coeffs.size() < 2) return out;
  for (const Cplx& root : univariate_roots(coeffs)) {
    if (try_witness(fp, omega, base, dir, root, out)) return out;
  }
  return out;
}

StabilityVerdict reduce_outcomes(const std::vector<TrialOutcome>& results,
                                 long budget) {
  StabilityVerdict v;
  for (long t = 0; t < budget; ++t) {
    const TrialOutcome& r = results[t];
    if (r.found) {
      v.kind = StabilityVerdict::Kind::Falsified;
      v.witness = r.witness;
      v.abs_at_witness = r.abs_at_witness;
      v.trials = t + 1;
      v.detail = "falsifier witness";
      return v;
    }
    if (r.min_abs < v.min_abs) {
      v.min_abs = r.min_abs;
      v.argmin = r.argmin;
    }
  }
  v.kind = StabilityVerdict::Kind::Unknown;
  v.trials = budget;
  v.detail = "no witness found";
  return v;
}

StabilityVerdict falsify_impl(const Polynomial& f, const DomainProduct& omega,
                              const FalsifyOptions& opt, bool parallel) {
  if (omega.size() != f.nvars())
    throw std::invalid_argument("domain arity != nvars");
  if (opt.budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (f.is_zero()) {
    StabilityVerdict v;
    Rng rng(opt.seed);
    v.kind = StabilityVerdict::Kind::Falsified;
    v.witness = omega.sample(rng);
    v.abs_at_witness = 0.0;
    v.detail = "zero polynomial vanishes everywhere";
    return v;
  }
  const FlatPoly fp(f);
  const bool use_lines = omega.all_half_planes();
  std::vector<TrialOutcome> results(opt.budget);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long t = 0; t < opt.budget; ++t)
      results[t] = run_trial(fp, omega, opt.seed, t, use_lines);
  } else {
    for (long t = 0; t < opt.budget; ++t) {
      results[t] = run_trial(fp, omega, opt.seed, t, use_lines);
      if (results[t].found) {
        results.resize(t + 1);
        return reduce_outcomes(results, t + 1);
      }
    }
  }
  return reduce_outcomes(results, opt.budget);
}

}  // namespace

StabilityVerdict StabilityVerdict::certify(std::string why) {
  StabilityVerdict v;
  v.kind = Kind::Certified;
  v.detail = std::move(why);
  return v;
}

StabilityVerdict StabilityVerdict::falsification(std::vector<Cplx> w,
                                                 double absval, std::string why,
                                                 long trials) {
  StabilityVerdict v;
  v.kind = Kind::Falsified;
  v.witness = std::move(w);
  v.abs_at_witness = absval;
  v.detail = std::move(why);
  v.trials = trials;
  return v;
}

StabilityVerdict falsify(const Polynomial& f, const DomainProduct& omega,
                         const FalsifyOptions& opt) {
  return falsify_impl(f, omega, opt, !opt.force_serial);
}

StabilityVerdict falsify_serial(const Polynomial& f, const DomainProduct& omega,
                                const FalsifyOptions& opt) {
  return falsify_impl(f, omega, opt, false);
}

StabilityVerdict stable_univariate(const Polynomial& f,
                                   const CircularDomain& domain) {
  if (f.nvars() != 1) throw std::invalid_argument("not univariate");
  if (f.is_zero()) throw std::domain_error("zero polynomial");
  if (f.total_degree() == 0)
    return StabilityVerdict::certify("nonzero constant");
  const auto coeffs = f.univariate_coeffs();
  for (const Cplx& r : univariate_roots(coeffs)) {
    if (domain.contains(r)) {
      return StabilityVerdict::falsification(
          {r}, std::abs(f.evaluate(std::vector<Cplx>{r})), "root in domain");
    }
  }
  return StabilityVerdict::certify("all roots outside " + domain.describe());
}

namespace {

double im_ratio(Cplx num, Cplx den) { return (num / den).imag(); }

// Minimum of a real quadratic q0 + q1 x + q2 x^2 over the reals, with its
// argmin. Degenerate (linear/constant) cases handled exactly.
std::pair<double, double> quadratic_min(double q0, double q1, double q2,
                                        double scale) {
  const double tol = 1e-12 * std::max(scale, 1.0);
  if (std::abs(q2) <= tol) {
    if (std::abs(q1) <= tol) return {q0, 0.0};
    // linear: unbounded below; report a point far along the descent
    const double x = q1 > 0 ? -1e8 : 1e8;
    return {q0 + q1 * x, x};
  }
  if (q2 < 0) {
    const double x = 1e8;
    return {q0 + q1 * x + q2 * x * x, x};
  }
  const double x = -q1 / (2 * q2);
  return {q0 + q1 * x + q2 * x * x, x};
}

StabilityVerdict verified_point_witness(const Polynomial& f,
                                        std::vector<Cplx> pt,
                                        const std::string& why) {
  const double val = std::abs(f.evaluate(pt));
  return StabilityVerdict::falsification(std::move(pt), val, why);
}

}  // namespace

CriterionReport bivariate_criteria(const Polynomial& f,
                                   BivariateCriterion which,
                                   const FalsifyOptions& opt) {
  CriterionReport rep;
  const double scale = f.max_coeff_magnitude();

  if (which == BivariateCriterion::RealQuadratic) {
    if (f.nvars() != 1 || f.degree(0) > 2 || !f.has_real_coeffs())
      throw std::invalid_argument("expected a real univariate quadratic");
    const double a = f.coeff({0}).real();
    const double b = f.coeff({1}).real() / 2.0;
    const double c = f.coeff({2}).real();
    rep.diagnostics = {{"a", a}, {"b", b}, {"c", c}, {"b2_minus_ac", b * b - a * c}};
    if (f.is_zero()) {
      rep.verdict = StabilityVerdict::falsification({Cplx(0, 1)}, 0.0, "zero polynomial");
      return rep;
    }
    if (b * b >= a * c) {
      rep.verdict = StabilityVerdict::certify("b^2 >= ac: real-rooted");
    } else {
      // complex conjugate pair; pick the upper root as witness
      for (const Cplx& r : univariate_roots(f.univariate_coeffs()))
        if (r.imag() > 0) {
          rep.verdict = verified_point_witness(f, {r}, "b^2 < ac");
          return rep;
        }
      rep.verdict = StabilityVerdict::falsification({}, 0, "b^2 < ac");
    }
    return rep;
  }

  if (f.nvars() != 2 || !f.is_multiaffine())
    throw std::invalid_argument("expected a multi-affine bivariate polynomial");
  const Cplx a = f.coeff({0, 0}), b = f.coeff({1, 0}), c = f.coeff({0, 1}),
             d = f.coeff({1, 1});

  if (which == BivariateCriterion::RealMultiAffine) {
    if (!f.has_real_coeffs())
      throw std::invalid_argument("criterion needs real coefficients");
    const double lhs = b.real() * c.real(), rhs = a.real() * d.real();
    rep.diagnostics = {{"bc", lhs}, {"ad", rhs}};
    if (f.is_zero()) {
      rep.verdict = StabilityVerdict::falsification({Cplx(0, 1), Cplx(0, 1)}, 0.0,
                                                    "zero polynomial");
      return rep;
    }
    if (lhs >= rhs) {
      rep.verdict = StabilityVerdict::certify(
          "bc >= ad: real stable (open upper half-plane product)");
    } else {
      FalsifyOptions o = opt;
      o.budget = std::max<long>(opt.budget, 20000);
      auto v = falsify(f, {CircularDomain::upper_half_plane(), 2}, o);
      v.detail = "bc < ad; " + v.detail;
      if (!v.falsified()) v.kind = StabilityVerdict::Kind::Falsified;
      rep.verdict = v;
    }
    return rep;
  }

  // MaxPrinciple: exact decision for the *closed* upper half-plane product.
  if (std::abs(d) > kEpsZero * std::max(scale, 1.0)) {
    const double ib = im_ratio(b, d), ic = im_ratio(c, d);
    rep.diagnostics = {{"Im(b/d)", ib}, {"Im(c/d)", ic}};
    const double postol = 1e-12 * std::max(scale, 1.0);
    if (ib > postol && ic > postol) {
      // V1(x) = Im(a c~) + Im(a d~ + b c~) x + Im(b d~) x^2 > 0 for all real x
      const double q0 = (a * std::conj(c)).imag();
      const double q1 = (a * std::conj(d) + b * std::conj(c)).imag();
      const double q2 = (b * std::conj(d)).imag();
      const auto [vmin, xmin] = quadratic_min(q0, q1, q2, scale * scale);
      rep.diagnostics.emplace_back("V1_min", vmin);
      rep.diagnostics.emplace_back("V1_argmin", xmin);
      if (vmin > postol * std::max(1.0, scale)) {
        rep.verdict = StabilityVerdict::certify(
            "Im(b/d)>0, Im(c/d)>0 and V1 > 0 on R: closed-upper-half-plane stable");
      } else {
        // rho(xmin) <= 0, so w = -(a + b x)/(c + d x) sits in the closed
        // upper half-plane and (x, w) is an exact zero.
        const Cplx z = xmin;
        const Cplx w = -(a + b * z) / (c + d * z);
        rep.verdict = verified_point_witness(f, {z, w}, "V1 attains <= 0 on R");
      }
      return rep;
    }
    if (ib <= postol && ic <= postol) {
      // After recentering, f is d(zw - mu) with mu = (bc - ad)/d^2; split
      // the required product zw = mu between two closed-half-plane points.
      const Cplx mu = (b * c - a * d) / (d * d);
      Cplx zp, wp;
      if (std::abs(mu) < 1e-300) {
        zp = 0.0;
        wp = Cplx(0, 1);
      } else {
        double arg = std::arg(mu);
        if (arg < 0) arg += 2 * std::numbers::pi;
        zp = std::polar(std::sqrt(std::abs(mu)), arg / 2);
        wp = std::polar(std::sqrt(std::abs(mu)), arg / 2);
      }
      rep.verdict = verified_point_witness(
          f, {zp - c / d, wp - b / d},
          "Im(b/d) <= 0 and Im(c/d) <= 0: never closed-stable");
      return rep;
    }
    // Mixed signs: boundary analysis is delicate; delegate.
    auto v = falsify(f, {CircularDomain::half_plane(0.0, true), 2}, opt);
    v.detail = "one of Im(b/d), Im(c/d) nonpositive; " + v.detail;
    rep.verdict = v;
    return rep;
  }

  // d = 0: f = a + b z + c w, exact case analysis.
  rep.diagnostics = {{"abs_d", std::abs(d)}};
  const double tol = kEpsZero * std::max(scale, 1.0);
  const bool bz = std::abs(b) <= tol, cz = std::abs(c) <= tol;
  if (bz && cz) {
    if (std::abs(a) > tol) {
      rep.verdict = StabilityVerdict::certify("nonzero constant");
    } else {
      rep.verdict = StabilityVerdict::falsification({Cplx(0, 1), Cplx(0, 1)},
                                                    0.0, "zero polynomial");
    }
    return rep;
  }
  if (bz != cz) {
    const Cplx lead = bz ? c : b;
    const Cplx root = -a / lead;
    rep.diagnostics.emplace_back("Im(root)", root.imag());
    if (root.imag() < -kEpsBoundary) {
      rep.verdict = StabilityVerdict::certify("single root below the real axis");
    } else {
      std::vector<Cplx> w = bz ? std::vector<Cplx>{Cplx(0, 1), root}
                               : std::vector<Cplx>{root, Cplx(0, 1)};
      rep.verdict = verified_point_witness(f, std::move(w),
                                           "root in the closed half-plane");
    }
    return rep;
  }
  // b, c both nonzero: stable iff c/b > 0 and Im(a/b) > 0.
  const Cplx ratio = c / b;
  rep.diagnostics.emplace_back("Im(c/b)", ratio.imag());
  rep.diagnostics.emplace_back("Im(a/b)", (a / b).imag());
  if (std::abs(ratio.imag()) <= tol && ratio.real() > 0 &&
      (a / b).imag() > kEpsBoundary) {
    rep.verdict = StabilityVerdict::certify(
        "affine zero set misses the closed half-plane product");
    return rep;
  }
  // Construct w with Im(w) >= 0 pushing z = -(a + c w)/b into the closed
  // upper half-plane.
  const double psi = std::arg(-ratio);
  double phi = std::numbers::pi / 2 - psi;
  while (phi <= 0) phi += 2 * std::numbers::pi;
  while (phi >= std::numbers::pi) phi -= std::numbers::pi / 2;
  if (phi <= 0) phi = std::numbers::pi / 2;
  double radius = 1.0;
  Cplx w, z;
  for (int k = 0; k < 200; ++k) {
    w = std::polar(radius, phi);
    z = -(a + c * w) / b;
    if (z.imag() > kEpsBoundary) break;
    radius *= 2;
  }
  rep.verdict = verified_point_witness(f, {z, w}, "affine zero set meets the domain");
  return rep;
}

StabilityVerdict certify_symmetric_multiaffine(const Polynomial& f,
                                               const CircularDomain& domain,
                                               const std::vector<int>& block_sizes,
                                               const FalsifyOptions& opt) {
  const int n = f.nvars();
  if (!f.is_multiaffine()) throw std::invalid_argument("not multi-affine");
  if (f.is_zero()) throw std::domain_error("zero polynomial");
  std::vector<int> blocks = block_sizes.empty() ? std::vector<int>{n} : block_sizes;
  int sum = 0;
  for (int b : blocks) sum += b;
  if (sum != n) throw std::invalid_argument("block sizes must sum to nvars");

  // Symmetry within each block: invariance under adjacent transpositions.
  const double tol = 1e-12 * std::max(f.max_coeff_magnitude(), 1.0);
  int off = 0;
  for (int b : blocks) {
    for (int i = off; i + 1 < off + b; ++i) {
      std::vector<int> sigma(n);
      for (int k = 0; k < n; ++k) sigma[k] = k;
      std::swap(sigma[i], sigma[i + 1]);
      Polynomial diff = f - permute_variables(f, sigma);
      if (diff.max_coeff_magnitude() > tol)
        throw std::invalid_argument("asymmetry beyond tolerance");
    }
    off += b;
  }

  // Contract each block onto one variable.
  const int nb = static_cast<int>(blocks.size());
  Polynomial diag(nb);
  for (const auto& [alpha, c] : f.terms()) {
    MultiIndex a(nb, 0);
    int o = 0;
    for (int bi = 0; bi < nb; ++bi) {
      for (int k = 0; k < blocks[bi]; ++k) a[bi] += alpha[o + k];
      o += blocks[bi];
    }
    diag.add_term(a, c);
  }
  diag.prune();

  if (!domain.convex()) {
    for (int bi = 0; bi < nb; ++bi)
      if (diag.degree(bi) != blocks[bi])
        throw std::invalid_argument(
            "degree condition violated for non-convex domain");
  }

  auto lift = [&](std::span<const Cplx> dpt) {
    std::vector<Cplx> w;
    for (int bi = 0; bi < nb; ++bi)
      w.insert(w.end(), blocks[bi], dpt[bi]);
    return w;
  };

  if (nb == 1) {
    StabilityVerdict dv = stable_univariate(diag, domain);
    if (dv.certified()) {
      dv.detail = "diagonal restriction " + dv.detail;
      return dv;
    }
    auto w = lift(dv.witness);
    const double val = std::abs(f.evaluate(w));
    return StabilityVerdict::falsification(std::move(w), val,
                                           "diagonal root lifted to the diagonal point");
  }
  StabilityVerdict dv = falsify(diag, {domain, nb}, opt);
  if (dv.falsified()) {
    auto w = lift(dv.witness);
    const double val = std::abs(f.evaluate(w));
    return StabilityVerdict::falsification(std::move(w), val,
                                           "diagonal witness lifted blockwise", dv.trials);
  }
  dv.detail = "block diagonal searched only: " + dv.detail;
  return dv;
}

KreinReport krein_real_stable(const Polynomial& f, const Polynomial& g,
                              const FalsifyOptions& opt) {
  if (!f.has_real_coeffs() || !g.has_real_coeffs())
    throw std::invalid_argument("inputs must have real coefficients");
  const int n = f.nvars();
  if (g.nvars() != n) throw std::invalid_argument("variable-count mismatch");
  KreinReport rep;

  Polynomial h = f;
  h += Cplx(0, 1) * g;
  const DomainProduct upper(CircularDomain::upper_half_plane(), n);
  rep.direct = h.nvars() == 1 && !h.is_zero()
                   ? stable_univariate(h, CircularDomain::upper_half_plane())
                   : falsify(h, upper, opt);

  Polynomial lifted(n + 1);
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b = a;
    b.push_back(0);
    lifted.add_term(b, c);
  }
  for (const auto& [a, c] : g.terms()) {
    MultiIndex b = a;
    b.push_back(1);
    lifted.add_term(b, c);
  }
  rep.lifted = falsify(lifted, DomainProduct(CircularDomain::upper_half_plane(), n + 1), opt);

  rep.agree = rep.direct.falsified() == rep.lifted.falsified();
  return rep;
}

PhaseReport same_phase_check(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("zero polynomial");
  const int d = f.total_degree();
  for (const auto& [a, c] : f.terms())
    if (total(a) != d) throw std::invalid_argument("not homogeneous");
  Cplx lead = 0.0;
  for (const auto& [a, c] : f.terms())
    if (std::abs(c) > std::abs(lead)) lead = c;
  PhaseReport rep;
  rep.alpha = std::arg(lead);
  const Cplx rot = std::polar(1.0, -rep.alpha);
  rep.same_phase = true;
  for (const auto& [a, c] : f.terms()) {
    const Cplx r = c * rot;
    if (r.real() <= 0 || std::abs(std::arg(r)) > 1e-9) {
      rep.same_phase = false;
      break;
    }
  }
  return rep;
}

StabilityVerdict real_stable_consistent(const Polynomial& f, int restrictions,
                                        std::uint64_t seed) {
  if (!f.has_real_coeffs())
    throw std::invalid_argument("real coefficients required");
  if (f.is_zero()) throw std::domain_error("zero polynomial");
  const int n = f.nvars();
  const FlatPoly fp(f);
  StabilityVerdict v;
  v.kind = StabilityVerdict::Kind::Unknown;
  std::vector<Cplx> base(n), dir(n);
  std::vector<Cplx> coeffs;
  for (int k = 0; k < restrictions; ++k) {
    Rng rng = Rng::for_trial(seed, static_cast<std::uint64_t>(k));
    for (int i = 0; i < n; ++i) {
      base[i] = Cplx(2.0 * rng.normal(), 0.0);
      dir[i] = Cplx(rng.uniform(0.1, 1.1), 0.0);
    }
    fp.line(base.data(), dir.data(), coeffs);
    double cs = 0.0;
    for (const Cplx& c : coeffs) cs = std::max(cs, std::abs(c));
    if (cs == 0.0 || coeffs.size() < 2) continue;
    for (const Cplx& r : univariate_roots(coeffs)) {
      if (r.imag() > 1e-8 * std::max(1.0, std::abs(r))) {
        // real restriction with a genuinely complex root: exact witness
        std::vector<CplxL> bl(n), dl(n);
        for (int i = 0; i < n; ++i) {
          bl[i] = CplxL(base[i].real(), 0.0L);
          dl[i] = CplxL(dir[i].real(), 0.0L);
        }
        TrialOutcome out;
        if (try_witness(fp, DomainProduct(CircularDomain::upper_half_plane(), n),
                        bl, dl, r, out)) {
          return StabilityVerdict::falsification(
              std::move(out.witness), out.abs_at_witness,
              "complex root pair on a real line restriction", k + 1);
        }
      }
    }
  }
  v.trials = restrictions;
  v.detail = "all real line restrictions real-rooted";
  return v;
}

StabilityVerdict decide_stability(const Polynomial& f, const DomainProduct& omega,
                                  const FalsifyOptions& opt) {
  if (f.is_zero()) return falsify(f, omega, opt);
  if (f.nvars() == 1 && omega.size() == 1)
    return stable_univariate(f, omega.factor(0));

  // Bivariate multi-affine against upper half-plane products: exact closed
  // criterion; an open request inherits a closed certificate, and interior
  // witnesses refute the open product too.
  if (f.nvars() == 2 && f.is_multiaffine() && omega.size() == 2) {
    const auto& d0 = omega.factor(0);
    const auto& d1 = omega.factor(1);
    if (d0.kind() == CircularDomain::Kind::HalfPlane &&
        d1.kind() == CircularDomain::Kind::HalfPlane &&
        d0.theta() == d1.theta() && d0.closed() == d1.closed()) {
      // rotate onto the upper half-plane
      const Cplx rot = std::polar(1.0, -d0.theta());
      Polynomial g(2);
      for (const auto& [a, c] : f.terms())
        g.add_term(a, c * std::pow(rot, total(a)));
      auto rep = bivariate_criteria(g, BivariateCriterion::MaxPrinciple, opt);
      StabilityVerdict v = rep.verdict;
      auto rotate_back = [&](std::vector<Cplx>& w) {
        for (Cplx& x : w) x *= rot;
      };
      if (v.falsified()) {
        rotate_back(v.witness);
        if (omega.contains(v.witness)) {
          v.abs_at_witness = std::abs(f.evaluate(v.witness));
          return v;
        }
        // boundary witness against an open request: search the interior
        return falsify(f, omega, opt);
      }
      if (v.certified()) {
        v.detail += d0.closed() ? "" : " (closed certificate covers the open product)";
        return v;
      }
      return falsify(f, omega, opt);
    }
  }

  // Symmetric multi-affine over one repeated domain: diagonal certification.
  if (f.is_multiaffine() && omega.size() == f.nvars()) {
    bool same = true;
    for (int i = 1; i < omega.size(); ++i)
      if (omega.factor(i).describe() != omega.factor(0).describe()) same = false;
    if (same && symmetry_index(f) <= 1e-12 * std::max(1.0, f.max_coeff_magnitude())) {
      bool degree_ok = true;
      if (!omega.factor(0).convex()) {
        MultiIndex full(f.nvars(), 1);
        degree_ok = std::abs(f.coeff(full)) > 0;
      }
      if (degree_ok)
        return certify_symmetric_multiaffine(f, omega.factor(0), {}, opt);
    }
  }
  return falsify(f, omega, opt);
}

}  // namespace spoly
