#include "spoly/symbols.hpp"

#include <Eigen/Dense>

#include "spoly/generators.hpp"

namespace spoly {

namespace {

Polynomial embed_front(const Polynomial& f, int total) {
  Polynomial out(total);
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b(total, 0);
    for (std::size_t k = 0; k < a.size(); ++k) b[k] = a[k];
    out.add_term(b, c);
  }
  return out;
}

template <typename Fn>
void for_each_total_below(int nvars, int order, Fn&& fn) {
  MultiIndex a(nvars, 0);
  // lexicographic enumeration of all alpha with |alpha| <= order
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == nvars) {
      fn(const_cast<const MultiIndex&>(a));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      a[pos] = e;
      rec(pos + 1, left - e);
    }
    a[pos] = 0;
  };
  rec(0, order);
}

}  // namespace

Polynomial algebraic_symbol(const MonomialOperator& op, const MultiIndex& kappa,
                            SymbolKind kind) {
  if (op.kappa != kappa) throw std::invalid_argument("kappa mismatch");
  const int n = static_cast<int>(kappa.size());
  const int m = op.image_nvars;
  Polynomial sym(m + n);
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    auto it = op.table.find(alpha);
    if (it == op.table.end() || it->second.is_zero()) return;
    Polynomial img = embed_front(it->second, m + n);
    MultiIndex wexp(m + n, 0);
    double sign = 1.0;
    switch (kind) {
      case SymbolKind::HalfPlaneAdd:
      case SymbolKind::RealPlus:
        for (int i = 0; i < n; ++i) wexp[m + i] = kappa[i] - alpha[i];
        break;
      case SymbolKind::RealMinus:
        for (int i = 0; i < n; ++i) wexp[m + i] = kappa[i] - alpha[i];
        if ((total(kappa) - total(alpha)) % 2 == 1) sign = -1.0;
        break;
      case SymbolKind::DiskProduct:
        for (int i = 0; i < n; ++i) wexp[m + i] = alpha[i];
        break;
    }
    img *= Polynomial::monomial(wexp, sign * binom(kappa, alpha));
    sym += img;
  });
  sym.prune();
  return sym;
}

TruncatedSeries transcendental_symbol(
    const std::function<Polynomial(const MultiIndex&)>& rule, int nvars,
    int order, int sign) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  TruncatedSeries ts;
  ts.order = order;
  int image_nvars = -1;
  Polynomial base;
  for_each_total_below(nvars, order, [&](const MultiIndex& alpha) {
    Polynomial img = rule(alpha);
    if (image_nvars < 0) {
      image_nvars = img.nvars();
      base = Polynomial(image_nvars + nvars);
    }
    if (img.is_zero()) return;
    Polynomial t = embed_front(img, image_nvars + nvars);
    MultiIndex wexp(image_nvars + nvars, 0);
    for (int i = 0; i < nvars; ++i) wexp[image_nvars + i] = alpha[i];
    const double s = (sign == -1 && total(alpha) % 2 == 1) ? -1.0 : 1.0;
    t *= Polynomial::monomial(wexp, s / factorial(alpha));
    base += t;
  });
  base.prune();
  ts.base = base;
  return ts;
}

TruncatedSeries transcendental_symbol(const MonomialOperator& op, int order,
                                      int sign) {
  return transcendental_symbol(
      [&](const MultiIndex& a) -> Polynomial {
        auto it = op.table.find(a);
        if (it != op.table.end()) return it->second;
        return Polynomial(op.image_nvars);
      },
      static_cast<int>(op.kappa.size()), order, sign);
}

int operator_table_rank(const MonomialOperator& op) {
  // Column space of the images decides the rank of T.
  std::map<MultiIndex, int, GradedLexLess> cols;
  for (const auto& [a, img] : op.table)
    for (const auto& [b, c] : img.terms())
      cols.emplace(b, 0);
  int idx = 0;
  for (auto& [b, i] : cols) i = idx++;
  if (cols.empty()) return 0;
  Eigen::MatrixXd M =
      Eigen::MatrixXd::Zero(2 * static_cast<int>(op.table.size()), idx);
  int row = 0;
  for (const auto& [a, img] : op.table) {
    for (const auto& [b, c] : img.terms()) {
      M(row, cols[b]) = c.real();
      M(row + 1, cols[b]) = c.imag();
    }
    row += 2;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  return rank;
}

namespace {

// A stable polynomial with degrees <= kappa adapted to the test domain.
Polynomial stable_input(Rng& rng, const MultiIndex& kappa,
                        const CircularDomain& domain) {
  Polynomial f = random_disk_stable(rng, kappa);
  if (domain.kind() == CircularDomain::Kind::Disk &&
      std::abs(domain.center()) == 0.0 && domain.radius() == 1.0)
    return f;
  // Substituting a map that carries the domain into the unit disk keeps
  // the zero set outside, and its pole stays outside the domain.
  const int n = static_cast<int>(kappa.size());
  std::vector<MoebiusMap> into_disk(n, MoebiusMap::unit_disk_to(domain).inverse());
  return mobius_transform(f, into_disk, kappa);
}

}  // namespace

PreservationReport preservation_test(const MonomialOperator& op,
                                     const MultiIndex& kappa,
                                     const CircularDomain& domain,
                                     const FalsifyOptions& opt) {
  if (domain.kind() == CircularDomain::Kind::DiskExterior)
    throw std::invalid_argument("preservation test covers half-planes and disks");
  PreservationReport rep;
  const SymbolKind kind = domain.kind() == CircularDomain::Kind::HalfPlane
                              ? SymbolKind::HalfPlaneAdd
                              : SymbolKind::DiskProduct;
  rep.symbol = algebraic_symbol(op, kappa, kind);
  if (rep.symbol.is_zero()) {
    rep.verdict = PreservationReport::Verdict::PreservesCertified;
    rep.note = "zero operator";
    return rep;
  }
  const DomainProduct omega(domain, rep.symbol.nvars());
  rep.symbol_verdict = decide_stability(rep.symbol, omega, opt);
  if (rep.symbol_verdict.certified()) {
    rep.verdict = PreservationReport::Verdict::PreservesCertified;
    return rep;
  }
  if (rep.symbol_verdict.unknown()) {
    rep.verdict = PreservationReport::Verdict::PreservesLikely;
    return rep;
  }

  // Falsified symbol: the operator can only preserve through a low rank.
  rep.table_rank = operator_table_rank(op);
  if (rep.table_rank <= 1) {
    // locate the image direction
    const Polynomial* best = nullptr;
    for (const auto& [a, img] : op.table)
      if (!img.is_zero() &&
          (!best || img.max_coeff_magnitude() > best->max_coeff_magnitude()))
        best = &img;
    if (best) {
      rep.range_generator = *best;
      rep.range_verdict = decide_stability(
          rep.range_generator, DomainProduct(domain, best->nvars()), opt);
      if (!rep.range_verdict.falsified()) {
        rep.verdict = PreservationReport::Verdict::RankOneBranch;
        rep.note = "range has dimension one and its generator resists falsification";
        return rep;
      }
    }
  }
  if (rep.table_rank == 2) {
    // Report (not certify) the two-dimensional real branch.
    std::vector<const Polynomial*> imgs;
    for (const auto& [a, img] : op.table)
      if (!img.is_zero()) imgs.push_back(&img);
    if (imgs.size() >= 2 && imgs[0]->has_real_coeffs() &&
        imgs.back()->has_real_coeffs()) {
      KreinReport kr = krein_real_stable(*imgs[0], *imgs.back(), opt);
      rep.rank_two_real_pair =
          kr.agree && !kr.direct.falsified() && !kr.lifted.falsified();
      if (rep.rank_two_real_pair)
        rep.note = "rank-2 table with a plausible stable real pair (reported only)";
    }
  }

  rep.verdict = PreservationReport::Verdict::NotPreserving;
  // Construct a witness: a stable input whose image is falsified.
  const int tries = 40;
  for (int k = 0; k < tries; ++k) {
    Rng rng = Rng::for_trial(opt.seed ^ 0x5eedULL, static_cast<std::uint64_t>(k));
    Polynomial f = stable_input(rng, kappa, domain);
    Polynomial img;
    try {
      img = op.apply(f);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (img.is_zero()) continue;
    StabilityVerdict iv =
        decide_stability(img, DomainProduct(domain, img.nvars()), opt);
    if (iv.falsified()) {
      rep.witness_input = f;
      rep.image_verdict = iv;
      return rep;
    }
  }
  rep.note += (rep.note.empty() ? "" : "; ");
  rep.note += "symbol falsified at rank >= 2; no input witness within budget";
  return rep;
}

}  // namespace spoly
