#include "spoly/operators.hpp"

#include <algorithm>
#include <cmath>

namespace spoly {

Polynomial MonomialOperator::apply(const Polynomial& f) const {
  if (f.nvars() != static_cast<int>(kappa.size()))
    throw std::invalid_argument("operator domain arity mismatch");
  Polynomial out(image_nvars);
  for (const auto& [alpha, c] : f.terms()) {
    if (!leq(alpha, kappa))
      throw std::invalid_argument("degree exceeds operator kappa");
    auto it = table.find(alpha);
    if (it == table.end()) continue;  // absent entries act as zero
    Polynomial img = it->second;
    img *= c;
    out += img;
  }
  out.prune();
  return out;
}

MonomialOperator MonomialOperator::identity(const MultiIndex& kappa) {
  return from_rule(kappa, static_cast<int>(kappa.size()),
                   [&](const MultiIndex& a) { return Polynomial::monomial(a, 1.0); });
}

MonomialOperator MonomialOperator::from_rule(
    const MultiIndex& kappa, int image_nvars,
    const std::function<Polynomial(const MultiIndex&)>& rule) {
  MonomialOperator op;
  op.kappa = kappa;
  op.image_nvars = image_nvars;
  for_each_below(kappa, [&](const MultiIndex& a) {
    Polynomial img = rule(a);
    if (img.nvars() != image_nvars)
      throw std::invalid_argument("rule image has wrong arity");
    op.table.emplace(a, std::move(img));
  });
  return op;
}

Cplx DiagonalSequence::at(const MultiIndex& alpha) const {
  auto it = values.find(alpha);
  if (it == values.end())
    throw std::invalid_argument("diagonal sequence incomplete");
  return it->second;
}

bool DiagonalSequence::complete() const {
  bool ok = true;
  for_each_below(kappa, [&](const MultiIndex& a) {
    if (!values.count(a)) ok = false;
  });
  return ok;
}

MonomialOperator DiagonalSequence::as_operator() const {
  if (!complete()) throw std::invalid_argument("diagonal sequence incomplete");
  return MonomialOperator::from_rule(
      kappa, static_cast<int>(kappa.size()),
      [&](const MultiIndex& a) { return Polynomial::monomial(a, at(a)); });
}

DiagonalSequence DiagonalSequence::from_univariate(
    int kappa, std::span<const double> lambda) {
  if (static_cast<int>(lambda.size()) != kappa + 1)
    throw std::invalid_argument("need kappa+1 values");
  DiagonalSequence s;
  s.kappa = {kappa};
  for (int k = 0; k <= kappa; ++k) s.values[{k}] = lambda[k];
  return s;
}

Polynomial symmetrize(const Polynomial& f) {
  // Orbit averaging on sorted exponent signatures; never touches n!.
  const int n = f.nvars();
  std::map<MultiIndex, Cplx> orbit_sum;
  for (const auto& [a, c] : f.terms()) {
    MultiIndex key = a;
    std::sort(key.begin(), key.end());
    orbit_sum[key] += c;
  }
  Polynomial r(n);
  for (const auto& [key, sum] : orbit_sum) {
    double orbit = factorial(n);
    int run = 1;
    for (std::size_t i = 1; i <= key.size(); ++i) {
      if (i < key.size() && key[i] == key[i - 1]) {
        ++run;
      } else {
        orbit /= factorial(run);
        run = 1;
      }
    }
    const Cplx val = sum / orbit;
    MultiIndex perm = key;
    do {
      r.add_term(perm, val);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  r.prune();
  return r;
}

Polynomial transposition_average(const Polynomial& f,
                                 std::span<const int> sigma) {
  const int n = f.nvars();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permutation arity mismatch");
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  std::vector<int> cur = identity;
  Polynomial sum(n);
  int count = 0;
  do {
    sum += permute_variables(f, cur);
    ++count;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = sigma[cur[i]];
    cur = std::move(next);
  } while (cur != identity);
  sum *= Cplx(1.0 / count);
  return sum;
}

Polynomial partial_swap(const Polynomial& f, double p, int i, int j) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
  if (i == j) throw std::invalid_argument("indices must differ");
  std::vector<int> sigma(f.nvars());
  for (int k = 0; k < f.nvars(); ++k) sigma[k] = k;
  std::swap(sigma[i], sigma[j]);
  Polynomial r = permute_variables(f, sigma);
  r *= Cplx(1.0 - p);
  Polynomial fp = f;
  fp *= Cplx(p);
  r += fp;
  return r;
}

AveragingTrace iterate_transposition_averages(const Polynomial& f, int steps,
                                              std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  AveragingTrace tr;
  tr.result = f;
  tr.symmetry_indices.push_back(symmetry_index(f));
  const int n = f.nvars();
  Rng rng(seed);
  for (int s = 0; s < steps; ++s) {
    int i = 0, j = 0;
    if (n >= 2) {
      i = rng.uniform_int(0, n - 1);
      j = rng.uniform_int(0, n - 2);
      if (j >= i) ++j;
      tr.result = partial_swap(tr.result, 0.5, i, j);
    }
    tr.symmetry_indices.push_back(symmetry_index(tr.result));
  }
  return tr;
}

Polynomial polarize(const Polynomial& g, const MultiIndex& kappa) {
  const int n = g.nvars();
  if (static_cast<int>(kappa.size()) != n)
    throw std::invalid_argument("kappa arity mismatch");
  int big = 0;
  std::vector<int> offset(n);
  for (int i = 0; i < n; ++i) {
    if (kappa[i] < 1) throw std::invalid_argument("kappa entries must be >= 1");
    if (g.degree(i) > kappa[i])
      throw std::invalid_argument("degree exceeds kappa");
    offset[i] = big;
    big += kappa[i];
  }
  // Elementary symmetric polynomials per block, built once.
  std::vector<std::vector<Polynomial>> elem(n);
  for (int i = 0; i < n; ++i) {
    elem[i].assign(kappa[i] + 1, Polynomial(big));
    elem[i][0] = Polynomial::constant(big, 1.0);
    for (int v = 0; v < kappa[i]; ++v) {
      for (int m = std::min(v + 1, kappa[i]); m >= 1; --m) {
        Polynomial t = elem[i][m - 1] * Polynomial::variable(big, offset[i] + v);
        elem[i][m] += t;
      }
    }
  }
  Polynomial out(big);
  for (const auto& [a, c] : g.terms()) {
    Polynomial term = Polynomial::constant(big, c);
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      Polynomial e = elem[i][a[i]];
      e *= Cplx(1.0 / binom(kappa[i], a[i]));
      term *= e;
    }
    out += term;
  }
  out.prune();
  return out;
}

Polynomial block_diagonal(const Polynomial& f, const MultiIndex& kappa) {
  const int n = static_cast<int>(kappa.size());
  int big = 0;
  for (int k : kappa) big += k;
  if (f.nvars() != big)
    throw std::invalid_argument("variable count != sum of kappa");
  Polynomial out(n);
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b(n, 0);
    int off = 0;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < kappa[i]; ++k) b[i] += a[off + k];
      off += kappa[i];
    }
    out.add_term(b, c);
  }
  out.prune();
  return out;
}

Polynomial multiaffine_part(const Polynomial& f) {
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    bool keep = true;
    for (int e : a)
      if (e > 1) keep = false;
    if (keep) out.add_term(a, c);
  }
  return out;
}

Polynomial fold_mod2(const Polynomial& f, std::span<const int> vars) {
  std::vector<bool> fold(f.nvars(), vars.empty());
  for (int v : vars) fold.at(v) = true;
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b = a;
    for (int i = 0; i < f.nvars(); ++i)
      if (fold[i]) b[i] %= 2;
    out.add_term(b, c);
  }
  out.prune();
  return out;
}

Polynomial asano_contract(const Polynomial& f, int i, int j) {
  if (i == j) throw std::invalid_argument("indices must differ");
  if (f.degree(i) > 1 || f.degree(j) > 1)
    throw std::invalid_argument("polynomial not multi-affine in the two variables");
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (a[i] == 1 && a[j] == 1) {
      MultiIndex b = a;
      b[j] = 0;
      out.add_term(b, c);
    } else if (a[i] == 0 && a[j] == 0) {
      out.add_term(a, c);
    }
  }
  return out;
}

Polynomial schur_hadamard(const Polynomial& f, const Polynomial& g,
                          const MultiIndex& kappa) {
  if (f.nvars() != g.nvars() ||
      f.nvars() != static_cast<int>(kappa.size()))
    throw std::invalid_argument("arity mismatch");
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (!leq(a, kappa)) throw std::invalid_argument("degree exceeds kappa");
    const Cplx gc = g.coeff(a);
    if (gc == Cplx(0.0)) continue;
    out.add_term(a, c * gc / binom(kappa, a));
  }
  for (const auto& [a, c] : g.terms())
    if (!leq(a, kappa)) throw std::invalid_argument("degree exceeds kappa");
  out.prune();
  return out;
}

Polynomial convolution(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("arity mismatch");
  if (!f.is_multiaffine() || !g.is_multiaffine())
    throw std::invalid_argument("convolution needs multi-affine inputs");
  Polynomial out(f.nvars());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      MultiIndex d(a);
      for (std::size_t k = 0; k < d.size(); ++k) d[k] ^= b[k];
      out.add_term(d, ca * cb);
    }
  out.prune();
  return out;
}

Polynomial weyl_product(const Polynomial& f, const Polynomial& g,
                        std::span<const double> t) {
  if (f.nvars() != g.nvars() || f.nvars() % 2 != 0)
    throw std::invalid_argument("inputs must share an even variable count");
  const int n = f.nvars() / 2;
  if (static_cast<int>(t.size()) != n)
    throw std::invalid_argument("deformation vector arity mismatch");
  MultiIndex bound(n, 0);
  for (int i = 0; i < n; ++i)
    bound[i] = std::max(0, std::min(f.degree(i), g.degree(n + i)));
  Polynomial out(2 * n);
  for_each_below(bound, [&](const MultiIndex& alpha) {
    double coef = 1.0 / factorial(alpha);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < alpha[i]; ++k) coef *= -t[i];
    MultiIndex da(2 * n, 0), db(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      da[i] = alpha[i];
      db[n + i] = alpha[i];
    }
    Polynomial term = f.derivative(da) * g.derivative(db);
    term *= Cplx(coef);
    out += term;
  });
  out.prune();
  return out;
}

Polynomial debruijn_compose(const Polynomial& f, const Polynomial& g, double t) {
  if (f.nvars() != 1 || g.nvars() != 1)
    throw std::invalid_argument("univariate inputs required");
  const int kmax = std::min(f.degree(0), g.degree(0));
  Polynomial out(1);
  double tk = 1.0;
  for (int k = 0; k <= std::max(kmax, 0); ++k) {
    Polynomial term = f.derivative(0, k) * g.derivative(0, k);
    term *= Cplx(tk / factorial(k));
    out += term;
    tk *= t;
  }
  out.prune();
  return out;
}

namespace {

// Place a 2n-variable polynomial into a 4n-variable space at slot offset.
Polynomial embed(const Polynomial& f, int offset, int total) {
  Polynomial out(total);
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b(total, 0);
    for (std::size_t k = 0; k < a.size(); ++k) b[offset + k] = a[k];
    out.add_term(b, c);
  }
  return out;
}

// Keep only terms with zero exponents on [offset, offset+len).
Polynomial eval_block_zero(const Polynomial& f, int offset, int len) {
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    bool keep = true;
    for (int k = 0; k < len; ++k)
      if (a[offset + k] != 0) keep = false;
    if (keep) out.add_term(a, c);
  }
  return out;
}

}  // namespace

Polynomial master_compose(const Polynomial& f, const Polynomial& g,
                          const MultiIndex& kappa, ComposeVariant variant) {
  const int n = static_cast<int>(kappa.size());
  if (f.nvars() != 2 * n || g.nvars() != 2 * n)
    throw std::invalid_argument("inputs must have 2n variables");
  for (int i = 0; i < n; ++i) {
    if (f.degree(i) > kappa[i] || g.degree(i) > kappa[i])
      throw std::invalid_argument("degree bound exceeded");
  }
  Polynomial out(4 * n);
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    MultiIndex da(2 * n, 0), db(2 * n, 0);
    for (int i = 0; i < n; ++i) da[i] = alpha[i];
    double coef = 1.0;
    switch (variant) {
      case ComposeVariant::HalfPlaneTheta:
        for (int i = 0; i < n; ++i) db[i] = kappa[i] - alpha[i];
        break;
      case ComposeVariant::UpperHalfPlane:
        for (int i = 0; i < n; ++i) db[i] = alpha[i];
        coef = (total(alpha) % 2 == 0 ? 1.0 : -1.0) *
               factorial(sub(kappa, alpha)) / factorial(alpha);
        break;
      case ComposeVariant::Disk:
        for (int i = 0; i < n; ++i) db[i] = alpha[i];
        coef = factorial(sub(kappa, alpha)) / factorial(alpha);
        break;
    }
    Polynomial df = f.derivative(da);
    if (variant == ComposeVariant::Disk) df = eval_block_zero(df, 0, n);
    Polynomial term = embed(df, 0, 4 * n) * embed(g.derivative(db), 2 * n, 4 * n);
    term *= Cplx(coef);
    out += term;
  });
  out.prune();
  return out;
}

namespace {

// P_alpha(w) with the z-block cleared: coefficient of z^alpha divided by
// binom(kappa, alpha), exponents kept on the w slots.
Polynomial coefficient_slice(const Polynomial& f, const MultiIndex& alpha,
                             const MultiIndex& kappa) {
  const int n = static_cast<int>(kappa.size());
  Polynomial out(2 * n);
  for (const auto& [a, c] : f.terms()) {
    bool match = true;
    for (int i = 0; i < n; ++i)
      if (a[i] != alpha[i]) match = false;
    if (!match) continue;
    MultiIndex b(2 * n, 0);
    for (int i = 0; i < n; ++i) b[n + i] = a[n + i];
    out.add_term(b, c / binom(kappa, alpha));
  }
  return out;
}

// Swap the z and w blocks of a 2n-variable polynomial.
Polynomial swap_blocks(const Polynomial& f) {
  const int n = f.nvars() / 2;
  Polynomial out(2 * n);
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      b[i] = a[n + i];
      b[n + i] = a[i];
    }
    out.add_term(b, c);
  }
  return out;
}

}  // namespace

Polynomial coefficient_compose(const Polynomial& f, const Polynomial& g,
                               const MultiIndex& kappa, ComposeVariant variant) {
  const int n = static_cast<int>(kappa.size());
  if (f.nvars() != 2 * n || g.nvars() != 2 * n)
    throw std::invalid_argument("inputs must have 2n variables");
  for (int i = 0; i < n; ++i)
    if (f.degree(i) > kappa[i] || g.degree(n + i) > kappa[i])
      throw std::invalid_argument("degree bound exceeded");
  Polynomial out(2 * n);
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    const Polynomial p = coefficient_slice(f, alpha, kappa);  // on w slots
    MultiIndex beta = alpha;
    double coef = binom(kappa, alpha);
    if (variant == ComposeVariant::HalfPlaneTheta) beta = sub(kappa, alpha);
    if (variant == ComposeVariant::UpperHalfPlane && total(alpha) % 2 == 1)
      coef = -coef;
    // Q_beta(z): coefficient of w^beta in g, exponents on the z slots.
    const Polynomial q = swap_blocks(coefficient_slice(swap_blocks(g), beta, kappa));
    Polynomial term = p * q;
    term *= Cplx(coef);
    out += term;
  });
  out.prune();
  return out;
}

Polynomial coefficient_compose_derivative_route(const Polynomial& f,
                                                const Polynomial& g,
                                                const MultiIndex& kappa,
                                                ComposeVariant variant) {
  const int n = static_cast<int>(kappa.size());
  if (f.nvars() != 2 * n || g.nvars() != 2 * n)
    throw std::invalid_argument("inputs must have 2n variables");
  Polynomial out(2 * n);
  for_each_below(kappa, [&](const MultiIndex& alpha) {
    MultiIndex da(2 * n, 0), db(2 * n, 0);
    for (int i = 0; i < n; ++i) da[i] = alpha[i];
    double coef = 1.0 / factorial(kappa);
    switch (variant) {
      case ComposeVariant::HalfPlaneTheta:
        for (int i = 0; i < n; ++i) db[n + i] = kappa[i] - alpha[i];
        break;
      case ComposeVariant::UpperHalfPlane:
        for (int i = 0; i < n; ++i) db[n + i] = alpha[i];
        coef *= (total(alpha) % 2 == 0 ? 1.0 : -1.0) *
                factorial(sub(kappa, alpha)) / factorial(alpha);
        break;
      case ComposeVariant::Disk:
        for (int i = 0; i < n; ++i) db[n + i] = alpha[i];
        coef *= factorial(sub(kappa, alpha)) / factorial(alpha);
        break;
    }
    Polynomial df = eval_block_zero(f.derivative(da), 0, n);     // (0, w)
    Polynomial dg = eval_block_zero(g.derivative(db), n, n);     // (z, 0)
    Polynomial term = df * dg;
    term *= Cplx(coef);
    out += term;
  });
  out.prune();
  return out;
}

Polynomial apply_diff_operator(
    const std::map<MultiIndex, Polynomial, GradedLexLess>& spec,
    const Polynomial& f) {
  Polynomial out(f.nvars());
  for (const auto& [alpha, q] : spec) {
    if (q.nvars() != f.nvars())
      throw std::invalid_argument("coefficient polynomial arity mismatch");
    out += q * f.derivative(alpha);
  }
  out.prune();
  return out;
}

Polynomial hard_lieb_sokal(const Polynomial& f, LiebSokalVariant variant, int d) {
  if (f.nvars() < 2) throw std::invalid_argument("need at least two variables");
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  if (f.degree(0) > d || f.degree(1) > d)
    throw std::invalid_argument("degree bound violated");
  const double dfact = factorial(d);
  Polynomial out(f.nvars());
  if (variant == LiebSokalVariant::SumDerivative) {
    for (int k = 0; k <= d; ++k) {
      Polynomial t = f.derivative(0, k).derivative(1, d - k);
      t *= Cplx(1.0 / dfact);
      out += t;
    }
    out.prune();
    return out;
  }
  // Decompose f = sum_k z_1^k Q_k(z_2, ...).
  std::vector<Polynomial> q(d + 1, Polynomial(f.nvars()));
  for (const auto& [a, c] : f.terms()) {
    MultiIndex b = a;
    b[0] = 0;
    q[a[0]].add_term(b, c);
  }
  for (int k = 0; k <= d; ++k) {
    Polynomial t = variant == LiebSokalVariant::Collapse
                       ? q[k].derivative(1, d - k) * Cplx(factorial(k) / dfact)
                       : q[k].derivative(1, k) *
                             Cplx((k % 2 == 0 ? 1.0 : -1.0) *
                                  factorial(d - k) / dfact);
    out += t;
  }
  out.prune();
  return out;
}

Polynomial lieb_sokal_substitute(std::span<const Polynomial> ps,
                                 std::span<const Polynomial> qs) {
  if (ps.size() != qs.size()) throw std::invalid_argument("list length mismatch");
  if (ps.empty()) throw std::invalid_argument("empty lists");
  const int n = qs[0].nvars();
  Polynomial out(n);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].nvars() != n || qs[i].nvars() != n)
      throw std::invalid_argument("arity mismatch");
    for (const auto& [beta, c] : ps[i].terms()) {
      Polynomial t = qs[i].derivative(beta);
      t *= c;
      out += t;
    }
  }
  out.prune();
  return out;
}

Polynomial real_coefficient_part(const Polynomial& f) {
  Polynomial out(f.nvars());
  for (const auto& [a, c] : f.terms()) out.add_term(a, c.real());
  return out;
}

}  // namespace spoly
