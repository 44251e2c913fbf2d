#include "spoly/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace spoly {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("polynomial needs nvars >= 1");
}

Polynomial Polynomial::constant(int nvars, Cplx c) {
  Polynomial f(nvars);
  f.add_term(MultiIndex(nvars, 0), c);
  return f;
}

Polynomial Polynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  Polynomial f(nvars);
  MultiIndex a(nvars, 0);
  a[i] = 1;
  f.add_term(a, 1.0);
  return f;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, Cplx c) {
  Polynomial f(static_cast<int>(alpha.size()));
  f.add_term(alpha, c);
  return f;
}

Polynomial Polynomial::from_univariate_coeffs(std::span<const Cplx> coeffs) {
  Polynomial f(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    f.add_term({static_cast<int>(k)}, coeffs[k]);
  return f;
}

Cplx Polynomial::coeff(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Cplx(0.0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, Cplx c) {
  if (static_cast<int>(alpha.size()) != nvars_)
    throw std::invalid_argument("multi-index length != nvars");
  for (int e : alpha)
    if (e < 0) throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) < kEpsZero) terms_.erase(it);
}

void Polynomial::check_same_space(const Polynomial& g) const {
  if (nvars_ != g.nvars_)
    throw std::invalid_argument("variable-count mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  check_same_space(g);
  for (const auto& [a, c] : g.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  check_same_space(g);
  for (const auto& [a, c] : g.terms_) add_term(a, -c);
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_same_space(g);
  Polynomial r(f.nvars_);
  for (const auto& [a, ca] : f.terms_)
    for (const auto& [b, cb] : g.terms_) r.add_term(add(a, b), ca * cb);
  r.prune();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  *this = *this * g;
  return *this;
}

Polynomial& Polynomial::operator*=(Cplx s) {
  if (std::abs(s) < kEpsZero) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  prune();
  return *this;
}

bool Polynomial::operator==(const Polynomial& g) const {
  return nvars_ == g.nvars_ && terms_ == g.terms_;
}

Cplx Polynomial::evaluate(std::span<const Cplx> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("point length != nvars");
  Cplx s = 0.0;
  for (const auto& [a, c] : terms_) {
    Cplx m = c;
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < a[i]; ++e) m *= point[i];
    s += m;
  }
  return s;
}

Polynomial Polynomial::derivative(int var, int order) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("variable index");
  if (order < 0) throw std::invalid_argument("negative derivative order");
  Polynomial r(nvars_);
  for (const auto& [a, c] : terms_) {
    if (a[var] < order) continue;
    double fall = 1.0;
    for (int k = 0; k < order; ++k) fall *= a[var] - k;
    MultiIndex b = a;
    b[var] -= order;
    r.add_term(b, c * fall);
  }
  return r;
}

Polynomial Polynomial::derivative(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != nvars_)
    throw std::invalid_argument("multi-index length != nvars");
  Polynomial r = *this;
  for (int i = 0; i < nvars_; ++i)
    if (alpha[i] > 0) r = r.derivative(i, alpha[i]);
  return r;
}

int Polynomial::degree(int var) const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, a[var]);
  return d;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return total(terms_.rbegin()->first);  // graded order: last term is maximal
}

MultiIndex Polynomial::degree_vector() const {
  if (terms_.empty())
    throw std::domain_error("degree vector of the zero polynomial");
  MultiIndex d(nvars_, 0);
  for (const auto& [a, c] : terms_)
    for (int i = 0; i < nvars_; ++i) d[i] = std::max(d[i], a[i]);
  return d;
}

bool Polynomial::is_multiaffine() const {
  for (const auto& [a, c] : terms_)
    for (int e : a)
      if (e > 1) return false;
  return true;
}

bool Polynomial::has_real_coeffs(double tol) const {
  for (const auto& [a, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

double Polynomial::max_coeff_magnitude() const {
  double m = 0.0;
  for (const auto& [a, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::homogeneous_part() const {
  if (terms_.empty())
    throw std::domain_error("homogeneous part of the zero polynomial");
  const int d = total_degree();
  Polynomial r(nvars_);
  for (const auto& [a, c] : terms_)
    if (total(a) == d) r.add_term(a, c);
  return r;
}

Polynomial Polynomial::restrict_line(std::span<const Cplx> base,
                                     std::span<const Cplx> dir) const {
  if (static_cast<int>(base.size()) != nvars_ ||
      static_cast<int>(dir.size()) != nvars_)
    throw std::invalid_argument("line vectors must have length nvars");
  FlatPoly fp(*this);
  std::vector<Cplx> coeffs;
  fp.line(base.data(), dir.data(), coeffs);
  Polynomial r = Polynomial::from_univariate_coeffs(coeffs);
  r.prune();
  return r;
}

std::vector<Cplx> Polynomial::univariate_coeffs() const {
  if (nvars_ != 1) throw std::invalid_argument("not univariate");
  std::vector<Cplx> c(static_cast<std::size_t>(std::max(0, degree(0)) + 1), 0.0);
  for (const auto& [a, v] : terms_) c[a[0]] = v;
  return c;
}

void Polynomial::prune(double eps) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = std::abs(it->second) < eps ? terms_.erase(it) : std::next(it);
}

Polynomial permute_variables(const Polynomial& f, std::span<const int> sigma) {
  const int n = f.nvars();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permutation length != nvars");
  Polynomial r(n);
  for (const auto& [a, c] : f.terms()) {
    // beta[sigma[i]] = a[i]: variable z_{sigma(i)} takes the old exponent.
    MultiIndex b(n, 0);
    for (int i = 0; i < n; ++i) b[sigma[i]] = a[i];
    r.add_term(b, c);
  }
  return r;
}

double symmetry_index(const Polynomial& f) {
  // Group support by sorted exponent signature. Monomials of the orbit
  // outside the support count as zero coefficients; the orbit size is
  // n!/(prod multiplicity!) and is never enumerated.
  std::map<MultiIndex, std::vector<Cplx>> groups;
  for (const auto& [a, c] : f.terms()) {
    MultiIndex key = a;
    std::sort(key.begin(), key.end());
    groups[key].push_back(c);
  }
  const int n = f.nvars();
  double s = 0.0;
  for (const auto& [key, coeffs] : groups) {
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
    const double zeros = orbit - static_cast<double>(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      for (std::size_t j = i + 1; j < coeffs.size(); ++j)
        s += std::abs(coeffs[i].real() - coeffs[j].real()) +
             std::abs(coeffs[i].imag() - coeffs[j].imag());
      s += zeros * (std::abs(coeffs[i].real()) + std::abs(coeffs[i].imag()));
    }
  }
  return s;
}

FlatPoly::FlatPoly(const Polynomial& f) : nvars(f.nvars()) {
  expo.reserve(f.term_count() * nvars);
  coef.reserve(f.term_count());
  for (const auto& [a, c] : f.terms()) {
    expo.insert(expo.end(), a.begin(), a.end());
    coef.push_back(c);
    scale = std::max(scale, std::abs(c));
  }
}

Cplx FlatPoly::eval(const Cplx* pt) const {
  Cplx s = 0.0;
  const int* e = expo.data();
  for (std::size_t t = 0; t < coef.size(); ++t, e += nvars) {
    Cplx m = coef[t];
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) m *= pt[i];
    s += m;
  }
  return s;
}

void FlatPoly::slice(int var, const Cplx* pt, std::vector<Cplx>& out) const {
  int deg = 0;
  {
    const int* e = expo.data();
    for (std::size_t t = 0; t < coef.size(); ++t, e += nvars)
      deg = std::max(deg, e[var]);
  }
  out.assign(static_cast<std::size_t>(deg) + 1, 0.0);
  const int* e = expo.data();
  for (std::size_t t = 0; t < coef.size(); ++t, e += nvars) {
    Cplx m = coef[t];
    for (int i = 0; i < nvars; ++i) {
      if (i == var) continue;
      for (int k = 0; k < e[i]; ++k) m *= pt[i];
    }
    out[e[var]] += m;
  }
}

void FlatPoly::line(const Cplx* base, const Cplx* dir,
                    std::vector<Cplx>& out) const {
  int deg = 0;
  {
    const int* e = expo.data();
    for (std::size_t t = 0; t < coef.size(); ++t, e += nvars) {
      int d = 0;
      for (int i = 0; i < nvars; ++i) d += e[i];
      deg = std::max(deg, d);
    }
  }
  out.assign(static_cast<std::size_t>(deg) + 1, 0.0);
  std::vector<Cplx> acc, next;
  acc.reserve(out.size());
  next.reserve(out.size());
  const int* e = expo.data();
  for (std::size_t t = 0; t < coef.size(); ++t, e += nvars) {
    acc.assign(1, coef[t]);
    for (int i = 0; i < nvars; ++i) {
      for (int k = 0; k < e[i]; ++k) {
        // multiply acc by (base[i] + t*dir[i])
        next.assign(acc.size() + 1, 0.0);
        for (std::size_t j = 0; j < acc.size(); ++j) {
          next[j] += acc[j] * base[i];
          next[j + 1] += acc[j] * dir[i];
        }
        acc.swap(next);
      }
    }
    for (std::size_t j = 0; j < acc.size(); ++j) out[j] += acc[j];
  }
}

}  // namespace spoly
