#pragma once

#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spoly/multiindex.hpp"

namespace spoly {

using Cplx = std::complex<double>;

// Coefficients with magnitude below this are dropped after every ring
// operation so that term sets stay canonical.
inline constexpr double kEpsZero = 1e-12;

// Sparse multivariate polynomial over complex doubles. Terms are kept in a
// graded-lexicographic map, which makes serialization and reductions
// bit-stable. Values are immutable in spirit: operations return new
// polynomials and never share state, so instances can be read concurrently.
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, Cplx, GradedLexLess>;

  Polynomial() : nvars_(1) {}
  explicit Polynomial(int nvars);

  static Polynomial zero(int nvars) { return Polynomial(nvars); }
  static Polynomial constant(int nvars, Cplx c);
  static Polynomial variable(int nvars, int i);  // z_i, 0-based
  static Polynomial monomial(const MultiIndex& alpha, Cplx c);
  static Polynomial from_univariate_coeffs(std::span<const Cplx> coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Cplx coeff(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, Cplx c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(Cplx s);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Cplx s, Polynomial f) { return f *= s; }
  friend Polynomial operator*(Polynomial f, Cplx s) { return f *= s; }
  bool operator==(const Polynomial& g) const;

  Cplx evaluate(std::span<const Cplx> point) const;

  Polynomial derivative(int var, int order = 1) const;
  Polynomial derivative(const MultiIndex& alpha) const;

  // Degree in one variable; -1 for the zero polynomial.
  int degree(int var) const;
  int total_degree() const;  // -1 for zero
  // Throws std::domain_error on the zero polynomial (no degree vector).
  MultiIndex degree_vector() const;

  bool is_multiaffine() const;
  bool has_real_coeffs(double tol = kEpsZero) const;
  double max_coeff_magnitude() const;  // scale(f); 0 for the zero polynomial

  // Terms of maximal total degree. Throws std::domain_error on zero input.
  Polynomial homogeneous_part() const;

  // Univariate polynomial t -> f(base + t*dir).
  Polynomial restrict_line(std::span<const Cplx> base,
                           std::span<const Cplx> dir) const;

  // Dense coefficient list c0..cd; requires nvars == 1.
  std::vector<Cplx> univariate_coeffs() const;

  void prune(double eps = kEpsZero);

 private:
  void check_same_space(const Polynomial& g) const;
  int nvars_;
  TermMap terms_;
};

// sigma(f)(z_1,...,z_n) = f(z_{sigma[0]}, ..., z_{sigma[n-1]}), 0-based.
Polynomial permute_variables(const Polynomial& f, std::span<const int> sigma);

// Total coefficient discrepancy over unordered pairs of rearrangement-
// equivalent exponent vectors; zero exactly for symmetric polynomials.
// Real and imaginary parts contribute separately.
double symmetry_index(const Polynomial& f);

// Flattened read-only view used by evaluation-heavy loops (falsifier,
// root scans). Exponents are stored contiguously per term.
struct FlatPoly {
  int nvars = 0;
  std::vector<int> expo;   // term-major, nvars entries per term
  std::vector<Cplx> coef;  // one per term
  double scale = 0.0;

  FlatPoly() = default;
  explicit FlatPoly(const Polynomial& f);

  std::size_t term_count() const { return coef.size(); }
  Cplx eval(const Cplx* pt) const;

  // Coefficients of the univariate polynomial in z_var obtained by fixing
  // the remaining coordinates at pt (pt[var] is ignored).
  void slice(int var, const Cplx* pt, std::vector<Cplx>& out) const;

  // Coefficients of t -> f(base + t*dir).
  void line(const Cplx* base, const Cplx* dir, std::vector<Cplx>& out) const;
};

}  // namespace spoly
