#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace spoly {

// Exponent vector of a monomial z^alpha. Entries are non-negative.
using MultiIndex = std::vector<int>;

inline int total(const MultiIndex& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline bool leq(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

// Componentwise difference; caller guarantees a >= b.
inline MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r(a);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline double factorial(const MultiIndex& a) {
  double r = 1.0;
  for (int e : a) r *= factorial(e);
  return r;
}

inline double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Product of per-coordinate binomials; 0 unless alpha <= beta.
inline double binom(const MultiIndex& beta, const MultiIndex& alpha) {
  if (!leq(alpha, beta)) return 0.0;
  double r = 1.0;
  for (std::size_t i = 0; i < beta.size(); ++i) r *= binom(beta[i], alpha[i]);
  return r;
}

// Graded lexicographic order: total degree first, then lex.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int ta = total(a), tb = total(b);
    if (ta != tb) return ta < tb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Visits every alpha <= kappa in graded-lex-compatible enumeration order.
template <typename Fn>
void for_each_below(const MultiIndex& kappa, Fn&& fn) {
  MultiIndex a(kappa.size(), 0);
  for (;;) {
    fn(const_cast<const MultiIndex&>(a));
    std::size_t i = 0;
    while (i < a.size() && a[i] == kappa[i]) {
      a[i] = 0;
      ++i;
    }
    if (i == a.size()) return;
    ++a[i];
  }
}

}  // namespace spoly
