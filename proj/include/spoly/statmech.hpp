#pragma once

#include <optional>

#include "spoly/multiplier.hpp"
#include "spoly/polynomial.hpp"

namespace spoly {

// Loopless graph with nonnegative edge weights, vertices 1..n.
struct WeightedGraph {
  int n = 0;
  struct Edge {
    int i, j;  // 1-based, i < j
    double lambda;
  };
  std::vector<Edge> edges;

  void validate() const;
  MultiIndex degree_vector() const;

  // Lines "i j lambda"; '#' comments and blank lines skipped.
  static WeightedGraph from_text(const std::string& text);
  std::string to_text() const;
};

// Symmetric nonnegative coupling matrix.
struct CouplingMatrix {
  int n = 0;
  std::vector<double> j;  // row-major n*n
  double at(int r, int c) const { return j[r * n + c]; }
  void validate() const;
  static CouplingMatrix from_csv(const std::string& text);
};

// Hermitian matrix with entries in the closed unit disk.
struct HermitianContractionMatrix {
  int n = 0;
  std::vector<Cplx> a;  // row-major
  Cplx at(int r, int c) const { return a[r * n + c]; }
  void validate() const;
  static HermitianContractionMatrix from_csv(const std::string& text);
};

// Multiply the coefficient of w^S by e^{J} when i and j agree on S (both in
// or both out) and by e^{-J} otherwise. P must be multi-affine; i, j are
// 0-based variable indices.
Polynomial edge_reweight(const Polynomial& p, int i, int j, double coupling);

// Ising partition polynomial in the fugacities w_i = e^{-2 h_i}: coefficient
// of w^S is exp(sigma_S^T J sigma_S) where sigma_S flips the spins in S.
// Two independent routes; route equality is the oracle.
Polynomial ising_partition_brute(const CouplingMatrix& jm,
                                 bool force_serial = false);
Polynomial ising_partition_reweight(const CouplingMatrix& jm);

// Lee-Yang polynomial sum_S z^S prod_{i in S, j notin S} a_ij: direct subset
// route and the pairwise Schur-Hadamard route.
Polynomial lee_yang_circle_direct(const HermitianContractionMatrix& am,
                                  bool force_serial = false);
Polynomial lee_yang_circle_hadamard(const HermitianContractionMatrix& am);

// Matching polynomial sum over matchings of prod lambda_e z_i z_j; the
// second route takes the multi-affine part of prod (1 + lambda_e z_i z_j).
Polynomial matching_polynomial_enumerate(const WeightedGraph& g);
Polynomial matching_polynomial_map_route(const WeightedGraph& g);

// Degree-weighted subset expansion sum_{H subseteq E} lambda^H
// u(deg(V,H)) z^{deg(V,H)} with u(alpha) = prod u_i(alpha_i), and its
// univariate edge-count profile sum_k (sum_{|H|=k} ...) t^k.
struct WagnerResult {
  Polynomial multivariate;
  Polynomial univariate;
  std::vector<CoordinateAudit> vertex_audits;
  bool audits_pass = false;
};
WagnerResult wagner_polynomial(const WeightedGraph& g, const MultiIndex& kappa,
                               const std::vector<std::vector<double>>& u,
                               bool force_serial = false);

// 2 * Re(G(z + i*a) e^{i*b}) for real-rooted G: a real-rooted output.
// Throws when G is not real-rooted at tolerance 1e-8.
Polynomial hilfssatz_truncated(const Polynomial& g, double a, double b);

// Root table of a univariate restriction family: the diagonal z_i = t, or
// the axis family where only z_axis varies and the remaining coordinates sit
// at `fill`. Rows: (parameter, re, im, modulus) at each grid value, with the
// grid scaling the polynomial's coefficient parameter when `scan_scale` is
// set (diagonal scans use the plain diagonal, one row per root).
struct ZeroLocusRow {
  double parameter;
  double re, im, modulus;
};
std::vector<ZeroLocusRow> zero_locus_diagonal(const Polynomial& p);
std::vector<ZeroLocusRow> zero_locus_axis(const Polynomial& p, int axis,
                                          std::span<const double> grid,
                                          Cplx fill);
std::string zero_locus_csv(std::span<const ZeroLocusRow> rows);

}  // namespace spoly
