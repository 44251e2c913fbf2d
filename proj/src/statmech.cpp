#include "spoly/statmech.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "spoly/format.hpp"
#include "spoly/operators.hpp"
#include "spoly/roots.hpp"

namespace spoly {

void WeightedGraph::validate() const {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.i < 1 || e.j < 1 || e.i > n || e.j > n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.i == e.j) throw std::invalid_argument("loops are not allowed");
    if (e.lambda < 0) throw std::invalid_argument("negative edge weight");
    auto key = std::minmax(e.i, e.j);
    if (std::find(seen.begin(), seen.end(),
                  std::pair<int, int>(key.first, key.second)) != seen.end())
      throw std::invalid_argument("duplicate edge");
    seen.emplace_back(key.first, key.second);
  }
}

MultiIndex WeightedGraph::degree_vector() const {
  MultiIndex d(n, 0);
  for (const auto& e : edges) {
    ++d[e.i - 1];
    ++d[e.j - 1];
  }
  return d;
}

WeightedGraph WeightedGraph::from_text(const std::string& text) {
  WeightedGraph g;
  std::istringstream in(text);
  std::string line;
  int maxv = 0;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int i, j;
    double lambda;
    if (!(ls >> i >> j)) continue;
    if (!(ls >> lambda)) lambda = 1.0;
    if (i > j) std::swap(i, j);
    g.edges.push_back({i, j, lambda});
    maxv = std::max({maxv, i, j});
  }
  g.n = maxv;
  g.validate();
  return g;
}

std::string WeightedGraph::to_text() const {
  std::ostringstream os;
  for (const auto& e : edges)
    os << e.i << " " << e.j << " " << e.lambda << "\n";
  return os.str();
}

namespace {

std::vector<std::vector<std::string>> csv_cells(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

void CouplingMatrix::validate() const {
  if (static_cast<int>(j.size()) != n * n)
    throw std::invalid_argument("coupling matrix size mismatch");
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (at(r, c) < 0) throw std::invalid_argument("negative coupling");
      if (std::abs(at(r, c) - at(c, r)) > 1e-12)
        throw std::invalid_argument("coupling matrix not symmetric");
    }
}

CouplingMatrix CouplingMatrix::from_csv(const std::string& text) {
  const auto rows = csv_cells(text);
  CouplingMatrix m;
  m.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.n)
      throw std::invalid_argument("coupling matrix not square");
    for (const auto& cell : row) m.j.push_back(std::stod(cell));
  }
  m.validate();
  return m;
}

void HermitianContractionMatrix::validate() const {
  if (static_cast<int>(a.size()) != n * n)
    throw std::invalid_argument("matrix size mismatch");
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > 1e-12)
        throw std::invalid_argument("matrix not Hermitian");
      if (std::abs(at(r, c)) > 1.0 + 1e-12)
        throw std::invalid_argument("entry outside the closed unit disk");
    }
}

HermitianContractionMatrix HermitianContractionMatrix::from_csv(
    const std::string& text) {
  const auto rows = csv_cells(text);
  HermitianContractionMatrix m;
  m.n = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.n)
      throw std::invalid_argument("matrix not square");
    // cells use the complex-number grammar: a, a+bi, (a+bi)
    for (const auto& cell : row) m.a.push_back(parse_complex(cell));
  }
  m.validate();
  return m;
}

Polynomial edge_reweight(const Polynomial& p, int i, int j, double coupling) {
  if (!p.is_multiaffine())
    throw std::invalid_argument("edge reweight needs a multi-affine polynomial");
  if (coupling < 0) throw std::invalid_argument("negative coupling");
  const double up = std::exp(coupling), down = std::exp(-coupling);
  Polynomial out(p.nvars());
  for (const auto& [a, c] : p.terms())
    out.add_term(a, c * (a.at(i) == a.at(j) ? up : down));
  return out;
}

namespace {

constexpr int kSubsetBound = 24;

// sigma^T J sigma with sigma = -1 on the bits of S.
double spin_energy(const CouplingMatrix& jm, std::uint32_t s) {
  double e = 0.0;
  for (int r = 0; r < jm.n; ++r) {
    const double sr = (s >> r) & 1 ? -1.0 : 1.0;
    for (int c = 0; c < jm.n; ++c) {
      const double sc = (s >> c) & 1 ? -1.0 : 1.0;
      e += jm.at(r, c) * sr * sc;
    }
  }
  return e;
}

Polynomial from_subset_coeffs(int n, const std::vector<Cplx>& coef) {
  Polynomial out(n);
  for (std::uint32_t s = 0; s < coef.size(); ++s) {
    if (coef[s] == Cplx(0.0)) continue;
    MultiIndex a(n, 0);
    for (int i = 0; i < n; ++i) a[i] = (s >> i) & 1;
    out.add_term(a, coef[s]);
  }
  out.prune();
  return out;
}

}  // namespace

Polynomial ising_partition_brute(const CouplingMatrix& jm, bool force_serial) {
  jm.validate();
  if (jm.n > kSubsetBound)
    throw std::invalid_argument("brute-force route bounded at n <= 24");
  const std::uint32_t count = 1u << jm.n;
  std::vector<Cplx> coef(count);
  if (force_serial) {
    for (std::uint32_t s = 0; s < count; ++s)
      coef[s] = std::exp(spin_energy(jm, s));
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(count); ++s)
      coef[s] = std::exp(spin_energy(jm, static_cast<std::uint32_t>(s)));
  }
  return from_subset_coeffs(jm.n, coef);
}

Polynomial ising_partition_reweight(const CouplingMatrix& jm) {
  jm.validate();
  Polynomial p = Polynomial::constant(jm.n, 1.0);
  for (int i = 0; i < jm.n; ++i) {
    Polynomial f = Polynomial::constant(jm.n, 1.0);
    f += Polynomial::variable(jm.n, i);
    p *= f;
  }
  double diag = 0.0;
  for (int i = 0; i < jm.n; ++i) diag += jm.at(i, i);
  p *= Cplx(std::exp(diag));
  for (int i = 0; i < jm.n; ++i)
    for (int j = i + 1; j < jm.n; ++j)
      if (jm.at(i, j) != 0.0) p = edge_reweight(p, i, j, 2.0 * jm.at(i, j));
  return p;
}

Polynomial lee_yang_circle_direct(const HermitianContractionMatrix& am,
                                  bool force_serial) {
  am.validate();
  if (am.n > 20)
    throw std::invalid_argument("direct route bounded at n <= 20");
  const std::uint32_t count = 1u << am.n;
  std::vector<Cplx> coef(count);
  auto one = [&](std::uint32_t s) {
    Cplx prod = 1.0;
    for (int i = 0; i < am.n; ++i) {
      if (!((s >> i) & 1)) continue;
      for (int j = 0; j < am.n; ++j)
        if (!((s >> j) & 1)) prod *= am.at(i, j);
    }
    return prod;
  };
  if (force_serial) {
    for (std::uint32_t s = 0; s < count; ++s) coef[s] = one(s);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(count); ++s)
      coef[s] = one(static_cast<std::uint32_t>(s));
  }
  return from_subset_coeffs(am.n, coef);
}

Polynomial lee_yang_circle_hadamard(const HermitianContractionMatrix& am) {
  am.validate();
  const int n = am.n;
  const MultiIndex ones(n, 1);
  Polynomial acc(n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    MultiIndex a(n, 0);
    for (int i = 0; i < n; ++i) a[i] = (s >> i) & 1;
    acc.add_term(a, 1.0);  // Schur-Hadamard identity: all coefficients one
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Polynomial f(n);
      const Cplx aij = am.at(i, j);
      const std::uint32_t mask = (1u << i) | (1u << j);
      for (std::uint32_t s = 0; s < (1u << n); ++s) {
        MultiIndex a(n, 0);
        for (int k = 0; k < n; ++k) a[k] = (s >> k) & 1;
        Cplx c;
        switch (s & mask) {
          case 0u: c = 1.0; break;
          default:
            if ((s & mask) == mask)
              c = 1.0;
            else if ((s >> i) & 1)
              c = aij;
            else
              c = std::conj(aij);
        }
        f.add_term(a, c);
      }
      acc = schur_hadamard(acc, f, ones);
    }
  return acc;
}

Polynomial matching_polynomial_enumerate(const WeightedGraph& g) {
  g.validate();
  Polynomial out(std::max(g.n, 1));
  std::vector<bool> used(g.n + 1, false);
  MultiIndex expo(std::max(g.n, 1), 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t k, double w) {
    if (k == g.edges.size()) {
      out.add_term(expo, w);
      return;
    }
    rec(k + 1, w);  // skip edge k
    const auto& e = g.edges[k];
    if (!used[e.i] && !used[e.j] && e.lambda != 0.0) {
      used[e.i] = used[e.j] = true;
      expo[e.i - 1] = expo[e.j - 1] = 1;
      rec(k + 1, w * e.lambda);
      used[e.i] = used[e.j] = false;
      expo[e.i - 1] = expo[e.j - 1] = 0;
    }
  };
  rec(0, 1.0);
  out.prune();
  return out;
}

Polynomial matching_polynomial_map_route(const WeightedGraph& g) {
  g.validate();
  const int n = std::max(g.n, 1);
  Polynomial prod = Polynomial::constant(n, 1.0);
  for (const auto& e : g.edges) {
    Polynomial f = Polynomial::constant(n, 1.0);
    MultiIndex a(n, 0);
    a[e.i - 1] = 1;
    a[e.j - 1] = 1;
    f.add_term(a, e.lambda);
    prod *= f;
  }
  return multiaffine_part(prod);
}

WagnerResult wagner_polynomial(const WeightedGraph& g, const MultiIndex& kappa,
                               const std::vector<std::vector<double>>& u,
                               bool force_serial) {
  g.validate();
  if (static_cast<int>(kappa.size()) != g.n ||
      static_cast<int>(u.size()) != g.n)
    throw std::invalid_argument("kappa / u arity mismatch");
  const MultiIndex degs = g.degree_vector();
  if (!leq(degs, kappa))
    throw std::invalid_argument("graph degree vector exceeds kappa");
  for (int i = 0; i < g.n; ++i)
    if (static_cast<int>(u[i].size()) != kappa[i] + 1)
      throw std::invalid_argument("u_i needs kappa_i + 1 values");
  const int m = static_cast<int>(g.edges.size());
  if (m > kSubsetBound)
    throw std::invalid_argument("subset expansion bounded at |E| <= 24");

  WagnerResult res;
  res.audits_pass = true;
  for (int i = 0; i < g.n; ++i) {
    res.vertex_audits.push_back(audit_coordinate_sequence(kappa[i], u[i]));
    if (!res.vertex_audits.back().pass) res.audits_pass = false;
  }

  const std::uint32_t count = 1u << m;
  struct Chunk {
    std::map<MultiIndex, Cplx, GradedLexLess> terms;
    std::vector<double> by_size;
  };
  constexpr std::uint32_t kChunk = 4096;
  const std::uint32_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<Chunk> chunks(nchunks);

  auto run_chunk = [&](std::uint32_t ci) {
    Chunk& ch = chunks[ci];
    ch.by_size.assign(m + 1, 0.0);
    MultiIndex deg(g.n, 0);
    for (std::uint32_t h = ci * kChunk;
         h < std::min(count, (ci + 1) * kChunk); ++h) {
      std::fill(deg.begin(), deg.end(), 0);
      double lam = 1.0;
      int size = 0;
      for (int e = 0; e < m; ++e) {
        if (!((h >> e) & 1)) continue;
        ++deg[g.edges[e].i - 1];
        ++deg[g.edges[e].j - 1];
        lam *= g.edges[e].lambda;
        ++size;
      }
      double uval = 1.0;
      for (int i = 0; i < g.n; ++i) uval *= u[i][deg[i]];
      const double w = lam * uval;
      if (w != 0.0) ch.terms[deg] += w;
      ch.by_size[size] += w;
    }
  };
  if (force_serial) {
    for (std::uint32_t ci = 0; ci < nchunks; ++ci) run_chunk(ci);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(nchunks); ++ci)
      run_chunk(static_cast<std::uint32_t>(ci));
  }

  // Deterministic merge in chunk order.
  Polynomial multi(g.n);
  std::vector<double> by_size(m + 1, 0.0);
  for (const Chunk& ch : chunks) {
    for (const auto& [a, c] : ch.terms) multi.add_term(a, c);
    for (int k = 0; k <= m; ++k) by_size[k] += ch.by_size[k];
  }
  multi.prune();
  res.multivariate = multi;
  res.univariate = Polynomial(1);
  for (int k = 0; k <= m; ++k) res.univariate.add_term({k}, by_size[k]);
  res.univariate.prune();
  return res;
}

Polynomial hilfssatz_truncated(const Polynomial& g, double a, double b) {
  if (g.nvars() != 1) throw std::invalid_argument("univariate input required");
  if (a <= 0) throw std::invalid_argument("a must be > 0");
  if (g.is_zero()) throw std::invalid_argument("zero polynomial");
  if (g.degree(0) >= 1) {
    const auto roots = univariate_roots(g);
    if (!all_roots_real(roots, 1e-8))
      throw std::invalid_argument("input is not real-rooted");
  }
  // G(z + i a): line restriction with base ia, direction 1.
  const std::vector<Cplx> base{Cplx(0.0, a)}, dir{1.0};
  Polynomial shifted = g.restrict_line(base, dir);
  shifted *= std::polar(1.0, b);
  Polynomial out = real_coefficient_part(shifted);
  out *= Cplx(2.0);
  return out;
}

std::vector<ZeroLocusRow> zero_locus_diagonal(const Polynomial& p) {
  std::vector<Cplx> base(p.nvars(), 0.0), dir(p.nvars(), 1.0);
  Polynomial diag = p.restrict_line(base, dir);
  std::vector<ZeroLocusRow> rows;
  if (diag.is_zero() || diag.degree(0) < 1) return rows;
  int idx = 0;
  for (const Cplx& r : univariate_roots(diag))
    rows.push_back({static_cast<double>(idx++), r.real(), r.imag(), std::abs(r)});
  return rows;
}

std::vector<ZeroLocusRow> zero_locus_axis(const Polynomial& p, int axis,
                                          std::span<const double> grid,
                                          Cplx fill) {
  if (axis < 0 || axis >= p.nvars()) throw std::out_of_range("axis");
  std::vector<ZeroLocusRow> rows;
  const FlatPoly fp(p);
  std::vector<Cplx> pt(p.nvars());
  std::vector<Cplx> coeffs;
  for (double s : grid) {
    for (int i = 0; i < p.nvars(); ++i) pt[i] = fill * s;
    fp.slice(axis, pt.data(), coeffs);
    double cs = 0.0;
    for (const Cplx& c : coeffs) cs = std::max(cs, std::abs(c));
    if (cs == 0.0 || coeffs.size() < 2) continue;
    for (const Cplx& r : univariate_roots(coeffs))
      rows.push_back({s, r.real(), r.imag(), std::abs(r)});
  }
  return rows;
}

std::string zero_locus_csv(std::span<const ZeroLocusRow> rows) {
  std::ostringstream os;
  os << "parameter,re,im,modulus\n";
  os.precision(17);
  for (const auto& r : rows)
    os << r.parameter << "," << r.re << "," << r.im << "," << r.modulus << "\n";
  return os.str();
}

}  // namespace spoly
