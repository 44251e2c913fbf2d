#include "spoly/generators.hpp"

#include <cmath>

namespace spoly {

namespace {

Polynomial affine_form(Rng& rng, int nvars, std::span<const int> active,
                       Cplx constant) {
  Polynomial f = Polynomial::constant(nvars, constant);
  for (int j : active) {
    MultiIndex a(nvars, 0);
    a[j] = 1;
    f.add_term(a, rng.uniform(0.1, 1.5));
  }
  return f;
}

std::vector<int> all_vars(int nvars) {
  std::vector<int> v(nvars);
  for (int i = 0; i < nvars; ++i) v[i] = i;
  return v;
}

}  // namespace

Polynomial random_upper_stable(Rng& rng, int nvars, int factors, double margin) {
  Polynomial f = Polynomial::constant(nvars, 1.0);
  const auto vars = all_vars(nvars);
  for (int k = 0; k < factors; ++k) {
    const Cplx a(rng.uniform(-1.0, 1.0), margin + rng.uniform(0.0, 1.0));
    f *= affine_form(rng, nvars, vars, a);
  }
  return f;
}

Polynomial random_real_stable(Rng& rng, int nvars, int factors) {
  Polynomial f = Polynomial::constant(nvars, 1.0);
  const auto vars = all_vars(nvars);
  for (int k = 0; k < factors; ++k)
    f *= affine_form(rng, nvars, vars, Cplx(rng.uniform(-1.5, 1.5), 0.0));
  return f;
}

Polynomial random_hurwitz_stable(Rng& rng, int nvars, int factors,
                                 double margin) {
  Polynomial f = Polynomial::constant(nvars, 1.0);
  const auto vars = all_vars(nvars);
  for (int k = 0; k < factors; ++k)
    f *= affine_form(rng, nvars, vars,
                     Cplx(margin + rng.uniform(0.0, 1.2), rng.uniform(-0.5, 0.5)));
  return f;
}

namespace {

// Each variable lands in exactly one factor, so the product is multi-affine.
Polynomial partition_product(Rng& rng, int nvars,
                             const std::function<Cplx()>& constant) {
  std::vector<std::vector<int>> blocks;
  for (int j = 0; j < nvars; ++j) {
    if (blocks.empty() || rng.uniform01() < 0.5)
      blocks.push_back({j});
    else
      blocks[rng.uniform_int(0, static_cast<int>(blocks.size()) - 1)].push_back(j);
  }
  Polynomial f = Polynomial::constant(nvars, 1.0);
  for (const auto& blk : blocks) f *= affine_form(rng, nvars, blk, constant());
  return f;
}

}  // namespace

Polynomial random_multiaffine_upper_stable(Rng& rng, int nvars, double margin) {
  return partition_product(rng, nvars, [&] {
    return Cplx(rng.uniform(-1.0, 1.0), margin + rng.uniform(0.05, 1.0));
  });
}

Polynomial random_multiaffine_hurwitz_stable(Rng& rng, int nvars) {
  return partition_product(rng, nvars, [&] {
    return Cplx(rng.uniform(0.1, 1.2), rng.uniform(-0.5, 0.5));
  });
}

Polynomial random_disk_stable(Rng& rng, const MultiIndex& kappa) {
  const int n = static_cast<int>(kappa.size());
  // Build an upper-stable product whose per-variable degrees respect kappa.
  Polynomial f = Polynomial::constant(n, 1.0);
  MultiIndex deg(n, 0);
  for (;;) {
    std::vector<int> open;
    for (int j = 0; j < n; ++j)
      if (deg[j] < kappa[j]) open.push_back(j);
    if (open.empty()) break;
    std::vector<int> chosen;
    for (int j : open)
      if (chosen.empty() || rng.uniform01() < 0.7) chosen.push_back(j);
    for (int j : chosen) ++deg[j];
    f *= affine_form(rng, n, chosen,
                     Cplx(rng.uniform(-1.0, 1.0), rng.uniform(0.05, 1.0)));
    if (rng.uniform01() < 0.25) break;  // allow degrees strictly below kappa
  }
  const MoebiusMap to_upper =
      MoebiusMap::unit_disk_to(CircularDomain::upper_half_plane());
  std::vector<MoebiusMap> maps(n, to_upper);
  return mobius_transform(f, maps, kappa);
}

Polynomial random_multiaffine_disk_stable(Rng& rng, int nvars) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Polynomial f = random_multiaffine_upper_stable(rng, nvars, 0.05);
    const MoebiusMap to_upper =
        MoebiusMap::unit_disk_to(CircularDomain::upper_half_plane());
    std::vector<MoebiusMap> maps(nvars, to_upper);
    Polynomial g = mobius_transform(f, maps, MultiIndex(nvars, 1));
    bool full = true;  // keep the family usable for degree reversal
    for (int j = 0; j < nvars && full; ++j)
      if (g.degree(j) < 1) full = false;
    if (full) return g;
  }
  throw std::runtime_error("disk-stable generator kept degenerating");
}

Polynomial random_multiaffine_exterior_stable(Rng& rng, int nvars) {
  return reverse_degrees(random_multiaffine_disk_stable(rng, nvars),
                         MultiIndex(nvars, 1));
}

Polynomial random_real_rooted(Rng& rng, int degree) {
  Polynomial f = Polynomial::constant(1, rng.uniform(0.5, 2.0));
  for (int k = 0; k < degree; ++k) {
    Polynomial lin(1);
    lin.add_term({0}, -2.0 * rng.normal());
    lin.add_term({1}, 1.0);
    f *= lin;
  }
  return f;
}

Polynomial random_real_rooted_nonpositive(Rng& rng, int degree, double margin) {
  Polynomial f = Polynomial::constant(1, rng.uniform(0.5, 2.0));
  for (int k = 0; k < degree; ++k) {
    Polynomial lin(1);
    lin.add_term({0}, margin + rng.exponential());
    lin.add_term({1}, 1.0);
    f *= lin;
  }
  return f;
}

Polynomial random_stable_diagonal(Rng& rng, int n, int maxdeg) {
  Polynomial f = Polynomial::constant(2 * n, Cplx(rng.uniform(0.5, 2.0),
                                                  rng.uniform(-0.5, 0.5)));
  for (int i = 0; i < n; ++i) {
    const int d = rng.uniform_int(1, maxdeg);
    Polynomial fi = Polynomial::constant(2 * n, 1.0);
    for (int k = 0; k < d; ++k) {
      // factor (z_i w_i - r) with r >= 0
      Polynomial lin(2 * n);
      MultiIndex a(2 * n, 0);
      a[i] = 1;
      a[n + i] = 1;
      lin.add_term(a, 1.0);
      lin.add_term(MultiIndex(2 * n, 0), -rng.exponential());
      fi *= lin;
    }
    f *= fi;
  }
  return f;
}

}  // namespace spoly
