#include "spoly/domains.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace spoly {

CircularDomain CircularDomain::half_plane(double theta, bool closed) {
  CircularDomain d;
  d.kind_ = Kind::HalfPlane;
  d.theta_ = std::fmod(std::fmod(theta, 2 * std::numbers::pi) + 2 * std::numbers::pi,
                       2 * std::numbers::pi);
  d.closed_ = closed;
  return d;
}

CircularDomain CircularDomain::right_half_plane() {
  return half_plane(std::numbers::pi / 2);
}

CircularDomain CircularDomain::disk(Cplx center, double radius, bool closed) {
  if (radius <= 0) throw std::invalid_argument("disk radius must be > 0");
  CircularDomain d;
  d.kind_ = Kind::Disk;
  d.center_ = center;
  d.radius_ = radius;
  d.closed_ = closed;
  return d;
}

CircularDomain CircularDomain::disk_exterior(Cplx center, double radius,
                                             bool closed) {
  CircularDomain d = disk(center, radius, closed);
  d.kind_ = Kind::DiskExterior;
  return d;
}

double CircularDomain::inside_depth(Cplx p) const {
  switch (kind_) {
    case Kind::HalfPlane:
      return (std::polar(1.0, theta_) * p).imag();
    case Kind::Disk:
      return radius_ - std::abs(p - center_);
    case Kind::DiskExterior:
      return std::abs(p - center_) - radius_;
  }
  return 0.0;
}

bool CircularDomain::contains(Cplx p, double eps) const {
  const double d = inside_depth(p);
  return closed_ ? d >= -eps : d > eps;
}

Cplx CircularDomain::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::HalfPlane: {
      // Cauchy spread along the boundary, exponential depth into the domain.
      const double x = rng.cauchy();
      const double y = 1e-6 + rng.exponential();
      return std::polar(1.0, -theta_) * Cplx(x, y);
    }
    case Kind::Disk: {
      // Uniform on the concentric sub-disk of radius r*(1 - 1e-6).
      const double r = radius_ * (1.0 - 1e-6) * std::sqrt(rng.uniform01());
      const double phi = 2 * std::numbers::pi * rng.uniform01();
      return center_ + std::polar(r, phi);
    }
    case Kind::DiskExterior: {
      // Inversion of the disk sampler, with |q| capped so the open-domain
      // margin stays above the boundary tolerance.
      const double q = std::max(1e-3, (1.0 - 1e-3) * std::sqrt(rng.uniform01()));
      const double phi = 2 * std::numbers::pi * rng.uniform01();
      return center_ + std::polar(radius_ / q, phi);
    }
  }
  return 0.0;
}

CircularDomain CircularDomain::complement() const {
  switch (kind_) {
    case Kind::HalfPlane:
      return half_plane(theta_ + std::numbers::pi, !closed_);
    case Kind::Disk:
      return disk_exterior(center_, radius_, !closed_);
    case Kind::DiskExterior:
      return disk(center_, radius_, !closed_);
  }
  return *this;
}

std::string CircularDomain::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::HalfPlane:
      os << "halfplane:" << theta_;
      break;
    case Kind::Disk:
      os << "disk:" << center_.real() << "," << center_.imag() << ","
         << radius_;
      break;
    case Kind::DiskExterior:
      os << "exterior:" << center_.real() << "," << center_.imag() << ","
         << radius_;
      break;
  }
  os << (closed_ ? ":closed" : ":open");
  return os.str();
}

bool DomainProduct::contains(std::span<const Cplx> p, double eps) const {
  if (p.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i].contains(p[i], eps)) return false;
  return true;
}

std::vector<Cplx> DomainProduct::sample(Rng& rng) const {
  std::vector<Cplx> p(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    p[i] = factors_[i].sample(rng);
  return p;
}

bool DomainProduct::all_half_planes() const {
  for (const auto& d : factors_)
    if (d.kind() != CircularDomain::Kind::HalfPlane) return false;
  return !factors_.empty();
}

std::string DomainProduct::describe() const {
  std::string out;
  for (const auto& d : factors_) {
    if (!out.empty()) out += ";";
    out += d.describe();
  }
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

CircularDomain parse_domain(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.empty()) throw std::invalid_argument("empty domain literal");
  bool closed = false;
  if (parts.back() == "open" || parts.back() == "closed") {
    closed = parts.back() == "closed";
    parts.pop_back();
  }
  if (parts.size() != 2)
    throw std::invalid_argument("bad domain literal: " + text);
  const auto nums = split(parts[1], ',');
  auto num = [&](std::size_t i) { return std::stod(nums.at(i)); };
  if (parts[0] == "halfplane") {
    if (nums.size() != 1) throw std::invalid_argument("halfplane:<theta>");
    return CircularDomain::half_plane(num(0), closed);
  }
  if (parts[0] == "disk") {
    if (nums.size() != 3) throw std::invalid_argument("disk:<cx>,<cy>,<r>");
    return CircularDomain::disk({num(0), num(1)}, num(2), closed);
  }
  if (parts[0] == "exterior") {
    if (nums.size() != 3) throw std::invalid_argument("exterior:<cx>,<cy>,<r>");
    return CircularDomain::disk_exterior({num(0), num(1)}, num(2), closed);
  }
  throw std::invalid_argument("unknown domain kind: " + parts[0]);
}

DomainProduct parse_domain_product(const std::string& text, int n) {
  const auto parts = split(text, ';');
  if (parts.size() == 1) return {parse_domain(parts[0]), n};
  if (static_cast<int>(parts.size()) != n)
    throw std::invalid_argument("domain product arity mismatch");
  std::vector<CircularDomain> ds;
  ds.reserve(parts.size());
  for (const auto& p : parts) ds.push_back(parse_domain(p));
  return DomainProduct(std::move(ds));
}

MoebiusMap::MoebiusMap(Cplx a, Cplx b, Cplx c, Cplx d)
    : a_(a), b_(b), c_(c), d_(d) {
  const Cplx det = a_ * d_ - b_ * c_;
  if (std::abs(det) < 1e-14)
    throw std::invalid_argument("Moebius map is singular");
  const Cplx s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
  c_ /= s;
  d_ /= s;
}

MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2) {
  return {m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
          m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_};
}

MoebiusMap MoebiusMap::unit_disk_to(const CircularDomain& target) {
  switch (target.kind()) {
    case CircularDomain::Kind::Disk:
      return {target.radius(), target.center(), 0.0, 1.0};
    case CircularDomain::Kind::DiskExterior:
      // z -> c + r/z maps |z|<1 onto |w-c|>r.
      return {target.center(), target.radius(), 1.0, 0.0};
    case CircularDomain::Kind::HalfPlane: {
      // Cayley: z -> i(1-z)/(1+z) maps the disk onto Im > 0, then rotate.
      const MoebiusMap cayley{Cplx(0, -1), Cplx(0, 1), 1.0, 1.0};
      const Cplx rot = std::polar(1.0, -target.theta());
      return MoebiusMap(rot, 0.0, 0.0, 1.0) * cayley;
    }
  }
  throw std::logic_error("unreachable");
}

Polynomial mobius_transform(const Polynomial& f,
                            std::span<const MoebiusMap> maps,
                            const MultiIndex& kappa) {
  const int n = f.nvars();
  if (static_cast<int>(maps.size()) != n || static_cast<int>(kappa.size()) != n)
    throw std::invalid_argument("maps/kappa arity mismatch");
  for (int i = 0; i < n; ++i)
    if (f.degree(i) > kappa[i])
      throw std::invalid_argument("degree exceeds kappa");

  // Precompute (a_i z + b_i)^k and (c_i z + d_i)^k as univariate tables.
  auto powers = [&](int i, Cplx u, Cplx v) {
    std::vector<std::vector<Cplx>> p(kappa[i] + 1);
    p[0] = {1.0};
    for (int k = 1; k <= kappa[i]; ++k) {
      p[k].assign(k + 1, 0.0);
      for (int j = 0; j < k; ++j) {
        p[k][j] += p[k - 1][j] * v;
        p[k][j + 1] += p[k - 1][j] * u;
      }
    }
    return p;
  };
  std::vector<std::vector<std::vector<Cplx>>> num(n), den(n);
  for (int i = 0; i < n; ++i) {
    num[i] = powers(i, maps[i].a(), maps[i].b());
    den[i] = powers(i, maps[i].c(), maps[i].d());
  }

  Polynomial r(n);
  for (const auto& [alpha, c] : f.terms()) {
    // term contributes c * prod_i (a_i z + b_i)^{alpha_i} (c_i z + d_i)^{kappa_i - alpha_i}
    Polynomial term = Polynomial::constant(n, c);
    for (int i = 0; i < n; ++i) {
      const auto& pn = num[i][alpha[i]];
      const auto& pd = den[i][kappa[i] - alpha[i]];
      Polynomial uni(n);
      for (std::size_t j = 0; j < pn.size(); ++j)
        for (std::size_t k = 0; k < pd.size(); ++k) {
          MultiIndex a(n, 0);
          a[i] = static_cast<int>(j + k);
          uni.add_term(a, pn[j] * pd[k]);
        }
      term *= uni;
    }
    r += term;
  }
  r.prune();
  return r;
}

Polynomial reverse_degrees(const Polynomial& f, const MultiIndex& kappa) {
  if (static_cast<int>(kappa.size()) != f.nvars())
    throw std::invalid_argument("kappa arity mismatch");
  Polynomial r(f.nvars());
  for (const auto& [alpha, c] : f.terms()) {
    if (!leq(alpha, kappa))
      throw std::invalid_argument("degree exceeds kappa");
    r.add_term(sub(kappa, alpha), c);
  }
  return r;
}

}  // namespace spoly
