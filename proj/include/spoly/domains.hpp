#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spoly/polynomial.hpp"
#include "spoly/rng.hpp"

namespace spoly {

// Shared boundary tolerance: a point within this distance of the boundary
// counts as inside for closed domains and outside for open ones.
inline constexpr double kEpsBoundary = 1e-10;

// One open or closed circular domain: half-plane, disk, or disk exterior.
// HalfPlane(theta) = { z : Im(e^{i*theta} z) > 0 }.
class CircularDomain {
 public:
  enum class Kind { HalfPlane, Disk, DiskExterior };

  static CircularDomain half_plane(double theta, bool closed = false);
  static CircularDomain disk(Cplx center, double radius, bool closed = false);
  static CircularDomain disk_exterior(Cplx center, double radius,
                                      bool closed = false);
  static CircularDomain upper_half_plane() { return half_plane(0.0); }
  static CircularDomain right_half_plane(); // theta = pi/2
  static CircularDomain unit_disk() { return disk(0.0, 1.0); }

  Kind kind() const { return kind_; }
  bool closed() const { return closed_; }
  double theta() const { return theta_; }
  Cplx center() const { return center_; }
  double radius() const { return radius_; }
  bool convex() const { return kind_ != Kind::DiskExterior; }

  // Signed distance into the domain: positive strictly inside.
  double inside_depth(Cplx p) const;
  bool contains(Cplx p, double eps = kEpsBoundary) const;

  Cplx sample(Rng& rng) const;

  // The complementary circular domain (closure flag flipped).
  CircularDomain complement() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::HalfPlane;
  bool closed_ = false;
  double theta_ = 0.0;
  Cplx center_ = 0.0;
  double radius_ = 1.0;
};

// Product Omega = D_1 x ... x D_n.
class DomainProduct {
 public:
  DomainProduct() = default;
  explicit DomainProduct(std::vector<CircularDomain> factors)
      : factors_(std::move(factors)) {}
  // Same domain in every coordinate.
  DomainProduct(const CircularDomain& d, int n)
      : factors_(static_cast<std::size_t>(n), d) {}

  int size() const { return static_cast<int>(factors_.size()); }
  const CircularDomain& factor(int i) const { return factors_[i]; }
  bool contains(std::span<const Cplx> p, double eps = kEpsBoundary) const;
  std::vector<Cplx> sample(Rng& rng) const;
  bool all_half_planes() const;

  std::string describe() const;

 private:
  std::vector<CircularDomain> factors_;
};

// CLI literals: `halfplane:<theta>`, `disk:<cx>,<cy>,<r>`,
// `exterior:<cx>,<cy>,<r>`, optional suffix `:open` / `:closed`.
CircularDomain parse_domain(const std::string& text);
// Semicolon-separated factor list, or one domain broadcast to n variables.
DomainProduct parse_domain_product(const std::string& text, int n);

// Moebius map (a*z + b) / (c*z + d), normalized to ad - bc = 1 at
// construction (inputs only need a nonzero determinant).
class MoebiusMap {
 public:
  MoebiusMap(Cplx a, Cplx b, Cplx c, Cplx d);
  static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MoebiusMap translation(Cplx b) { return {1.0, b, 0.0, 1.0}; }

  Cplx a() const { return a_; }
  Cplx b() const { return b_; }
  Cplx c() const { return c_; }
  Cplx d() const { return d_; }

  Cplx apply(Cplx z) const { return (a_ * z + b_) / (c_ * z + d_); }
  MoebiusMap inverse() const { return {d_, -b_, -c_, a_}; }
  // Matrix product: (m1 * m2).apply == m1.apply(m2.apply(.)).
  friend MoebiusMap operator*(const MoebiusMap& m1, const MoebiusMap& m2);

  // A map sending the unit disk onto the given domain.
  static MoebiusMap unit_disk_to(const CircularDomain& target);

 private:
  Cplx a_, b_, c_, d_;
};

// Degree-compensated Moebius substitution: each variable is composed with
// its map and the result is cleared of denominators up to degree kappa, so
// stability classes transport between domain products. Requires
// deg_{z_i}(f) <= kappa_i.
Polynomial mobius_transform(const Polynomial& f,
                            std::span<const MoebiusMap> maps,
                            const MultiIndex& kappa);

// Coefficient reversal alpha -> kappa - alpha; an involution exchanging
// disk-stable and disk-exterior-stable classes. Requires deg(f) <= kappa.
Polynomial reverse_degrees(const Polynomial& f, const MultiIndex& kappa);

}  // namespace spoly
