#pragma once

#include "stolarsky/algebra.hpp"
#include "stolarsky/random.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace stolarsky {

enum class Family { Sphere, RealProj, ComplexProj, QuatProj, OctProj };

/// One of the spaces Q(d, d0): a sphere S^d or a projective space FP^n.
///
/// Geodesic distances are normalized to diameter pi and the invariant measure
/// to total mass 1. For spheres `n` is the dimension d and d0 = d.
class SpaceId {
public:
  /// Throws std::domain_error for n < 1 (spheres), n < 2 (projective) or
  /// OP^n with n != 2.
  SpaceId(Family family, int n);

  /// Parses "S<d>", "RP<n>", "CP<n>", "HP<n>" or "OP2". Throws parse_error
  /// naming the offending token.
  static SpaceId parse(std::string_view text);

  Family family() const { return family_; }
  int n() const { return n_; }
  bool is_sphere() const { return family_ == Family::Sphere; }

  /// Real dimension d.
  int d() const;
  /// d0 = dim_R F for projective spaces, d0 = d for spheres.
  int d0() const;
  /// Jacobi parameters alpha = d/2 - 1, beta = d0/2 - 1.
  double alpha() const { return d() / 2.0 - 1.0; }
  double beta() const { return d0() / 2.0 - 1.0; }
  /// Real dimension of the Hermitian matrix space, (n+1)(d+2)/2. For spheres
  /// the ambient dimension d + 1.
  int embedding_dim() const;

  /// Scalar field of a projective space. Throws for spheres.
  Field field() const;
  /// Number of real coordinates of a representative vector: d + 1 for a
  /// sphere, (n + 1) d0 for FP^n.
  int representative_dim() const;

  /// Whether sample_uniform supports this space (everything except OP2).
  bool samplable() const { return family_ != Family::OctProj; }

  std::string name() const;

  friend auto operator<=>(const SpaceId &, const SpaceId &) = default;

private:
  Family family_;
  int n_;
};

/// A validated point: a unit vector on S^d or a rank-one projector on FP^n.
class Point {
public:
  /// Throws std::domain_error unless x has d + 1 entries and |x| = 1 within 1e-12.
  static Point on_sphere(const SpaceId &space, std::vector<double> x);
  /// Throws std::domain_error unless p has the space's field and size and
  /// passes is_valid_point(p, tol).
  static Point projective(const SpaceId &space, HermitianMatrix p,
                          double tol = kPointTolerance);

  const SpaceId &space() const { return space_; }
  bool is_sphere() const { return space_.is_sphere(); }
  /// Sphere coordinates. Throws for projective points.
  std::span<const double> vector() const;
  /// Projector matrix. Throws for sphere points.
  const HermitianMatrix &projector() const;

  friend bool operator==(const Point &a, const Point &b);

private:
  Point(SpaceId space, std::variant<std::vector<double>, HermitianMatrix> data)
      : space_(space), data_(std::move(data)) {}

  SpaceId space_;
  std::variant<std::vector<double>, HermitianMatrix> data_;
};

/// Builds a point from raw representative coordinates (see
/// SpaceId::representative_dim), normalizing them first. For OP2 the
/// coordinates are three octonions and must satisfy the associativity
/// condition of projector_from_vector.
Point point_from_representative(const SpaceId &space, std::span<const double> coords);

/// Geodesic distance in [0, pi]. Spheres: the great-circle angle; projective:
/// theta with cos^2(theta/2) = <P1, P2>, clamped to [0, 1].
double geodesic_distance(const Point &x1, const Point &x2);

/// tau = sin(theta/2), in [0, 1]. Spheres: |x1 - x2| / 2; projective:
/// sqrt(1 - <P1, P2>).
double chordal_distance(const Point &x1, const Point &x2);

/// Normalized volume v(r) of a ball of radius r in [0, pi], evaluated as the
/// regularized incomplete beta I_{sin^2(r/2)}(d/2, d0/2).
double ball_volume(const SpaceId &space, double r);

/// Density p(r) = v'(r) of the distance between two independent uniform points.
double radial_density(const SpaceId &space, double r);

/// <tau> = B((d+1)/2, d0/2) / B(d/2, d0/2).
double mean_chordal(const SpaceId &space);

/// gamma(S^d) = d sqrt(pi) Gamma(d/2) / (2 Gamma((d+1)/2)).
double gamma_sphere(int d);

/// gamma(Q) = (d + d0) / (2 d0) * gamma(S^d0).
double gamma_const(const SpaceId &space);

/// <theta^Delta(xi_nat)> = int_0^pi (v(r) - v(r)^2) sin r dr, by quadrature.
/// Memoized per space.
double mean_sd_metric(const SpaceId &space);

/// Uniform point w.r.t. the invariant measure: a normalized Gaussian vector on
/// the sphere or in F^{n+1}. Throws unsupported_operation for OP2.
Point sample_uniform(const SpaceId &space, Rng &rng);

/// A valid (but not uniformly distributed) point of OP2: a0 real, a1 and a2
/// Gaussian octonions, normalized. Meant for identity checks only.
Point sample_octonionic(Rng &rng);

/// Point at parameter u on the canonical geodesic: Z(u) for projective
/// spaces, (cos u, sin u, 0, ...) for spheres.
Point geodesic_point(const SpaceId &space, double u);

/// The antipodal pair (Z+, Z-) of projective spaces; (e0, -e0) on spheres.
std::pair<Point, Point> antipodal_pair(const SpaceId &space);

} // namespace stolarsky
