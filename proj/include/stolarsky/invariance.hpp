#pragma once

#include "stolarsky/spaces.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace stolarsky {

/// N >= 1 points of one space.
class PointSet {
public:
  /// Throws std::domain_error if the set is empty or a point belongs to
  /// another space.
  PointSet(SpaceId space, std::vector<Point> points);

  const SpaceId &space() const { return space_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point> &points() const { return points_; }
  const Point &operator[](std::size_t i) const { return points_[i]; }

private:
  SpaceId space_;
  std::vector<Point> points_;
};

/// N independent uniform points (sample_octonionic for OP2).
PointSet random_point_set(const SpaceId &space, std::size_t n, Rng &rng);

/// A finite measure xi on the radii [0, pi] given by a density.
struct RadialMeasure {
  std::function<double(double)> density;
  double total_mass = 0.0;

  /// dxi_nat(r) = sin r dr, total mass 2.
  static RadialMeasure natural();
  /// Computes total_mass by quadrature.
  static RadialMeasure from_density(std::function<double(double)> density);
};

/// Monte Carlo estimate with its standard error and the inputs that
/// reproduce it.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// tau[D] = sum over all ordered pairs (x1, x2) in D x D of tau(x1, x2),
/// diagonal included.
double sum_pairwise_chordal(const PointSet &d);

/// theta^Delta(xi_nat, x1, x2) = tau(x1, x2) / gamma(Q).
double sd_metric(const Point &x1, const Point &x2);

/// lambda(xi_nat, x1, x2) = <theta^Delta(xi_nat)> - theta^Delta(xi_nat, x1, x2).
double discrepancy_kernel(const Point &x1, const Point &x2);

/// lambda[xi_nat, D] = sum over ordered pairs of discrepancy_kernel.
double quadratic_discrepancy(const PointSet &d);

/// gamma(Q) lambda[xi_nat, D] + tau[D] - <tau> N^2 with the closed-form
/// kernel.
double invariance_residual(const PointSet &d);

/// Same with a caller-supplied discrepancy (e.g. a Monte Carlo estimate).
double invariance_residual(const PointSet &d, double lambda);

/// Estimates int int (#(B(y,r) cap D) - N v(r))^2 dmu(y) dxi_nat(r) with
/// y ~ mu and r drawn from sin(r)/2, scaled by the mass 2 of xi_nat.
/// Throws unsupported_operation for OP2 and std::domain_error for
/// samples < 100.
McEstimate mc_discrepancy(const PointSet &d, std::uint64_t samples, std::uint64_t seed);

/// Estimates int |tau(x1, y)^2 - tau(x2, y)^2| dmu(y), which equals
/// theta^Delta(xi_nat, x1, x2).
McEstimate mc_sd_metric(const Point &x1, const Point &x2, std::uint64_t samples,
                        std::uint64_t seed);

/// Estimates gamma from its integral representation: on S^d the reciprocal
/// of int |(x, y)| dmu(y); on RP^d the reciprocal of
/// 2 int_{S^d} |(a+, a)(a-, a)| dmu(a) for orthonormal a+, a-. The error
/// is propagated to first order.
McEstimate mc_gamma_sphere(const SpaceId &space, std::uint64_t samples,
                           std::uint64_t seed);

// Arbitrary radial measures. Only S^2 is supported: there the volume of the
// intersection of two caps is available in closed form.

/// mu(B(x1, r) cap B(x2, r)) on S^2 for centres at angular distance theta.
double cap_intersection_volume_s2(double r, double theta);

/// <theta^Delta(xi)> = int (v(r) - v(r)^2) dxi(r) on any space.
double mean_sd_metric(const SpaceId &space, const RadialMeasure &xi);

/// theta^Delta(xi, x1, x2) = int (v(r) - mu(B(x1,r) cap B(x2,r))) dxi(r), S^2 only.
double sd_metric(const RadialMeasure &xi, const Point &x1, const Point &x2);

/// lambda(xi, x1, x2) = int (mu(B(x1,r) cap B(x2,r)) - v(r)^2) dxi(r), S^2 only.
double discrepancy_kernel(const RadialMeasure &xi, const Point &x1, const Point &x2);

} // namespace stolarsky
