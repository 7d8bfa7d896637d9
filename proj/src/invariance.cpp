#include "stolarsky/invariance.hpp"

#include "stolarsky/errors.hpp"
#include "stolarsky/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stolarsky {

PointSet::PointSet(SpaceId space, std::vector<Point> points)
    : space_(space), points_(std::move(points)) {
  if (points_.empty())
    throw std::domain_error("PointSet: a point set needs at least one point");
  for (const auto &p : points_)
    if (p.space() != space_)
      throw std::domain_error("PointSet: point of " + p.space().name() +
                              " in a set over " + space_.name());
}

PointSet random_point_set(const SpaceId &space, std::size_t n, Rng &rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pts.push_back(space.samplable() ? sample_uniform(space, rng) : sample_octonionic(rng));
  return PointSet(space, std::move(pts));
}

RadialMeasure RadialMeasure::natural() {
  return {[](double r) { return std::sin(r); }, 2.0};
}

RadialMeasure RadialMeasure::from_density(std::function<double(double)> density) {
  const double mass = integrate(density, 0.0, std::numbers::pi).value;
  return {std::move(density), mass};
}

double sum_pairwise_chordal(const PointSet &d) {
  // Symmetric: twice the strict upper triangle, the diagonal contributes 0.
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      s += chordal_distance(d[i], d[j]);
  return 2.0 * s;
}

double sd_metric(const Point &x1, const Point &x2) {
  return chordal_distance(x1, x2) / gamma_const(x1.space());
}

double discrepancy_kernel(const Point &x1, const Point &x2) {
  return mean_sd_metric(x1.space()) - sd_metric(x1, x2);
}

double quadratic_discrepancy(const PointSet &d) {
  const double mean = mean_sd_metric(d.space());
  const double gamma = gamma_const(d.space());
  double off_diagonal = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      off_diagonal += mean - chordal_distance(d[i], d[j]) / gamma;
  return static_cast<double>(d.size()) * mean + 2.0 * off_diagonal;
}

double invariance_residual(const PointSet &d, double lambda) {
  const double n = static_cast<double>(d.size());
  return gamma_const(d.space()) * lambda + sum_pairwise_chordal(d) -
         mean_chordal(d.space()) * n * n;
}

double invariance_residual(const PointSet &d) {
  return invariance_residual(d, quadratic_discrepancy(d));
}

namespace {

void require_samples(const SpaceId &space, std::uint64_t samples, const char *what) {
  if (!space.samplable())
    throw unsupported_operation(std::string(what) + ": needs uniform samples of " +
                                space.name() + ", which is not supported");
  if (samples < 100)
    throw std::domain_error(std::string(what) + ": at least 100 samples required");
}

McEstimate to_estimate(const Moments &m, double scale, std::uint64_t seed) {
  return {scale * m.mean(), scale * m.std_error(), m.count, seed};
}

} // namespace

McEstimate mc_discrepancy(const PointSet &d, std::uint64_t samples, std::uint64_t seed) {
  const SpaceId &space = d.space();
  require_samples(space, samples, "mc_discrepancy");
  const double n = static_cast<double>(d.size());
  const auto moments = monte_carlo(seed, samples, [&](Rng &rng) {
    const Point y = sample_uniform(space, rng);
    // Inverse CDF of sin(r)/2 on [0, pi].
    const double r = std::acos(std::clamp(1.0 - 2.0 * uniform01(rng), -1.0, 1.0));
    int count = 0;
    for (const auto &x : d.points())
      if (geodesic_distance(x, y) < r)
        ++count;
    const double dev = count - n * ball_volume(space, r);
    return dev * dev;
  });
  return to_estimate(moments, RadialMeasure::natural().total_mass, seed);
}

McEstimate mc_sd_metric(const Point &x1, const Point &x2, std::uint64_t samples,
                        std::uint64_t seed) {
  if (x1.space() != x2.space())
    throw std::domain_error("mc_sd_metric: points live in different spaces");
  const SpaceId &space = x1.space();
  require_samples(space, samples, "mc_sd_metric");
  const auto moments = monte_carlo(seed, samples, [&](Rng &rng) {
    const Point y = sample_uniform(space, rng);
    const double t1 = chordal_distance(x1, y);
    const double t2 = chordal_distance(x2, y);
    return std::fabs(t1 * t1 - t2 * t2);
  });
  return to_estimate(moments, 1.0, seed);
}

McEstimate mc_gamma_sphere(const SpaceId &space, std::uint64_t samples,
                           std::uint64_t seed) {
  if (space.family() != Family::Sphere && space.family() != Family::RealProj)
    throw unsupported_operation("mc_gamma_sphere: only spheres and real projective "
                                "spaces have this integral representation");
  require_samples(space, samples, "mc_gamma_sphere");
  // Both integrals run over the unit sphere S^d, d = dim of the space.
  const SpaceId sphere(Family::Sphere, space.d());
  const bool projective = space.family() == Family::RealProj;
  const auto moments = monte_carlo(seed, samples, [&](Rng &rng) {
    const Point y = sample_uniform(sphere, rng);
    const auto a = y.vector();
    // x = a+ = e0, a- = e1.
    return projective ? 2.0 * std::fabs(a[0] * a[1]) : std::fabs(a[0]);
  });
  const double m = moments.mean();
  return {1.0 / m, moments.std_error() / (m * m), moments.count, seed};
}

double cap_intersection_volume_s2(double r, double theta) {
  using std::numbers::pi;
  if (!(r >= 0.0 && r <= pi) || !(theta >= 0.0 && theta <= pi))
    throw std::domain_error("cap_intersection_volume_s2: arguments outside [0, pi]");
  if (r > pi / 2) {
    // Complements are caps of radius pi - r around the antipodes, which are
    // still theta apart.
    const double outside = 0.5 * (1.0 - std::cos(pi - r));
    return 1.0 - 2.0 * outside + cap_intersection_volume_s2(pi - r, theta);
  }
  if (theta >= 2.0 * r)
    return 0.0;
  if (theta == 0.0)
    return 0.5 * (1.0 - std::cos(r));
  const double cr = std::cos(r);
  const double sr = std::sin(r);
  // Angle of the lens at a boundary intersection point, and the half opening
  // angle of the lens seen from a cap centre.
  const double corner = std::acos(std::clamp((std::cos(theta) - cr * cr) / (sr * sr), -1.0, 1.0));
  const double opening =
      std::acos(std::clamp(cr * (1.0 - std::cos(theta)) / (sr * std::sin(theta)), -1.0, 1.0));
  return 2.0 * (pi - corner - 2.0 * opening * cr) / (4.0 * pi);
}

double mean_sd_metric(const SpaceId &space, const RadialMeasure &xi) {
  const auto integrand = [&](double r) {
    const double v = ball_volume(space, r);
    return (v - v * v) * xi.density(r);
  };
  return integrate(integrand, 0.0, std::numbers::pi).value;
}

namespace {

// The lens area has power-3/2 corners where the caps start to overlap, so
// the last few digits are not reachable.
constexpr QuadratureOptions kLensQuadrature{1e-10, 1e-13, 18};

double s2_separation(const Point &x1, const Point &x2, const char *what) {
  if (x1.space() != x2.space() || x1.space() != SpaceId(Family::Sphere, 2))
    throw unsupported_operation(std::string(what) +
                                ": general radial measures are supported on S2 only");
  return geodesic_distance(x1, x2);
}

} // namespace

double sd_metric(const RadialMeasure &xi, const Point &x1, const Point &x2) {
  const double theta = s2_separation(x1, x2, "sd_metric");
  const auto integrand = [&](double r) {
    return (0.5 * (1.0 - std::cos(r)) - cap_intersection_volume_s2(r, theta)) * xi.density(r);
  };
  const std::array<double, 2> kinks{theta / 2.0, std::numbers::pi - theta / 2.0};
  return integrate(integrand, 0.0, std::numbers::pi, kinks, kLensQuadrature).value;
}

double discrepancy_kernel(const RadialMeasure &xi, const Point &x1, const Point &x2) {
  const double theta = s2_separation(x1, x2, "discrepancy_kernel");
  const auto integrand = [&](double r) {
    const double v = 0.5 * (1.0 - std::cos(r));
    return (cap_intersection_volume_s2(r, theta) - v * v) * xi.density(r);
  };
  const std::array<double, 2> kinks{theta / 2.0, std::numbers::pi - theta / 2.0};
  return integrate(integrand, 0.0, std::numbers::pi, kinks, kLensQuadrature).value;
}

} // namespace stolarsky
