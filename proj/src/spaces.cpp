#include "stolarsky/spaces.hpp"

#include "stolarsky/errors.hpp"
#include "stolarsky/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace stolarsky {

SpaceId::SpaceId(Family family, int n) : family_(family), n_(n) {
  if (family == Family::Sphere) {
    if (n < 1)
      throw std::domain_error("SpaceId: sphere dimension must be >= 1");
  } else if (family == Family::OctProj) {
    if (n != 2)
      throw std::domain_error("SpaceId: the octonionic projective space exists only for n = 2");
  } else if (n < 2) {
    throw std::domain_error("SpaceId: projective spaces require n >= 2");
  }
}

SpaceId SpaceId::parse(std::string_view text) {
  struct Prefix {
    std::string_view tag;
    Family family;
  };
  // Longest prefixes first so "S" does not shadow anything.
  static constexpr Prefix prefixes[] = {{"RP", Family::RealProj},
                                        {"CP", Family::ComplexProj},
                                        {"HP", Family::QuatProj},
                                        {"OP", Family::OctProj},
                                        {"S", Family::Sphere}};
  const std::string token(text);
  for (const auto &p : prefixes) {
    if (!text.starts_with(p.tag))
      continue;
    const auto digits = text.substr(p.tag.size());
    int n = 0;
    const auto *first = digits.data();
    const auto *last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (digits.empty() || ec != std::errc() || ptr != last)
      throw parse_error("bad space name \"" + token + "\": expected a dimension after \"" +
                        std::string(p.tag) + "\"");
    try {
      return SpaceId(p.family, n);
    } catch (const std::domain_error &e) {
      throw parse_error("bad space name \"" + token + "\": " + e.what());
    }
  }
  throw parse_error("unknown space \"" + token +
                    "\": expected S<d>, RP<n>, CP<n>, HP<n> or OP2");
}

int SpaceId::d() const { return is_sphere() ? n_ : n_ * d0(); }

int SpaceId::d0() const {
  switch (family_) {
  case Family::Sphere:
    return n_;
  case Family::RealProj:
    return 1;
  case Family::ComplexProj:
    return 2;
  case Family::QuatProj:
    return 4;
  case Family::OctProj:
    return 8;
  }
  return 0;
}

int SpaceId::embedding_dim() const {
  if (is_sphere())
    return n_ + 1;
  return (n_ + 1) * (d() + 2) / 2;
}

Field SpaceId::field() const {
  if (is_sphere())
    throw std::domain_error("SpaceId::field: spheres carry no scalar field");
  return static_cast<Field>(d0());
}

int SpaceId::representative_dim() const {
  return is_sphere() ? n_ + 1 : (n_ + 1) * d0();
}

std::string SpaceId::name() const {
  switch (family_) {
  case Family::Sphere:
    return "S" + std::to_string(n_);
  case Family::RealProj:
    return "RP" + std::to_string(n_);
  case Family::ComplexProj:
    return "CP" + std::to_string(n_);
  case Family::QuatProj:
    return "HP" + std::to_string(n_);
  case Family::OctProj:
    return "OP" + std::to_string(n_);
  }
  return "?";
}

Point Point::on_sphere(const SpaceId &space, std::vector<double> x) {
  if (!space.is_sphere())
    throw std::domain_error("Point::on_sphere: " + space.name() + " is not a sphere");
  if (static_cast<int>(x.size()) != space.n() + 1)
    throw std::domain_error("Point::on_sphere: expected " +
                            std::to_string(space.n() + 1) + " coordinates");
  double s = 0.0;
  for (double v : x)
    s += v * v;
  if (std::fabs(std::sqrt(s) - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "Point::on_sphere: |x| = " << std::sqrt(s) << " is not 1";
    throw std::domain_error(msg.str());
  }
  return Point(space, std::move(x));
}

Point Point::projective(const SpaceId &space, HermitianMatrix p, double tol) {
  if (space.is_sphere())
    throw std::domain_error("Point::projective: " + space.name() + " is a sphere");
  if (p.field() != space.field() || p.size() != space.n() + 1)
    throw std::domain_error("Point::projective: matrix does not match " + space.name());
  const auto check = is_valid_point(p, tol);
  if (!check.valid) {
    std::ostringstream msg;
    msg << "Point::projective: not a rank-one projector (idempotency "
        << check.idempotency_residual << ", trace " << check.trace_residual
        << ", hermitian " << check.hermitian_residual << ")";
    throw std::domain_error(msg.str());
  }
  return Point(space, std::move(p));
}

std::span<const double> Point::vector() const {
  if (const auto *v = std::get_if<std::vector<double>>(&data_))
    return *v;
  throw std::domain_error("Point::vector: projective point has no sphere coordinates");
}

const HermitianMatrix &Point::projector() const {
  if (const auto *p = std::get_if<HermitianMatrix>(&data_))
    return *p;
  throw std::domain_error("Point::projector: sphere point has no projector");
}

bool operator==(const Point &a, const Point &b) {
  if (a.space_ != b.space_)
    return false;
  if (a.is_sphere()) {
    const auto va = a.vector();
    const auto vb = b.vector();
    return std::equal(va.begin(), va.end(), vb.begin(), vb.end());
  }
  const auto ea = a.projector().entries();
  const auto eb = b.projector().entries();
  return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Point point_from_representative(const SpaceId &space, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != space.representative_dim())
    throw std::domain_error("point_from_representative: expected " +
                            std::to_string(space.representative_dim()) +
                            " coordinates for " + space.name());
  double s = 0.0;
  for (double v : coords)
    s += v * v;
  const double len = std::sqrt(s);
  if (!(len > 0.0) || !std::isfinite(len))
    throw std::domain_error("point_from_representative: zero or non-finite vector");
  if (space.is_sphere()) {
    std::vector<double> x(coords.begin(), coords.end());
    for (double &v : x)
      v /= len;
    return Point::on_sphere(space, std::move(x));
  }
  const Field field = space.field();
  const int d0 = dim(field);
  std::vector<AlgebraElement> a;
  a.reserve(static_cast<std::size_t>(space.n() + 1));
  for (int i = 0; i <= space.n(); ++i) {
    AlgebraElement::Coeffs c{};
    for (int k = 0; k < d0; ++k)
      c[static_cast<std::size_t>(k)] = coords[static_cast<std::size_t>(i * d0 + k)] / len;
    a.emplace_back(field, c);
  }
  return Point::projective(space, projector_from_vector(a));
}

namespace {
void require_same_space(const Point &x1, const Point &x2, const char *what) {
  if (x1.space() != x2.space())
    throw std::domain_error(std::string(what) + ": points live in different spaces (" +
                            x1.space().name() + " vs " + x2.space().name() + ")");
}

double sphere_dist_sq(std::span<const double> a, std::span<const double> b, double sign) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - sign * b[i];
    s += t * t;
  }
  return s;
}
} // namespace

double geodesic_distance(const Point &x1, const Point &x2) {
  require_same_space(x1, x2, "geodesic_distance");
  if (x1 == x2)
    return 0.0;
  if (x1.is_sphere()) {
    const double minus = std::sqrt(sphere_dist_sq(x1.vector(), x2.vector(), 1.0));
    const double plus = std::sqrt(sphere_dist_sq(x1.vector(), x2.vector(), -1.0));
    return 2.0 * std::atan2(minus, plus);
  }
  const double ip = std::clamp(inner_product(x1.projector(), x2.projector()), 0.0, 1.0);
  return 2.0 * std::atan2(std::sqrt(1.0 - ip), std::sqrt(ip));
}

double chordal_distance(const Point &x1, const Point &x2) {
  require_same_space(x1, x2, "chordal_distance");
  if (x1 == x2)
    return 0.0;
  if (x1.is_sphere())
    return std::min(1.0, 0.5 * std::sqrt(sphere_dist_sq(x1.vector(), x2.vector(), 1.0)));
  const double ip = std::clamp(inner_product(x1.projector(), x2.projector()), 0.0, 1.0);
  return std::sqrt(1.0 - ip);
}

namespace {
void require_radius(double r, const char *what) {
  if (!(r >= 0.0 && r <= std::numbers::pi)) {
    std::ostringstream msg;
    msg << what << ": radius " << r << " outside [0, pi]";
    throw std::domain_error(msg.str());
  }
}
} // namespace

double ball_volume(const SpaceId &space, double r) {
  require_radius(r, "ball_volume");
  // The ball of radius pi is the whole space; cos(pi/2) is not exactly 0.
  if (r == std::numbers::pi)
    return 1.0;
  const double s = std::sin(0.5 * r);
  const double c = std::cos(0.5 * r);
  return incomplete_beta(space.d() / 2.0, space.d0() / 2.0, s * s, c * c);
}

double radial_density(const SpaceId &space, double r) {
  require_radius(r, "radial_density");
  const double d = space.d();
  const double d0 = space.d0();
  const double log_norm = -log_beta(d / 2.0, d0 / 2.0);
  return std::exp(log_norm) * std::pow(std::sin(0.5 * r), d - 1.0) *
         std::pow(std::cos(0.5 * r), d0 - 1.0);
}

double mean_chordal(const SpaceId &space) {
  const double d = space.d();
  const double d0 = space.d0();
  return std::exp(log_beta((d + 1.0) / 2.0, d0 / 2.0) - log_beta(d / 2.0, d0 / 2.0));
}

double gamma_sphere(int d) {
  const double x = d;
  return x * std::sqrt(std::numbers::pi) / 2.0 *
         std::exp(log_gamma(x / 2.0) - log_gamma((x + 1.0) / 2.0));
}

double gamma_const(const SpaceId &space) {
  const int d = space.d();
  const int d0 = space.d0();
  return static_cast<double>(d + d0) / (2.0 * d0) * gamma_sphere(d0);
}

double mean_sd_metric(const SpaceId &space) {
  static std::mutex mutex;
  static std::map<SpaceId, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(space); it != cache.end())
      return it->second;
  }
  const auto integrand = [&space](double r) {
    const double v = ball_volume(space, r);
    return (v - v * v) * std::sin(r);
  };
  const double value = integrate(integrand, 0.0, std::numbers::pi).value;
  std::lock_guard lock(mutex);
  cache.emplace(space, value);
  return value;
}

Point sample_uniform(const SpaceId &space, Rng &rng) {
  if (!space.samplable())
    throw unsupported_operation(
        "sample_uniform: uniform sampling of " + space.name() + " is not supported");
  std::vector<double> g(static_cast<std::size_t>(space.representative_dim()));
  for (double &x : g)
    x = standard_normal(rng);
  return point_from_representative(space, g);
}

Point sample_octonionic(Rng &rng) {
  const SpaceId op2(Family::OctProj, 2);
  std::vector<double> g(24, 0.0);
  g[0] = standard_normal(rng);
  for (std::size_t k = 8; k < 24; ++k)
    g[k] = standard_normal(rng);
  return point_from_representative(op2, g);
}

namespace {
HermitianMatrix corner_block(const SpaceId &space, double a00, double a01, double a11) {
  const Field field = space.field();
  HermitianMatrix m(field, space.n() + 1);
  m.set(0, 0, AlgebraElement::real(field, a00));
  m.set_hermitian(0, 1, AlgebraElement::real(field, a01));
  m.set(1, 1, AlgebraElement::real(field, a11));
  return m;
}
} // namespace

Point geodesic_point(const SpaceId &space, double u) {
  const double c = std::cos(u);
  const double s = std::sin(u);
  if (space.is_sphere()) {
    std::vector<double> x(static_cast<std::size_t>(space.n() + 1), 0.0);
    x[0] = c;
    x[1] = s;
    return Point::on_sphere(space, std::move(x));
  }
  return Point::projective(space, corner_block(space, c * c, s * c, s * s));
}

std::pair<Point, Point> antipodal_pair(const SpaceId &space) {
  if (space.is_sphere()) {
    std::vector<double> x(static_cast<std::size_t>(space.n() + 1), 0.0);
    x[0] = 1.0;
    auto y = x;
    y[0] = -1.0;
    return {Point::on_sphere(space, std::move(x)), Point::on_sphere(space, std::move(y))};
  }
  return {Point::projective(space, corner_block(space, 0.5, 0.5, 0.5)),
          Point::projective(space, corner_block(space, 0.5, -0.5, 0.5))};
}

} // namespace stolarsky
