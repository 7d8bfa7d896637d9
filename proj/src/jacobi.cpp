#include "stolarsky/jacobi.hpp"

#include "stolarsky/errors.hpp"
#include "stolarsky/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace stolarsky {

namespace {

void require_t(double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << "jacobi: argument " << t << " outside [-1, 1]";
    throw std::domain_error(msg.str());
  }
}

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    std::ostringstream msg;
    msg << "zonal series: theta " << theta << " outside [0, pi]";
    throw std::domain_error(msg.str());
  }
}

double log_norm_const_M(JacobiParams p, int l) {
  const double a = p.alpha;
  const double b = p.beta;
  if (l == 0)
    return log_gamma(a + b + 2.0) - log_gamma(a + 1.0) - log_gamma(b + 1.0);
  return std::log(2.0 * l + a + b + 1.0) + log_gamma(l + 1.0) +
         log_gamma(l + a + b + 1.0) - log_gamma(l + a + 1.0) - log_gamma(l + b + 1.0);
}

double log_coeff_C(JacobiParams p, int l) {
  return log_beta(p.alpha + 1.5, p.beta + l + 1.0) + log_rising_factorial(0.5, l - 1) -
         log_gamma(l + 1.0) + log_binomial(p.alpha, l);
}

double coeff_A_closed(const SpaceId &space, int l) {
  const double d = space.d();
  const double d0 = space.d0();
  const double s = (d + d0) / 2.0;
  const double log_value =
      std::log(2.0) + log_rising_factorial(0.5, l - 1) - 2.0 * log_gamma(l) +
      log_beta(d + 1.0, d0 + 1.0) + log_gamma(d / 2.0 + l) + log_gamma(d0 / 2.0 + l) +
      log_gamma(s + 1.5) - log_gamma(d / 2.0 + 1.0) - log_gamma(d0 / 2.0 + 1.0) -
      log_gamma(s + l + 0.5);
  return std::exp(log_value);
}

double coeff_A_quadrature(const SpaceId &space, int l) {
  const double d = space.d();
  const double d0 = space.d0();
  const JacobiParams shifted{space.alpha() + 1.0, space.beta() + 1.0};
  const auto integrand = [&](double r) {
    const double p = jacobi_eval(shifted, l - 1, std::clamp(std::cos(r), -1.0, 1.0));
    return std::pow(std::sin(0.5 * r), 2.0 * d + 1.0) *
           std::pow(std::cos(0.5 * r), 2.0 * d0 + 1.0) * p * p;
  };
  QuadratureOptions opts;
  opts.rel_tol = 1e-14;
  opts.abs_tol = 0.0;
  return 2.0 * integrate(integrand, 0.0, std::numbers::pi, opts).value;
}

} // namespace

void jacobi_table(JacobiParams p, double t, std::span<double> out) {
  require_t(t);
  if (out.empty())
    return;
  const double a = p.alpha;
  const double b = p.beta;
  out[0] = 1.0;
  if (out.size() == 1)
    return;
  // Explicit P_1: the generic recurrence step from n = 0 degenerates when
  // a + b = -1.
  out[1] = (a + 1.0) + (a + b + 2.0) * (t - 1.0) / 2.0;
  for (std::size_t k = 1; k + 1 < out.size(); ++k) {
    const double n = static_cast<double>(k);
    const double s = 2.0 * n + a + b;
    const double c1 = 2.0 * (n + 1.0) * (n + a + b + 1.0) * s;
    const double c2 = (s + 1.0) * (a * a - b * b);
    const double c3 = s * (s + 1.0) * (s + 2.0);
    const double c4 = 2.0 * (n + a) * (n + b) * (s + 2.0);
    out[k + 1] = ((c2 + c3 * t) * out[k] - c4 * out[k - 1]) / c1;
  }
}

double jacobi_eval(JacobiParams p, int l, double t) {
  require_t(t);
  if (l < 0)
    throw std::domain_error("jacobi_eval: negative degree");
  std::vector<double> table(static_cast<std::size_t>(l) + 1);
  jacobi_table(p, t, table);
  return table.back();
}

double value_at_one(JacobiParams p, int l) {
  return std::exp(log_binomial(p.alpha, l));
}

double norm_const_M(JacobiParams p, int l) {
  return std::exp(log_norm_const_M(p, l));
}

double coeff_C0(JacobiParams p) { return beta_fn(p.alpha + 1.5, p.beta + 1.0); }

double coeff_C(JacobiParams p, int l) {
  if (l < 1)
    throw std::domain_error("coeff_C: l must be >= 1");
  return std::exp(log_coeff_C(p, l));
}

double coeff_A(const SpaceId &space, int l, CoefficientRoute route) {
  if (l < 1)
    throw std::domain_error("coeff_A: l must be >= 1");
  return route == CoefficientRoute::ClosedForm ? coeff_A_closed(space, l)
                                               : coeff_A_quadrature(space, l);
}

ZonalExpansion::ZonalExpansion(const SpaceId &space, CoefficientRoute route)
    : space_(space), route_(route), params_(JacobiParams::for_space(space)) {}

void ZonalExpansion::grow(int L) {
  const auto have = static_cast<int>(tau_coeffs_.size()) - 1;
  if (L <= have)
    return;
  const double log_b = log_beta(space_.d() / 2.0, space_.d0() / 2.0);
  tau_coeffs_.reserve(static_cast<std::size_t>(L) + 1);
  for (int l = have + 1; l <= L; ++l) {
    const double log_m = log_norm_const_M(params_, l);
    const double tau_c = 0.5 * std::exp(log_m + log_coeff_C(params_, l));
    const double a_l = coeff_A(space_, l, route_);
    const double sd_c = std::exp(log_m - log_b - 2.0 * std::log(l)) * a_l;
    tau_coeffs_.push_back(tau_c);
    sd_coeffs_.push_back(sd_c);
    tau_partial_.push_back(tau_partial_.back() + tau_c);
    sd_partial_.push_back(sd_partial_.back() + sd_c);
    at_one_.push_back(value_at_one(params_, l));
  }
}

double ZonalExpansion::tau_coeff(int l) {
  grow(l);
  return tau_coeffs_[static_cast<std::size_t>(l)];
}

double ZonalExpansion::sd_coeff(int l) {
  grow(l);
  return sd_coeffs_[static_cast<std::size_t>(l)];
}

SeriesTruncation ZonalExpansion::tau_truncation(int L) {
  if (L < 1)
    throw std::domain_error("tau_truncation: L must be >= 1");
  grow(L);
  const double tail = mean_chordal(space_) - tau_partial_[static_cast<std::size_t>(L)];
  return {L, 2.0 * std::max(0.0, tail)};
}

SeriesTruncation ZonalExpansion::sd_truncation(int L) {
  if (L < 1)
    throw std::domain_error("sd_truncation: L must be >= 1");
  grow(L);
  const double tail = mean_sd_metric(space_) - sd_partial_[static_cast<std::size_t>(L)];
  return {L, 2.0 * std::max(0.0, tail)};
}

namespace {
template <class Fn>
SeriesTruncation search_truncation(Fn &&truncation, double tol, int max_L) {
  // Doubling then bisection; the bound is non-increasing in L.
  int hi = 1;
  while (truncation(hi).tail_bound > tol) {
    if (hi >= max_L) {
      std::ostringstream msg;
      msg << "series truncation: tail bound " << truncation(hi).tail_bound
          << " still above " << tol << " at L = " << hi;
      throw numeric_error(msg.str());
    }
    hi = std::min(2 * hi, max_L);
  }
  int lo = hi / 2;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (truncation(mid).tail_bound > tol)
      lo = mid;
    else
      hi = mid;
  }
  return truncation(hi);
}
} // namespace

SeriesTruncation ZonalExpansion::tau_truncation_for(double tol, int max_L) {
  return search_truncation([this](int L) { return tau_truncation(L); }, tol, max_L);
}

SeriesTruncation ZonalExpansion::sd_truncation_for(double tol, int max_L) {
  return search_truncation([this](int L) { return sd_truncation(L); }, tol, max_L);
}

double ZonalExpansion::series(const std::vector<double> &coeffs, double theta,
                              int L) const {
  if (theta == 0.0)
    return 0.0;
  const double t = std::clamp(std::cos(theta), -1.0, 1.0);
  std::vector<double> p(static_cast<std::size_t>(L) + 1);
  jacobi_table(params_, t, p);
  double sum = 0.0;
  // Smallest terms first.
  for (int l = L; l >= 1; --l) {
    const double phi = p[static_cast<std::size_t>(l)] / at_one_[static_cast<std::size_t>(l)];
    sum += coeffs[static_cast<std::size_t>(l)] * (1.0 - phi);
  }
  return sum;
}

SeriesValue ZonalExpansion::tau_series(double theta, int L) {
  require_theta(theta);
  const auto trunc = tau_truncation(L);
  return {series(tau_coeffs_, theta, L), trunc};
}

SeriesValue ZonalExpansion::sd_series(double theta, int L) {
  require_theta(theta);
  const auto trunc = sd_truncation(L);
  return {series(sd_coeffs_, theta, L), trunc};
}

SeriesValue tau_series(const SpaceId &space, double theta, int L) {
  return ZonalExpansion(space).tau_series(theta, L);
}

SeriesValue sd_series(const SpaceId &space, double theta, int L) {
  return ZonalExpansion(space).sd_series(theta, L);
}

double gamma_from_equation(const SpaceId &space, int l, CoefficientRoute route) {
  if (l < 1)
    throw std::domain_error("gamma_from_equation: l must be >= 1");
  const double d = space.d();
  const double d0 = space.d0();
  const double log_rhs = log_rising_factorial(0.5, l - 1) + 2.0 * std::log(l) -
                         std::log(2.0) - log_gamma(l + 1.0) +
                         log_binomial(space.alpha(), l) + log_beta(d / 2.0, d0 / 2.0) +
                         log_beta((d + 1.0) / 2.0, l + d0 / 2.0);
  return std::exp(log_rhs) / coeff_A(space, l, route);
}

} // namespace stolarsky
