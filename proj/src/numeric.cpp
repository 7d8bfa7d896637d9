#include "stolarsky/numeric.hpp"

#include "stolarsky/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace stolarsky {

double log_gamma(double x) {
  // lgamma_r: std::lgamma may write the global signgam.
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta_fn(double a, double b) { return std::exp(log_beta(a, b)); }

double log_rising_factorial(double a, int l) {
  if (l == 0)
    return 0.0;
  return log_gamma(a + l) - log_gamma(a);
}

double rising_factorial(double a, int l) {
  return std::exp(log_rising_factorial(a, l));
}

double log_binomial(double a, int l) {
  return log_gamma(a + l + 1.0) - log_gamma(a + 1.0) - log_gamma(l + 1.0);
}

namespace {

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int max_iter = 20000;
  constexpr double eps = 1e-16;
  constexpr double tiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < tiny)
    d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny)
      d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny)
      c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < tiny)
      d = tiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < tiny)
      c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps)
      return h;
  }
  std::ostringstream msg;
  msg << "incomplete_beta: continued fraction did not converge for a=" << a
      << " b=" << b << " x=" << x;
  throw numeric_error(msg.str());
}

} // namespace

double incomplete_beta(double a, double b, double x, double y) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("incomplete_beta: parameters must be positive");
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw std::domain_error("incomplete_beta: x must lie in [0, 1]");
  if (x == 0.0)
    return 0.0;
  if (y == 0.0)
    return 1.0;
  const double log_front =
      a * std::log(x) + b * std::log(y) - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(log_front) * beta_continued_fraction(a, b, x) / a;
  return 1.0 - std::exp(log_front) * beta_continued_fraction(b, a, y) / b;
}

double incomplete_beta(double a, double b, double x) {
  return incomplete_beta(a, b, x, 1.0 - x);
}

namespace {

struct Piece {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

Piece gauss_kronrod_piece(const std::function<double(double)> &f, double a, double b,
                          const QuadratureOptions &opts) {
  using boost::math::quadrature::gauss_kronrod;
  Piece p;
  if (a != b)
    p.value = gauss_kronrod<double, 31>::integrate(f, a, b, opts.max_depth, opts.rel_tol,
                                                   &p.error, &p.l1);
  return p;
}

QuadratureResult checked(const Piece &p, double a, double b, const QuadratureOptions &opts) {
  if (!std::isfinite(p.value) || p.error > std::max(opts.rel_tol * p.l1, opts.abs_tol)) {
    std::ostringstream msg;
    msg << "integrate: no convergence on [" << a << ", " << b << "], achieved error "
        << p.error << " (L1 " << p.l1 << ")";
    throw numeric_error(msg.str());
  }
  return {p.value, p.error};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)> &f, double a,
                           double b, QuadratureOptions opts) {
  return checked(gauss_kronrod_piece(f, a, b, opts), a, b, opts);
}

QuadratureResult integrate(const std::function<double(double)> &f, double a,
                           double b, std::span<const double> breakpoints,
                           QuadratureOptions opts) {
  std::vector<double> cuts{a};
  for (double p : breakpoints)
    if (p > a && p < b)
      cuts.push_back(p);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  // Judged as a whole: a piece that contributes next to nothing need not
  // reach the relative tolerance on its own.
  Piece total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const auto part = gauss_kronrod_piece(f, cuts[i], cuts[i + 1], opts);
    total.value += part.value;
    total.error += part.error;
    total.l1 += part.l1;
  }
  return checked(total, a, b, opts);
}

} // namespace stolarsky
