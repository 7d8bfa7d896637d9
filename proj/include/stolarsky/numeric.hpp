#pragma once

#include <functional>
#include <initializer_list>
#include <span>

namespace stolarsky {

// Gamma-family helpers. Everything goes through log-gamma; arguments are
// positive throughout this library.

double log_gamma(double x);

/// log B(a, b) for a, b > 0.
double log_beta(double a, double b);

double beta_fn(double a, double b);

/// Rising factorial (a)_l = a (a+1) ... (a+l-1), (a)_0 = 1, for a > 0.
double log_rising_factorial(double a, int l);
double rising_factorial(double a, int l);

/// log binomial(a + l, l) = log Gamma(a+l+1) - log Gamma(a+1) - log l!.
double log_binomial(double a, int l);

/// Regularized incomplete beta I_x(a, b). `y` must equal 1 - x; passing it
/// separately keeps accuracy when x is close to 1.
double incomplete_beta(double a, double b, double x, double y);
double incomplete_beta(double a, double b, double x);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

struct QuadratureOptions {
  double rel_tol = 1e-13;
  double abs_tol = 1e-15;
  unsigned max_depth = 18;
};

/// Adaptive Gauss-Kronrod integral of f over [a, b]. Throws numeric_error if
/// the error estimate stays above max(rel_tol * L1, abs_tol).
QuadratureResult integrate(const std::function<double(double)> &f, double a,
                           double b, QuadratureOptions opts = {});

/// Same, splitting [a, b] at the given interior breakpoints (kinks of the
/// integrand). Breakpoints outside (a, b) are ignored. The error test
/// applies to the sum over the pieces.
QuadratureResult integrate(const std::function<double(double)> &f, double a,
                           double b, std::span<const double> breakpoints,
                           QuadratureOptions opts = {});

} // namespace stolarsky
