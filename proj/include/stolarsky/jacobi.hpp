#pragma once

#include "stolarsky/spaces.hpp"

#include <span>
#include <vector>

namespace stolarsky {

/// Parameters of the Jacobi weight (1-t)^alpha (1+t)^beta.
struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  /// alpha = d/2 - 1, beta = d0/2 - 1.
  static JacobiParams for_space(const SpaceId &space) {
    return {space.alpha(), space.beta()};
  }
};

/// P_l^{(alpha,beta)}(t) by the three-term recurrence in l.
/// Throws std::domain_error for t outside [-1, 1] or l < 0.
double jacobi_eval(JacobiParams p, int l, double t);

/// Fills out[l] = P_l(t) for l = 0 .. out.size() - 1 in one recurrence pass.
void jacobi_table(JacobiParams p, double t, std::span<double> out);

/// P_l(1) = binomial(alpha + l, l).
double value_at_one(JacobiParams p, int l);

/// M_l = (2l+a+b+1) Gamma(l+1) Gamma(l+a+b+1) / (Gamma(l+a+1) Gamma(l+b+1)),
/// so that int P_l^2 w = 2^(a+b+1) / M_l. At l = 0 the limit
/// Gamma(a+b+2) / (Gamma(a+1) Gamma(b+1)) is used (relevant for a+b = -1).
double norm_const_M(JacobiParams p, int l);

/// C_0 = B(alpha + 3/2, beta + 1).
double coeff_C0(JacobiParams p);

/// C_l = B(alpha+3/2, beta+l+1) (1/2)_{l-1} P_l(1) / l!, l >= 1.
double coeff_C(JacobiParams p, int l);

enum class CoefficientRoute { ClosedForm, Quadrature };

/// A_l(xi_nat) = 2 int_0^pi sin(r/2)^(2d+1) cos(r/2)^(2d0+1)
///               {P_{l-1}^{(alpha+1,beta+1)}(cos r)}^2 dr,   l >= 1.
///
/// ClosedForm evaluates, with s = (d + d0)/2,
///   2 (1/2)_{l-1} / ((l-1)!)^2 B(d+1, d0+1)
///     Gamma(d/2+l) Gamma(d0/2+l) Gamma(s+3/2)
///     / (Gamma(d/2+1) Gamma(d0/2+1) Gamma(s+l+1/2)),
/// Quadrature integrates the definition. Both give 2 B(d+1, d0+1) at l = 1.
double coeff_A(const SpaceId &space, int l,
               CoefficientRoute route = CoefficientRoute::ClosedForm);

/// Number of retained terms and a rigorous bound on what was dropped.
struct SeriesTruncation {
  int L = 1;
  double tail_bound = 0.0;
};

struct SeriesValue {
  double value = 0.0;
  SeriesTruncation truncation;
};

/// Coefficients of the zonal expansions of tau and theta^Delta(xi_nat),
///   tau(theta)        = sum_l tau_coeff[l] (1 - phi_l(theta)),
///   theta^Delta(theta) = sum_l sd_coeff[l]  (1 - phi_l(theta)),
/// with tau_coeff[l] = M_l C_l / 2 and sd_coeff[l] = M_l A_l / (l^2 B(d/2, d0/2)).
///
/// Since sum_l coeff[l] equals the mean of the metric over Q x Q and
/// |1 - phi_l| <= 2, the tail after L terms is bounded by
/// 2 (mean - sum_{l<=L} coeff[l]). The means come from mean_chordal and the
/// quadrature in mean_sd_metric.
class ZonalExpansion {
public:
  explicit ZonalExpansion(const SpaceId &space,
                          CoefficientRoute route = CoefficientRoute::ClosedForm);

  const SpaceId &space() const { return space_; }

  SeriesTruncation tau_truncation(int L);
  SeriesTruncation sd_truncation(int L);
  /// Smallest L whose tail bound is below `tol`. Throws numeric_error if
  /// that needs more than max_L terms.
  SeriesTruncation tau_truncation_for(double tol, int max_L = 4'000'000);
  SeriesTruncation sd_truncation_for(double tol, int max_L = 4'000'000);

  SeriesValue tau_series(double theta, int L);
  SeriesValue sd_series(double theta, int L);

  /// Coefficient tables are grown on demand.
  double tau_coeff(int l);
  double sd_coeff(int l);

private:
  void grow(int L);
  double series(const std::vector<double> &coeffs, double theta, int L) const;

  SpaceId space_;
  CoefficientRoute route_;
  JacobiParams params_;
  std::vector<double> tau_coeffs_{0.0}; // index 0 unused
  std::vector<double> sd_coeffs_{0.0};
  std::vector<double> tau_partial_{0.0};
  std::vector<double> sd_partial_{0.0};
  std::vector<double> at_one_{1.0}; // P_l(1)
};

/// Truncated expansion 1/2 sum_{l=1}^L M_l C_l [1 - P_l(cos t)/P_l(1)] of
/// the chordal metric. Throws std::domain_error for theta outside [0, pi].
SeriesValue tau_series(const SpaceId &space, double theta, int L);

/// Truncated expansion B(d/2,d0/2)^-1 sum_{l=1}^L l^-2 M_l A_l [1 - phi_l]
/// of theta^Delta(xi_nat), with closed-form A_l.
SeriesValue sd_series(const SpaceId &space, double theta, int L);

/// gamma(Q) solved from the l-th coefficient identity
///   gamma A_l = (1/2)_{l-1} l^2 / (2 l!) binomial(alpha+l, l)
///               B(d/2, d0/2) B((d+1)/2, l + d0/2).
/// The result must not depend on l.
double gamma_from_equation(const SpaceId &space, int l,
                           CoefficientRoute route = CoefficientRoute::Quadrature);

} // namespace stolarsky
