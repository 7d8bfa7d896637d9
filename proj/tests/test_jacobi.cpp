#include "stolarsky/errors.hpp"
#include "stolarsky/jacobi.hpp"
#include "stolarsky/numeric.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

using namespace stolarsky;
using std::numbers::pi;

namespace {

const char *kFive[] = {"S2", "RP2", "CP2", "HP2", "OP2"};

// Rodrigues' formula with the l-th derivative expanded by Leibniz' rule:
// d^l/dt^l [(1-t)^a (1+t)^b], a = l + alpha, b = l + beta.
long double rodrigues(JacobiParams p, int l, long double t) {
  const long double a = l + p.alpha;
  const long double b = l + p.beta;
  long double sum = 0.0L;
  for (int k = 0; k <= l; ++k) {
    long double fa = 1.0L, fb = 1.0L, binom = 1.0L;
    for (int i = 0; i < k; ++i)
      fa *= -(a - i); // d^k (1-t)^a
    for (int i = 0; i < l - k; ++i)
      fb *= b - i; // d^(l-k) (1+t)^b
    for (int i = 0; i < k; ++i)
      binom = binom * (l - i) / (i + 1);
    sum += binom * fa * std::pow(1.0L - t, a - k) * fb * std::pow(1.0L + t, b - l + k);
  }
  long double factorial = 1.0L;
  for (int i = 2; i <= l; ++i)
    factorial *= i;
  const long double sign = l % 2 ? -1.0L : 1.0L;
  return sign / (std::pow(2.0L, l) * factorial) * sum /
         (std::pow(1.0L - t, (long double)p.alpha) * std::pow(1.0L + t, (long double)p.beta));
}

} // namespace

TEST_CASE("low degrees") {
  for (const char *name : kFive) {
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    for (double t : {-1.0, -0.3, 0.0, 0.6, 1.0})
      CHECK(jacobi_eval(p, 0, t) == 1.0);
    for (double t : {-0.9, 0.2, 0.75})
      CHECK(jacobi_eval(p, 1, t) ==
            doctest::Approx((p.alpha + 1) + (p.alpha + p.beta + 2) * (t - 1) / 2).epsilon(1e-15));
  }
  // a + b = -1 (the circle): the first recurrence step degenerates.
  const auto circle = JacobiParams::for_space(SpaceId::parse("S1"));
  CHECK(jacobi_eval(circle, 1, 0.5) == doctest::Approx(0.25));
}

TEST_CASE("recurrence against Rodrigues' formula") {
  for (const char *name : {"S1", "S2", "S3", "RP2", "CP2", "HP2", "OP2"}) {
    CAPTURE(std::string(name));
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    for (int l = 0; l <= 6; ++l)
      for (double t : {-0.7, 0.0, 0.4}) {
        const double oracle = static_cast<double>(rodrigues(p, l, t));
        CHECK(std::fabs(jacobi_eval(p, l, t) - oracle) <= 1e-8 * std::max(1.0, std::fabs(oracle)));
      }
  }
}

TEST_CASE("table matches single evaluations") {
  const auto p = JacobiParams::for_space(SpaceId::parse("HP2"));
  std::vector<double> table(41);
  jacobi_table(p, 0.3, table);
  for (int l = 0; l <= 40; ++l)
    CHECK(table[static_cast<std::size_t>(l)] == jacobi_eval(p, l, 0.3));
}

TEST_CASE("value at one") {
  for (const char *name : kFive) {
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    CHECK(value_at_one(p, 0) == 1.0);
    for (int l = 0; l <= 30; ++l)
      CHECK(jacobi_eval(p, l, 1.0) == doctest::Approx(value_at_one(p, l)).epsilon(1e-11));
  }
  const auto s2 = JacobiParams::for_space(SpaceId::parse("S2"));
  for (int l : {0, 1, 7, 100})
    CHECK(value_at_one(s2, l) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("bound |P_l| <= P_l(1)") {
  for (const char *name : kFive) {
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    std::vector<double> table(51);
    for (int k = 0; k < 1000; ++k) {
      jacobi_table(p, -1.0 + 2.0 * k / 999.0, table);
      for (int l = 0; l <= 50; ++l)
        CHECK(std::fabs(table[static_cast<std::size_t>(l)]) <= value_at_one(p, l) * (1 + 1e-12) + 1e-10);
    }
  }
}

TEST_CASE("orthogonality and normalization") {
  // With t = cos r the weight (1-t)^a (1+t)^b dt becomes
  // 2^(a+b+1) sin(r/2)^(2a+1) cos(r/2)^(2b+1) dr, which is bounded.
  for (const char *name : kFive) {
    CAPTURE(std::string(name));
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    for (int l = 0; l <= 10; ++l)
      for (int k = l; k <= 10; ++k) {
        const auto f = [&](double r) {
          const double t = std::cos(r);
          return jacobi_eval(p, l, t) * jacobi_eval(p, k, t) *
                 std::pow(std::sin(r / 2), 2 * p.alpha + 1) * std::pow(std::cos(r / 2), 2 * p.beta + 1);
        };
        const double integral = integrate(f, 0.0, pi).value;
        const double expected = l == k ? 1.0 / norm_const_M(p, l) : 0.0;
        CHECK(std::fabs(integral - expected) * norm_const_M(p, l) <= 1e-10);
      }
  }
}

TEST_CASE("normalization constants") {
  for (const char *name : kFive) {
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    CHECK(norm_const_M(p, 0) == doctest::Approx(std::tgamma(p.alpha + p.beta + 2) /
                                                (std::tgamma(p.alpha + 1) * std::tgamma(p.beta + 1))));
    for (int l = 0; l <= 200; ++l)
      CHECK(norm_const_M(p, l) > 0.0);
    const double r200 = norm_const_M(p, 200) / 200, r199 = norm_const_M(p, 199) / 199;
    CHECK(r200 < 3.0);
    CHECK(std::fabs(r200 - r199) < 1e-3 * r200);
  }
  CHECK(norm_const_M(JacobiParams::for_space(SpaceId::parse("S1")), 0) == doctest::Approx(1 / pi));
}

TEST_CASE("chordal coefficients") {
  for (const char *name : kFive) {
    CAPTURE(std::string(name));
    const auto s = SpaceId::parse(name);
    const auto p = JacobiParams::for_space(s);
    CHECK(coeff_C(p, 1) == doctest::Approx(beta_fn(p.alpha + 1.5, p.beta + 2) * (p.alpha + 1)).epsilon(1e-13));
    for (int l = 1; l <= 500; ++l) {
      const double c = norm_const_M(p, l) * coeff_C(p, l);
      CHECK(c > 0.0);
      CHECK(c * l * l < 4.0);
    }
    // M0 C0 = 1/2 sum_l M_l C_l. The terms decay like l^-2, so the raw
    // partial sum to 2000 is only good to ~1e-3; two Richardson steps over
    // L = 500, 1000, 2000 remove the 1/L and 1/L^2 tails.
    const double m0c0 = norm_const_M(p, 0) * coeff_C0(p);
    CHECK(m0c0 == doctest::Approx(mean_chordal(s)).epsilon(1e-14));
    double sum = 0.0, s500 = 0.0, s1000 = 0.0;
    for (int l = 1; l <= 2000; ++l) {
      sum += 0.5 * norm_const_M(p, l) * coeff_C(p, l);
      if (l == 500)
        s500 = sum;
      if (l == 1000)
        s1000 = sum;
    }
    const double tail500 = m0c0 - s500, tail2000 = m0c0 - sum;
    CHECK(tail2000 > 0.0);
    CHECK(tail500 / tail2000 == doctest::Approx(4.0).epsilon(0.02));
    const double once_a = 2 * s1000 - s500, once_b = 2 * sum - s1000;
    CHECK((4 * once_b - once_a) / 3 == doctest::Approx(m0c0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(coeff_C(JacobiParams{0.0, 0.0}, 0), std::domain_error);
}

TEST_CASE("A_l by both routes") {
  for (const char *name : {"S1", "S2", "S3", "RP2", "RP3", "CP2", "HP2", "OP2"}) {
    CAPTURE(std::string(name));
    const auto s = SpaceId::parse(name);
    const double a1 = 2 * beta_fn(s.d() + 1.0, s.d0() + 1.0);
    CHECK(coeff_A(s, 1, CoefficientRoute::ClosedForm) == doctest::Approx(a1).epsilon(1e-13));
    CHECK(coeff_A(s, 1, CoefficientRoute::Quadrature) == doctest::Approx(a1).epsilon(1e-12));
    for (int l = 1; l <= 10; ++l) {
      CAPTURE(l);
      CHECK(coeff_A(s, l, CoefficientRoute::Quadrature) ==
            doctest::Approx(coeff_A(s, l, CoefficientRoute::ClosedForm)).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(coeff_A(SpaceId::parse("S2"), 0), std::domain_error);
}

TEST_CASE("gamma from each coefficient identity") {
  for (const char *name : {"S1", "S2", "S7", "RP2", "RP4", "CP2", "CP3", "HP2", "OP2"}) {
    CAPTURE(std::string(name));
    const auto s = SpaceId::parse(name);
    const double gamma = gamma_const(s);
    CHECK(gamma_from_equation(s, 1) == doctest::Approx(gamma).epsilon(1e-11));
    double mean = 0.0, sq = 0.0;
    for (int l = 1; l <= 8; ++l) {
      const double rel = gamma_from_equation(s, l) / gamma - 1.0;
      CHECK(std::fabs(rel) <= 1e-9);
      CHECK(gamma_from_equation(s, l, CoefficientRoute::ClosedForm) == doctest::Approx(gamma).epsilon(1e-12));
      mean += rel / 8;
      sq += rel * rel / 8;
    }
    CHECK(sq - mean * mean < 1e-16);
  }
  CHECK(gamma_from_equation(SpaceId::parse("CP2"), 5) == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(gamma_from_equation(SpaceId::parse("OP2"), 5) == doctest::Approx(192.0 / 35.0).epsilon(1e-8));
}

TEST_CASE("chordal series") {
  const auto s2 = SpaceId::parse("S2");
  CHECK(tau_series(s2, 0.0, 10).value == 0.0);
  {
    // The bracketed series keeps the whole constant tail, about 1e-3 at
    // L = 500. Extrapolating over L = 500, 1000, 2000 recovers the limit.
    ZonalExpansion e(s2);
    const double exact = std::sin(pi / 4);
    const auto s500 = e.tau_series(pi / 2, 500);
    CHECK(std::fabs(s500.value - exact) <= s500.truncation.tail_bound);
    const double s1000 = e.tau_series(pi / 2, 1000).value;
    const double s2000 = e.tau_series(pi / 2, 2000).value;
    const double once_a = 2 * s1000 - s500.value, once_b = 2 * s2000 - s1000;
    CHECK((4 * once_b - once_a) / 3 == doctest::Approx(exact).epsilon(1e-7));
  }
  Rng rng = substream(31, 0);
  for (const char *name : kFive) {
    CAPTURE(std::string(name));
    ZonalExpansion e(SpaceId::parse(name));
    for (int k = 0; k < 20; ++k) {
      const double theta = pi * uniform01(rng);
      const auto v = e.tau_series(theta, 1000);
      CHECK(v.truncation.L == 1000);
      CHECK(std::fabs(v.value - std::sin(theta / 2)) <= v.truncation.tail_bound);
    }
    // sqrt(1 - t) = sqrt(2) (M0 C0 - 1/2 sum M_l C_l P_l(t) / P_l(1)), with
    // the constant term kept exact. Uniform away from t = 1.
    const auto p = JacobiParams::for_space(SpaceId::parse(name));
    std::vector<double> c(2001), table(2001);
    for (int l = 1; l <= 2000; ++l)
      c[static_cast<std::size_t>(l)] = 0.5 * norm_const_M(p, l) * coeff_C(p, l) / value_at_one(p, l);
    const double head = norm_const_M(p, 0) * coeff_C0(p);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double t = -1.0 + 1.99 * k / 199.0;
      jacobi_table(p, t, table);
      double sum = 0.0;
      for (int l = 2000; l >= 1; --l)
        sum += c[static_cast<std::size_t>(l)] * table[static_cast<std::size_t>(l)];
      worst = std::max(worst, std::fabs(std::sqrt(2.0) * (head - sum) - std::sqrt(1.0 - t)));
    }
    CHECK(worst < 1e-3);
  }
  CHECK_THROWS_AS(tau_series(s2, -0.1, 10), std::domain_error);
  CHECK_THROWS_AS(tau_series(s2, 3.2, 10), std::domain_error);
}

TEST_CASE("symmetric difference series") {
  const auto s2 = SpaceId::parse("S2");
  CHECK(sd_series(s2, 0.0, 10).value == 0.0);
  Rng rng = substream(32, 0);
  for (const char *name : kFive) {
    CAPTURE(std::string(name));
    const auto s = SpaceId::parse(name);
    const double gamma = gamma_const(s);
    ZonalExpansion e(s);
    const auto trunc = e.sd_truncation_for(1e-5);
    CHECK(trunc.tail_bound <= 1e-5);
    CHECK(e.sd_truncation(trunc.L - 1).tail_bound > 1e-5);
    const auto at_pi = e.sd_series(pi, trunc.L);
    CHECK(std::fabs(gamma * at_pi.value - 1.0) <= gamma * at_pi.truncation.tail_bound);
    for (int k = 0; k < 20; ++k) {
      const double theta = pi * uniform01(rng);
      CHECK(std::fabs(gamma * e.sd_series(theta, trunc.L).value - std::sin(theta / 2)) <= 1e-4);
    }
  }
}

TEST_CASE("truncation bounds") {
  ZonalExpansion e(SpaceId::parse("CP2"));
  double prev = 1e300;
  for (int L : {1, 2, 5, 10, 100, 1000}) {
    const double b = e.tau_truncation(L).tail_bound;
    CHECK(b >= 0.0);
    CHECK(b <= prev);
    prev = b;
  }
  const auto t = e.tau_truncation_for(1e-3);
  CHECK(t.tail_bound <= 1e-3);
  CHECK(e.tau_truncation(t.L - 1).tail_bound > 1e-3);
  CHECK_THROWS_AS(e.tau_truncation_for(1e-12, 1000), numeric_error);
  CHECK_THROWS_AS(e.sd_truncation(0), std::domain_error);
}

TEST_CASE("coefficient routes give the same expansion") {
  ZonalExpansion closed(SpaceId::parse("HP2"), CoefficientRoute::ClosedForm);
  ZonalExpansion quad(SpaceId::parse("HP2"), CoefficientRoute::Quadrature);
  for (int l = 1; l <= 12; ++l)
    CHECK(quad.sd_coeff(l) == doctest::Approx(closed.sd_coeff(l)).epsilon(1e-10));
}

TEST_CASE("argument checks") {
  const JacobiParams p{0.0, 0.0};
  CHECK_THROWS_AS(jacobi_eval(p, 2, 1.5), std::domain_error);
  CHECK_THROWS_AS(jacobi_eval(p, -1, 0.0), std::domain_error);
}
