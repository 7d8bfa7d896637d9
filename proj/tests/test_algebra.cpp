#include "support.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

using namespace stolarsky;
using test::max_abs_diff;
using test::random_element;

namespace {

const Field kFields[] = {Field::Real, Field::Complex, Field::Quaternion, Field::Octonion};

AlgebraElement oct(std::initializer_list<double> c) {
  AlgebraElement::Coeffs a{};
  std::size_t i = 0;
  for (double v : c)
    a[i++] = v;
  return AlgebraElement(Field::Octonion, a);
}

AlgebraElement e(int i) { return AlgebraElement::unit(Field::Octonion, i); }

// Signed index of e_i e_j (row i, column j), as documented in algebra.hpp.
constexpr int kTable[7][7] = {
    {0, 3, -2, 5, -4, -7, 6},  {-3, 0, 1, 6, 7, -4, -5}, {2, -1, 0, 7, -6, 5, -4},
    {-5, -6, -7, 0, 1, 2, 3},  {4, -7, 6, -1, 0, -3, 2}, {7, 4, -5, -2, 3, 0, -1},
    {-6, 5, 4, -3, -2, 1, 0}};

} // namespace

TEST_CASE("field dimensions") {
  CHECK(dim(Field::Real) == 1);
  CHECK(dim(Field::Complex) == 2);
  CHECK(dim(Field::Quaternion) == 4);
  CHECK(dim(Field::Octonion) == 8);
}

TEST_CASE("elements outside their field are rejected") {
  AlgebraElement::Coeffs c{};
  c[2] = 1.0;
  CHECK_THROWS_AS(AlgebraElement(Field::Complex, c), std::domain_error);
  CHECK_NOTHROW(AlgebraElement(Field::Quaternion, c));
  CHECK_THROWS_AS(AlgebraElement::unit(Field::Quaternion, 4), std::domain_error);
}

TEST_CASE("multiplication table") {
  SUBCASE("units square to -1") {
    for (int i = 1; i <= 7; ++i)
      CHECK(mul(e(i), e(i)) == AlgebraElement::real(Field::Octonion, -1.0));
  }
  SUBCASE("e1 e2 = e3, e2 e1 = -e3") {
    CHECK(mul(e(1), e(2)) == e(3));
    CHECK(mul(e(2), e(1)) == e(3) * -1.0);
  }
  SUBCASE("documented table, anticommuting units") {
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        if (i == j)
          continue;
        const int k = kTable[i - 1][j - 1];
        const AlgebraElement expected = e(std::abs(k)) * (k > 0 ? 1.0 : -1.0);
        CHECK(mul(e(i), e(j)) == expected);
        CHECK(mul(e(j), e(i)) == expected * -1.0);
      }
  }
}

TEST_CASE("identity, conjugation, real part, norm") {
  Rng rng = substream(11, 0);
  const auto one = AlgebraElement::real(Field::Octonion, 1.0);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_element(Field::Octonion, rng);
    CHECK(max_abs_diff(mul(one, a), a) == 0.0);
    CHECK(max_abs_diff(mul(a, one), a) == 0.0);
  }
  CHECK(conj(oct({1, 1})) == oct({1, -1}));
  CHECK(re(oct({2.5, 1, 3})) == 2.5);
  CHECK(norm(oct({3, 0, 0, 0, 4})) == doctest::Approx(5.0));
}

TEST_CASE("field mismatch in products") {
  CHECK_THROWS_AS(mul(AlgebraElement::unit(Field::Complex, 1), e(1)), std::domain_error);
}

TEST_CASE("norm two ways and Re ab = Re ba") {
  Rng rng = substream(12, 0);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_element(Field::Octonion, rng);
    const auto b = random_element(Field::Octonion, rng);
    CHECK(std::fabs(std::sqrt(re(mul(a, conj(a)))) - norm(a)) <= 1e-12 * norm(a));
    CHECK(std::fabs(std::sqrt(re(mul(conj(a), a))) - norm(a)) <= 1e-12 * norm(a));
    CHECK(std::fabs(re(mul(a, b)) - re(mul(b, a))) <= 1e-12 * norm(a) * norm(b));
  }
}

TEST_CASE("composition algebra identities") {
  Rng rng = substream(13, 0);
  for (int t = 0; t < 1000; ++t) {
    const auto a = random_element(Field::Octonion, rng);
    const auto b = random_element(Field::Octonion, rng);
    const double scale = norm(a) * norm(b);
    // |ab| = |a||b|
    CHECK(std::fabs(norm(mul(a, b)) - scale) <= 1e-12 * scale);
    // conj(ab) = conj(b) conj(a)
    CHECK(max_abs_diff(conj(mul(a, b)), mul(conj(b), conj(a))) <= 1e-12 * scale);
    // alternativity
    const double s3 = norm(a) * scale;
    CHECK(max_abs_diff(mul(mul(a, a), b), mul(a, mul(a, b))) <= 1e-12 * s3);
    CHECK(max_abs_diff(mul(mul(a, b), b), mul(a, mul(b, b))) <= 1e-12 * scale * norm(b));
  }
}

TEST_CASE("Artin: subalgebras generated by two elements associate") {
  Rng rng = substream(14, 0);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_element(Field::Octonion, rng);
    const auto b = random_element(Field::Octonion, rng);
    // Words of length <= 2 in {a, b}; all bracketings of triples of them.
    const std::array<AlgebraElement, 6> words{a, b, mul(a, b), mul(b, a), mul(a, a), mul(b, b)};
    for (const auto &x : words)
      for (const auto &y : words)
        for (const auto &z : words) {
          const double s = norm(x) * norm(y) * norm(z);
          CHECK(max_abs_diff(mul(mul(x, y), z), mul(x, mul(y, z))) <= 1e-10 * s);
        }
  }
}

TEST_CASE("octonions are not associative") {
  CHECK(max_abs_diff(mul(mul(e(1), e(2)), e(4)), mul(e(1), mul(e(2), e(4)))) > 1.0);
}

TEST_CASE("subalgebra closure") {
  Rng rng = substream(15, 0);
  for (Field f : kFields) {
    for (int t = 0; t < 50; ++t) {
      const auto p = mul(random_element(f, rng), random_element(f, rng));
      CHECK(p.field() == f);
      for (int k = dim(f); k < 8; ++k)
        CHECK(p[k] == 0.0);
    }
  }
  SUBCASE("real and complex products commute") {
    for (Field f : {Field::Real, Field::Complex}) {
      const auto a = random_element(f, rng);
      const auto b = random_element(f, rng);
      CHECK(max_abs_diff(mul(a, b), mul(b, a)) <= 1e-15);
    }
  }
}

namespace {

HermitianMatrix random_hermitian(Field f, int size, Rng &rng) {
  HermitianMatrix m(f, size);
  for (int i = 0; i < size; ++i) {
    m.set(i, i, AlgebraElement::real(f, standard_normal(rng)));
    for (int j = i + 1; j < size; ++j)
      m.set_hermitian(i, j, random_element(f, rng));
  }
  return m;
}

std::vector<AlgebraElement> random_unit(Field f, int size, Rng &rng) {
  std::vector<AlgebraElement> a;
  double s = 0.0;
  for (int i = 0; i < size; ++i) {
    a.push_back(random_element(f, rng));
    s += norm_sq(a.back());
  }
  for (auto &x : a)
    x *= 1.0 / std::sqrt(s);
  return a;
}

} // namespace

TEST_CASE("Hermitian inner product and norm") {
  Rng rng = substream(16, 0);
  for (Field f : kFields) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_hermitian(f, 3, rng);
      const auto b = random_hermitian(f, 3, rng);
      CHECK(hermitian_residual(a) == 0.0);
      CHECK(std::fabs(inner_product(a, b) - inner_product(b, a)) <= 1e-12 * hs_norm(a) * hs_norm(b));
      CHECK(std::fabs(hs_norm(a) - std::sqrt(inner_product(a, a))) <= 1e-12 * hs_norm(a));
      const double lhs = std::pow(hs_norm(a - b), 2);
      const double rhs = std::pow(hs_norm(a), 2) + std::pow(hs_norm(b), 2) - 2.0 * inner_product(a, b);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * (std::pow(hs_norm(a), 2) + std::pow(hs_norm(b), 2)));
    }
  }
  CHECK(hs_norm(HermitianMatrix(Field::Quaternion, 3)) == 0.0);
  CHECK_THROWS_AS(inner_product(HermitianMatrix(Field::Real, 3), HermitianMatrix(Field::Real, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(inner_product(HermitianMatrix(Field::Real, 3), HermitianMatrix(Field::Complex, 3)),
                  std::domain_error);
}

TEST_CASE("projectors") {
  SUBCASE("first basis vector gives the corner projector") {
    std::vector<AlgebraElement> a(3, AlgebraElement(Field::Complex));
    a[0] = AlgebraElement::real(Field::Complex, 1.0);
    const auto p = projector_from_vector(a);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(p.at(i, j) == AlgebraElement::real(Field::Complex, i == 0 && j == 0 ? 1.0 : 0.0));
    const auto check = is_valid_point(p);
    CHECK(check.valid);
    CHECK(check.idempotency_residual == 0.0);
    CHECK(check.trace_residual == 0.0);
    CHECK(check.hermitian_residual == 0.0);
  }
  SUBCASE("real circle gives zeta(u)") {
    const double u = 0.3;
    const std::vector<AlgebraElement> a{AlgebraElement::real(Field::Real, std::cos(u)),
                                        AlgebraElement::real(Field::Real, std::sin(u))};
    const auto p = projector_from_vector(a);
    CHECK(p.at(0, 0)[0] == doctest::Approx(std::cos(u) * std::cos(u)).epsilon(1e-15));
    CHECK(p.at(0, 1)[0] == doctest::Approx(std::cos(u) * std::sin(u)).epsilon(1e-15));
    CHECK(p.at(1, 0)[0] == doctest::Approx(std::cos(u) * std::sin(u)).epsilon(1e-15));
    CHECK(p.at(1, 1)[0] == doctest::Approx(std::sin(u) * std::sin(u)).epsilon(1e-15));
  }
  SUBCASE("scaling by 2 breaks validity") {
    std::vector<AlgebraElement> a(3, AlgebraElement(Field::Real));
    a[0] = AlgebraElement::real(Field::Real, 1.0);
    const auto check = is_valid_point(projector_from_vector(a) * 2.0);
    CHECK_FALSE(check.valid);
    CHECK(check.trace_residual == doctest::Approx(1.0));
  }
  SUBCASE("random quaternionic vectors, n = 3") {
    Rng rng = substream(17, 0);
    for (int t = 0; t < 100; ++t) {
      const auto p = projector_from_vector(random_unit(Field::Quaternion, 4, rng));
      CHECK(is_valid_point(p, 1e-10).valid);
      CHECK(inner_product(p, p) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(hs_norm(p) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("octonionic triples with a real first entry") {
    Rng rng = substream(18, 0);
    for (int t = 0; t < 100; ++t) {
      auto a = random_unit(Field::Octonion, 3, rng);
      const double r = standard_normal(rng);
      a[0] = AlgebraElement::real(Field::Octonion, r);
      double s = 0.0;
      for (const auto &x : a)
        s += norm_sq(x);
      for (auto &x : a)
        x *= 1.0 / std::sqrt(s);
      const auto check = is_valid_point(projector_from_vector(a));
      CHECK(check.valid);
      CHECK(check.idempotency_residual <= 1e-10);
    }
  }
  SUBCASE("errors") {
    std::vector<AlgebraElement> twice(2, AlgebraElement::real(Field::Real, 1.0));
    CHECK_THROWS_AS(projector_from_vector(twice), std::domain_error);
    // e1, e2, e4 do not associate: (e1 e2) e4 = -e1 (e2 e4).
    std::vector<AlgebraElement> bad{e(1) * 0.5, e(2) * 0.5, e(4) * std::sqrt(0.5)};
    CHECK_THROWS_WITH_AS(projector_from_vector(bad), doctest::Contains("associat"),
                         std::domain_error);
    std::vector<AlgebraElement> four(4, AlgebraElement::real(Field::Octonion, 0.5));
    CHECK_THROWS_AS(projector_from_vector(four), std::domain_error);
  }
}

TEST_CASE("hermitian_product is conjugate-linear in the first slot") {
  Rng rng = substream(19, 0);
  const auto a = random_unit(Field::Complex, 3, rng);
  const auto b = random_unit(Field::Complex, 3, rng);
  const auto ab = hermitian_product(a, b);
  const auto ba = hermitian_product(b, a);
  CHECK(max_abs_diff(ab, conj(ba)) <= 1e-15);
  CHECK(re(hermitian_product(a, a)) == doctest::Approx(1.0).epsilon(1e-14));
}
