#include "stolarsky/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stolarsky {

std::string_view field_name(Field f) {
  switch (f) {
  case Field::Real:
    return "real";
  case Field::Complex:
    return "complex";
  case Field::Quaternion:
    return "quaternion";
  case Field::Octonion:
    return "octonion";
  }
  return "unknown";
}

namespace {

template <std::size_t N> void cd_conj(const double *a, double *out) {
  out[0] = a[0];
  for (std::size_t i = 1; i < N; ++i)
    out[i] = -a[i];
}

// (p, q)(r, s) = (p r - conj(s) q, s p + q conj(r))
template <std::size_t N> void cd_mul(const double *a, const double *b, double *out) {
  if constexpr (N == 1) {
    out[0] = a[0] * b[0];
  } else {
    constexpr std::size_t H = N / 2;
    const double *p = a;
    const double *q = a + H;
    const double *r = b;
    const double *s = b + H;
    double conj_s[H], conj_r[H], t1[H], t2[H];
    cd_conj<H>(s, conj_s);
    cd_conj<H>(r, conj_r);
    cd_mul<H>(p, r, t1);
    cd_mul<H>(conj_s, q, t2);
    for (std::size_t i = 0; i < H; ++i)
      out[i] = t1[i] - t2[i];
    cd_mul<H>(s, p, t1);
    cd_mul<H>(q, conj_r, t2);
    for (std::size_t i = 0; i < H; ++i)
      out[H + i] = t1[i] + t2[i];
  }
}

void require_same_field(Field a, Field b, const char *what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": field mismatch (" << field_name(a) << " vs "
        << field_name(b) << ")";
    throw std::domain_error(msg.str());
  }
}

} // namespace

AlgebraElement::AlgebraElement(Field field, const Coeffs &coeffs)
    : c_(coeffs), field_(field) {
  for (int i = dim(field); i < 8; ++i)
    if (c_[static_cast<std::size_t>(i)] != 0.0)
      throw std::domain_error("AlgebraElement: coefficient outside the " +
                              std::string(field_name(field)) + " subalgebra");
}

AlgebraElement AlgebraElement::real(Field field, double value) {
  AlgebraElement e(field);
  e.c_[0] = value;
  return e;
}

AlgebraElement AlgebraElement::unit(Field field, int i) {
  if (i < 0 || i >= dim(field))
    throw std::domain_error("AlgebraElement::unit: index outside the field");
  AlgebraElement e(field);
  e.c_[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o) {
  require_same_field(field_, o.field_, "add");
  for (std::size_t i = 0; i < 8; ++i)
    c_[i] += o.c_[i];
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o) {
  require_same_field(field_, o.field_, "subtract");
  for (std::size_t i = 0; i < 8; ++i)
    c_[i] -= o.c_[i];
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(double s) {
  for (auto &x : c_)
    x *= s;
  return *this;
}

AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b) {
  require_same_field(a.field(), b.field(), "mul");
  AlgebraElement::Coeffs out{};
  const double *pa = a.coeffs().data();
  const double *pb = b.coeffs().data();
  switch (a.field()) {
  case Field::Real:
    cd_mul<1>(pa, pb, out.data());
    break;
  case Field::Complex:
    cd_mul<2>(pa, pb, out.data());
    break;
  case Field::Quaternion:
    cd_mul<4>(pa, pb, out.data());
    break;
  case Field::Octonion:
    cd_mul<8>(pa, pb, out.data());
    break;
  }
  return AlgebraElement(a.field(), out);
}

AlgebraElement conj(const AlgebraElement &a) {
  AlgebraElement::Coeffs c = a.coeffs();
  for (std::size_t i = 1; i < 8; ++i)
    c[i] = -c[i];
  return AlgebraElement(a.field(), c);
}

double re(const AlgebraElement &a) { return a[0]; }

double norm_sq(const AlgebraElement &a) {
  double s = 0.0;
  for (double x : a.coeffs())
    s += x * x;
  return s;
}

double norm(const AlgebraElement &a) { return std::sqrt(norm_sq(a)); }

double real_dot(const AlgebraElement &a, const AlgebraElement &b) {
  double s = 0.0;
  for (int i = 0; i < dim(a.field()); ++i)
    s += a[i] * b[i];
  return s;
}

HermitianMatrix::HermitianMatrix(Field field, int size)
    : field_(field), size_(size),
      entries_(static_cast<std::size_t>(size * size), AlgebraElement(field)) {
  if (size < 1)
    throw std::domain_error("HermitianMatrix: size must be positive");
}

void HermitianMatrix::set(int i, int j, const AlgebraElement &v) {
  require_same_field(field_, v.field(), "HermitianMatrix::set");
  entries_[static_cast<std::size_t>(i * size_ + j)] = v;
}

void HermitianMatrix::set_hermitian(int i, int j, const AlgebraElement &v) {
  set(i, j, v);
  set(j, i, conj(v));
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < size_; ++i)
    t += at(i, i)[0];
  return t;
}

namespace {
void require_same_shape(const HermitianMatrix &a, const HermitianMatrix &b,
                        const char *what) {
  require_same_field(a.field(), b.field(), what);
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << what << ": size mismatch (" << a.size() << " vs " << b.size() << ")";
    throw std::domain_error(msg.str());
  }
}
} // namespace

HermitianMatrix &HermitianMatrix::operator+=(const HermitianMatrix &o) {
  require_same_shape(*this, o, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] += o.entries_[k];
  return *this;
}

HermitianMatrix &HermitianMatrix::operator-=(const HermitianMatrix &o) {
  require_same_shape(*this, o, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k)
    entries_[k] -= o.entries_[k];
  return *this;
}

HermitianMatrix &HermitianMatrix::operator*=(double s) {
  for (auto &e : entries_)
    e *= s;
  return *this;
}

HermitianMatrix matmul(const HermitianMatrix &a, const HermitianMatrix &b) {
  require_same_shape(a, b, "matmul");
  const int n = a.size();
  HermitianMatrix out(a.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      AlgebraElement acc(a.field());
      for (int k = 0; k < n; ++k)
        acc += mul(a.at(i, k), b.at(k, j));
      out.set(i, j, acc);
    }
  return out;
}

double inner_product(const HermitianMatrix &a, const HermitianMatrix &b) {
  require_same_shape(a, b, "inner_product");
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k)
    s += real_dot(ea[k], eb[k]);
  return s;
}

double hs_norm(const HermitianMatrix &a) {
  double s = 0.0;
  for (const auto &e : a.entries())
    s += norm_sq(e);
  return std::sqrt(s);
}

double hermitian_residual(const HermitianMatrix &a) {
  double r = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j)
      r = std::max(r, norm(a.at(i, j) - conj(a.at(j, i))));
  return r;
}

PointCheck is_valid_point(const HermitianMatrix &p, double tol) {
  PointCheck check;
  check.hermitian_residual = hermitian_residual(p);
  check.trace_residual = std::fabs(p.trace() - 1.0);
  check.idempotency_residual = hs_norm(matmul(p, p) - p);
  check.valid = check.hermitian_residual <= tol && check.trace_residual <= tol &&
                check.idempotency_residual <= tol;
  return check;
}

AlgebraElement hermitian_product(std::span<const AlgebraElement> a,
                                 std::span<const AlgebraElement> b) {
  if (a.size() != b.size() || a.empty())
    throw std::domain_error("hermitian_product: length mismatch");
  AlgebraElement acc(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    acc += mul(conj(a[i]), b[i]);
  return acc;
}

HermitianMatrix projector_from_vector(std::span<const AlgebraElement> a,
                                      double assoc_tol) {
  if (a.empty())
    throw std::domain_error("projector_from_vector: empty vector");
  const Field field = a[0].field();
  double length_sq = 0.0;
  for (const auto &x : a) {
    require_same_field(field, x.field(), "projector_from_vector");
    length_sq += norm_sq(x);
  }
  if (std::fabs(std::sqrt(length_sq) - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "projector_from_vector: vector is not a unit vector (|a| = "
        << std::sqrt(length_sq) << ")";
    throw std::domain_error(msg.str());
  }
  if (field == Field::Octonion) {
    if (a.size() != 3)
      throw std::domain_error(
          "projector_from_vector: octonionic points need exactly 3 entries");
    const double residual =
        norm(mul(mul(a[0], a[1]), a[2]) - mul(a[0], mul(a[1], a[2])));
    if (residual > assoc_tol) {
      std::ostringstream msg;
      msg << "projector_from_vector: (a0 a1) a2 != a0 (a1 a2), associator norm "
          << residual;
      throw std::domain_error(msg.str());
    }
  }
  const int n = static_cast<int>(a.size());
  HermitianMatrix p(field, n);
  for (int i = 0; i < n; ++i) {
    p.set(i, i, AlgebraElement::real(field, norm_sq(a[static_cast<std::size_t>(i)])));
    for (int j = i + 1; j < n; ++j)
      p.set_hermitian(i, j,
                      mul(a[static_cast<std::size_t>(i)],
                          conj(a[static_cast<std::size_t>(j)])));
  }
  return p;
}

} // namespace stolarsky
