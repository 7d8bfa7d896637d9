#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

namespace stolarsky {

/// The four normed division algebras, valued by their real dimension d0.
enum class Field : int { Real = 1, Complex = 2, Quaternion = 4, Octonion = 8 };

constexpr int dim(Field f) { return static_cast<int>(f); }
std::string_view field_name(Field f);

/// An element of R, C, H or O in the basis {1, e1, ..., e7}.
///
/// All four algebras share the 8-slot layout; an element of a subalgebra
/// keeps the slots at and above dim(field) at zero. The product is the
/// Cayley-Dickson doubling (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)),
/// applied R -> C -> H -> O with the upper half of each level as the new
/// imaginary unit. The resulting octonion table:
///
///        e1   e2   e3   e4   e5   e6   e7
///   e1  -1    e3  -e2   e5  -e4  -e7   e6
///   e2  -e3  -1    e1   e6   e7  -e4  -e5
///   e3   e2  -e1  -1    e7  -e6   e5  -e4
///   e4  -e5  -e6  -e7  -1    e1   e2   e3
///   e5   e4  -e7   e6  -e1  -1   -e3   e2
///   e6   e7   e4  -e5  -e2   e3  -1   -e1
///   e7  -e6   e5   e4  -e3  -e2   e1  -1
///
/// (row times column). H is spanned by {1, e1, e2, e3}, C by {1, e1}.
class AlgebraElement {
public:
  using Coeffs = std::array<double, 8>;

  AlgebraElement() = default;
  explicit AlgebraElement(Field field) : field_(field) {}
  /// Throws std::domain_error if a coefficient outside the field is nonzero.
  AlgebraElement(Field field, const Coeffs &coeffs);

  static AlgebraElement real(Field field, double value);
  /// Basis unit e_i (i = 0 is the identity). Requires i < dim(field).
  static AlgebraElement unit(Field field, int i);

  Field field() const { return field_; }
  const Coeffs &coeffs() const { return c_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  AlgebraElement &operator+=(const AlgebraElement &o);
  AlgebraElement &operator-=(const AlgebraElement &o);
  AlgebraElement &operator*=(double s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) {
    return a -= b;
  }
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

private:
  Coeffs c_{};
  Field field_ = Field::Real;
};

/// Bilinear product. Throws std::domain_error on field mismatch.
AlgebraElement mul(const AlgebraElement &a, const AlgebraElement &b);
AlgebraElement conj(const AlgebraElement &a);
double re(const AlgebraElement &a);
double norm_sq(const AlgebraElement &a);
double norm(const AlgebraElement &a);
/// Re(a conj(b)), the real inner product of the coefficient vectors.
double real_dot(const AlgebraElement &a, const AlgebraElement &b);

/// A square matrix with entries in one algebra. Used both for general
/// Hermitian matrices and for the projector model of projective points.
class HermitianMatrix {
public:
  HermitianMatrix(Field field, int size);

  Field field() const { return field_; }
  int size() const { return size_; }

  const AlgebraElement &at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * size_ + j)];
  }
  /// Sets (i, j) to v and (j, i) to conj(v).
  void set_hermitian(int i, int j, const AlgebraElement &v);
  /// Sets a single entry; the caller is responsible for symmetry.
  void set(int i, int j, const AlgebraElement &v);

  /// Real part of the trace.
  double trace() const;

  HermitianMatrix &operator+=(const HermitianMatrix &o);
  HermitianMatrix &operator-=(const HermitianMatrix &o);
  HermitianMatrix &operator*=(double s);
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix &b) {
    return a -= b;
  }
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix &b) {
    return a += b;
  }
  friend HermitianMatrix operator*(HermitianMatrix a, double s) { return a *= s; }

  std::span<const AlgebraElement> entries() const { return entries_; }

private:
  Field field_;
  int size_;
  std::vector<AlgebraElement> entries_;
};

/// Entrywise product sum (A B)_ij = sum_k a_ik b_kj (no associativity needed).
HermitianMatrix matmul(const HermitianMatrix &a, const HermitianMatrix &b);

/// <A, B> = Re Tr AB = Re sum a_ij conj(b_ij). Throws on shape/field mismatch.
double inner_product(const HermitianMatrix &a, const HermitianMatrix &b);

/// Hilbert-Schmidt norm (sum |a_ij|^2)^(1/2).
double hs_norm(const HermitianMatrix &a);

/// Largest |a_ij - conj(a_ji)| together with the imaginary parts on the
/// diagonal; zero for an exactly Hermitian matrix.
double hermitian_residual(const HermitianMatrix &a);

inline constexpr double kPointTolerance = 1e-10;
inline constexpr double kAssociatorTolerance = 1e-10;

struct PointCheck {
  bool valid = false;
  double idempotency_residual = 0.0; ///< ||P^2 - P|| (Hilbert-Schmidt)
  double trace_residual = 0.0;       ///< |Tr P - 1|
  double hermitian_residual = 0.0;
};

/// Checks P^2 = P, Tr P = 1 and Hermitian symmetry up to `tol`.
PointCheck is_valid_point(const HermitianMatrix &p, double tol = kPointTolerance);

/// Rank-one projector (P)_ij = a_i conj(a_j) for a unit vector a.
///
/// Throws std::domain_error if |a| differs from 1 by more than 1e-12, if the
/// entries mix fields, or, over the octonions, if the vector does not have
/// length 3 or (a0 a1) a2 differs from a0 (a1 a2) by more than `assoc_tol`.
HermitianMatrix projector_from_vector(std::span<const AlgebraElement> a,
                                      double assoc_tol = kAssociatorTolerance);

/// Hermitian inner product (a, b) = sum conj(a_i) b_i.
AlgebraElement hermitian_product(std::span<const AlgebraElement> a,
                                 std::span<const AlgebraElement> b);

} // namespace stolarsky
