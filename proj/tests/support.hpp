#pragma once

#include "stolarsky/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace test {

using namespace stolarsky;

inline AlgebraElement random_element(Field f, Rng &rng) {
  AlgebraElement::Coeffs c{};
  for (int k = 0; k < dim(f); ++k)
    c[static_cast<std::size_t>(k)] = standard_normal(rng);
  return AlgebraElement(f, c);
}

inline double max_abs_diff(const AlgebraElement &a, const AlgebraElement &b) {
  double m = 0.0;
  for (int k = 0; k < 8; ++k)
    m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

inline double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(b), 1e-300);
}

inline Field field_of(const SpaceId &space) {
  return space.is_sphere() ? Field::Real : space.field();
}

/// Number of homogeneous coordinates (entries of a representative vector).
inline int vector_length(const SpaceId &space) {
  return space.is_sphere() ? space.d() + 1 : space.n() + 1;
}

/// Representative vector as algebra elements.
using Vec = std::vector<AlgebraElement>;

inline Vec random_vector(const SpaceId &space, Rng &rng) {
  Vec v;
  for (int i = 0; i < vector_length(space); ++i)
    v.push_back(random_element(field_of(space), rng));
  return v;
}

inline std::vector<double> flatten(const SpaceId &space, const Vec &v) {
  std::vector<double> out;
  const int d0 = dim(field_of(space));
  for (const auto &a : v)
    for (int k = 0; k < d0; ++k)
      out.push_back(a[k]);
  return out;
}

inline Point to_point(const SpaceId &space, const Vec &v) {
  const auto flat = flatten(space, v);
  return point_from_representative(space, flat);
}

/// Columns of a random unitary (orthogonal for R) matrix over R, C or H,
/// from Gram-Schmidt on Gaussian vectors; scalars act from the right.
class Unitary {
public:
  Unitary(const SpaceId &space, Rng &rng) : field_(field_of(space)) {
    const int n = vector_length(space);
    for (int k = 0; k < n; ++k) {
      Vec v;
      for (int i = 0; i < n; ++i)
        v.push_back(random_element(field_, rng));
      for (const auto &u : cols_) {
        const AlgebraElement c = hermitian_product(u, v);
        for (int i = 0; i < n; ++i)
          v[static_cast<std::size_t>(i)] -= mul(u[static_cast<std::size_t>(i)], c);
      }
      double s = 0.0;
      for (const auto &a : v)
        s += norm_sq(a);
      for (auto &a : v)
        a *= 1.0 / std::sqrt(s);
      cols_.push_back(std::move(v));
    }
  }

  /// U a = sum_j col_j a_j.
  Vec apply(const Vec &a) const {
    Vec out(a.size(), AlgebraElement(field_));
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += mul(cols_[j][i], a[j]);
    return out;
  }

private:
  Field field_;
  std::vector<Vec> cols_;
};

} // namespace test
