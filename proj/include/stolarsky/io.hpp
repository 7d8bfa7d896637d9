#pragma once

#include "stolarsky/invariance.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace stolarsky {

// Point set CSV format
// --------------------
//   space,<name>
//   <coordinates of point 1>
//   <coordinates of point 2>
//   ...
// Sphere points are written as their d + 1 Cartesian coordinates. A point of
// FP^n is written as the m = (n+1)(d+2)/2 real coordinates of the upper
// triangle of its projector: first the n + 1 diagonal entries (real), then
// for each i < j in row-major order the d0 coefficients of entry (i, j).
// Numbers use 17 significant digits, so reading back is exact. Lines
// starting with '#' after the header are comments.

/// The coordinates described above.
std::vector<double> point_coordinates(const Point &p);

/// Inverse of point_coordinates. Throws std::domain_error if the count is
/// wrong or the result is not a valid point.
Point point_from_coordinates(const SpaceId &space, std::span<const double> coords);

/// Text that reads back as the same double ("%.17g").
std::string format_double(double x);

/// A non-empty comment is written as a '#' line after the header.
void write_point_set_csv(std::ostream &out, const PointSet &d,
                         const std::string &comment = {});
std::string point_set_to_csv(const PointSet &d);

/// Throws parse_error naming the line for malformed input, including
/// coordinates that do not describe a valid point.
PointSet read_point_set_csv(std::istream &in);
PointSet point_set_from_csv(const std::string &text);

} // namespace stolarsky
