#pragma once

#include <stdexcept>
#include <string>

namespace stolarsky {

// Precondition violations (bad radius, non-unit vector, mismatched spaces)
// are reported as std::domain_error.

/// Operation not available for the given space, e.g. uniform sampling of OP2.
class unsupported_operation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A numerical procedure (quadrature, continued fraction) failed to reach its
/// tolerance. The message carries the achieved error.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: space names, CSV point sets.
class parse_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace stolarsky
