#pragma once

#include <stdexcept>
#include <string>

namespace hck {

/// Raised for malformed input: bad datum specs, non-closed bound matrices,
/// unparsable rationals, inconsistent catalogs.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal exactness assumption is violated (e.g. a
/// divided-difference quotient that does not divide). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hck
