#ifndef LIEVA_ERRORS_HPP
#define LIEVA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lieva {

/// Bad user input: malformed words, files, flags, out-of-range arguments.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A computation would exceed a configured size cap.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was asked to do something its coefficient domain cannot
/// support (e.g. Gaussian elimination over a composite modulus).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lieva

#endif
