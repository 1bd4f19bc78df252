#pragma once

#include <stdexcept>
#include <string>

namespace vdc {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A summation window with non-positive length.
class invalid_window_error : public error {
 public:
  using error::error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
 public:
  using error::error;
};

/// A lemma/theorem hypothesis is violated; the bound must not be weakened
/// silently, so this is a hard error.
class hypothesis_error : public error {
 public:
  using error::error;
};

/// Desk-scale resource cap exceeded (direct sums, phase precision).
class resource_error : public error {
 public:
  using error::error;
};

}  // namespace vdc
