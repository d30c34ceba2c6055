#pragma once

#include <stdexcept>
#include <string>

namespace zpe {

/// Input outside the mathematical domain of an operation (β ≤ 0, q < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A request that would exceed a hard resource cap (e.g. spectrum truncation).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite intermediate values or a numerical procedure that failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A report could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw DomainError(std::string(name) + " must be > 0, got " + std::to_string(value));
  }
}

inline void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0)) {
    throw DomainError(std::string(name) + " must be >= 0, got " + std::to_string(value));
  }
}

}  // namespace detail
}  // namespace zpe
