#pragma once

#include <stdexcept>
#include <string>

namespace logcoef {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (zero log argument,
/// invalid class parameters, non-normalized series, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A result did not survive re-evaluation at higher precision.
class PrecisionError : public Error {
public:
  PrecisionError(const std::string& what, long required_bits)
      : Error(what), required_bits_(required_bits) {}
  long required_bits() const noexcept { return required_bits_; }

private:
  long required_bits_;
};

/// A parameter point fell outside the set of regions a bound formula
/// was stated for. Carries enough context to reproduce.
class CoverageError : public Error {
public:
  using Error::Error;
};

}  // namespace logcoef
