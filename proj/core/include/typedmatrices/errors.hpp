#pragma once

#include <stdexcept>
#include <string>

namespace tmat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid constructor argument or parameter constraint violation.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Element access outside [1, rows] x [1, cols].
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit rational arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Matrix is singular (exactly, or to working precision in floating point).
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Operation is not available for this matrix (e.g. eigenvalues of a
/// nonsymmetric matrix without a closed-form spectrum).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Unknown family, group, or property name; duplicate registration.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Jacobi iteration did not converge within its sweep budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tmat
