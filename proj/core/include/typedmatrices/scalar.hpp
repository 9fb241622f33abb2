#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "typedmatrices/rational.hpp"

namespace tmat {

enum class ScalarKind { float64, rational64 };

std::string_view to_string(ScalarKind kind) noexcept;
std::optional<ScalarKind> parse_scalar_kind(std::string_view text) noexcept;

/// Matrix entry value: either a binary64 float or a checked 64-bit rational.
class Scalar {
 public:
  Scalar() = default;
  Scalar(double value) : value_(value) {}                 // NOLINT(implicit)
  Scalar(Rational value) : value_(value) {}               // NOLINT(implicit)
  Scalar(std::int64_t value) : value_(Rational(value)) {}  // NOLINT(implicit)
  Scalar(int value) : value_(Rational(value)) {}          // NOLINT(implicit)

  ScalarKind kind() const noexcept {
    return std::holds_alternative<double>(value_) ? ScalarKind::float64 : ScalarKind::rational64;
  }
  bool is_rational() const noexcept { return kind() == ScalarKind::rational64; }

  double to_double() const noexcept;

  /// Exact value; a float is accepted only when exactly representable.
  /// Throws ArgumentError otherwise.
  Rational to_rational() const;
  std::optional<Rational> try_rational() const noexcept;

  /// Converts to the requested kind (exactness rules as in to_rational).
  Scalar as(ScalarKind kind) const;

  template <typename T>
  T get() const;

  /// Rationals print as "p/q" (or "p"); floats print the shortest decimal
  /// that round-trips.
  std::string to_string() const;

  /// Parses "p/q", integers, and decimal literals. Exact literals become
  /// rationals; anything else becomes a float. Throws ArgumentError on
  /// text that is not a number.
  static Scalar parse(std::string_view text);

  /// Exact equality within a kind; mixed kinds compare as doubles.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs) noexcept;

 private:
  std::variant<double, Rational> value_;
};

template <>
inline double Scalar::get<double>() const {
  return to_double();
}

template <>
inline Rational Scalar::get<Rational>() const {
  return to_rational();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double value);

}  // namespace tmat
