#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tmat {

/// Exact rational number with 64-bit signed numerator and denominator.
///
/// Values are always kept reduced with a positive denominator. Every
/// operation is computed with 128-bit intermediates, reduced, and checked:
/// a result that does not fit back into 64 bits raises OverflowError
/// instead of wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  constexpr bool is_integer() const noexcept { return den_ == 1; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  double to_double() const noexcept;

  /// Exact conversion of a finite double; nullopt when the value needs more
  /// than 64 bits in numerator or denominator.
  static std::optional<Rational> from_double(double value) noexcept;

  /// Parses "p", "p/q", or a decimal literal such as "0.25" or "1e-10".
  /// Returns nullopt if the text is not exactly representable.
  static std::optional<Rational> parse(std::string_view text) noexcept;

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept;

 private:
  __extension__ using wide = __int128;
  static Rational from_wide(wide num, wide den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace tmat
