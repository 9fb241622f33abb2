#include "typedmatrices/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>

#include "typedmatrices/errors.hpp"

namespace tmat {

namespace {

__extension__ using wide = __int128;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();
// Keeps parsing intermediates far from the 128-bit limit.
constexpr wide kParseLimit = wide{1} << 100;

wide gcd_wide(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) { return v >= kMin && v <= kMax; }

}  // namespace

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) {
    throw OverflowError("64-bit rational overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

double Rational::to_double() const noexcept {
  // Both operands are exact in long double's 64-bit mantissa, so the
  // quotient rounds once there and once more to double.
  if (den_ == 1) return static_cast<double>(num_);
  double n = static_cast<double>(num_);
  double d = static_cast<double>(den_);
  if (static_cast<std::int64_t>(n) == num_ && static_cast<std::int64_t>(d) == den_ &&
      std::abs(n) < 0x1p53 && d < 0x1p53) {
    return n / d;
  }
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::optional<Rational> Rational::from_double(double value) noexcept {
  if (!std::isfinite(value)) return std::nullopt;
  if (value == 0.0) return Rational{};
  int exp = 0;
  double frac = std::frexp(value, &exp);  // value = frac * 2^exp, |frac| in [0.5, 1)
  auto mant = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exp -= 53;
  while (exp < 0 && (mant % 2) == 0) {
    mant /= 2;
    ++exp;
  }
  if (exp >= 0) {
    if (exp > 62) return std::nullopt;
    wide n = wide{mant} << exp;
    if (!fits(n)) return std::nullopt;
    return Rational(static_cast<std::int64_t>(n));
  }
  if (-exp > 62) return std::nullopt;
  Rational r;
  r.num_ = mant;
  r.den_ = std::int64_t{1} << (-exp);
  return r;
}

std::optional<Rational> Rational::parse(std::string_view text) noexcept {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = trim(text.substr(0, slash));
    auto q = trim(text.substr(slash + 1));
    std::int64_t num = 0;
    std::int64_t den = 0;
    auto r1 = std::from_chars(p.data(), p.data() + p.size(), num);
    auto r2 = std::from_chars(q.data(), q.data() + q.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != p.data() + p.size()) return std::nullopt;
    if (r2.ec != std::errc{} || r2.ptr != q.data() + q.size()) return std::nullopt;
    if (den == 0) return std::nullopt;
    try {
      return Rational(num, den);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  wide mantissa = 0;
  int scale = 0;  // value = mantissa * 10^scale
  bool any_digit = false;
  bool seen_point = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) break;
    any_digit = true;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > kParseLimit) return std::nullopt;
    if (seen_point) --scale;
  }
  if (!any_digit) return std::nullopt;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return std::nullopt;
    ++pos;
    int exponent = 0;
    auto rest = text.substr(pos);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto res = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (res.ec != std::errc{} || res.ptr != rest.data() + rest.size()) return std::nullopt;
    scale += exponent;
  }
  if (scale > 30 || scale < -30) {
    if (mantissa == 0) return Rational{};
    return std::nullopt;
  }
  wide num = negative ? -mantissa : mantissa;
  wide den = 1;
  for (; scale > 0; --scale) {
    num *= 10;
    if (num > kParseLimit || num < -kParseLimit) return std::nullopt;
  }
  for (; scale < 0; ++scale) den *= 10;
  try {
    return from_wide(num, den);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  return from_wide(-wide{num_}, den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  *this = from_wide(wide{num_} * rhs.den_ + wide{rhs.num_} * den_, wide{den_} * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = from_wide(wide{num_} * rhs.den_ - wide{rhs.num_} * den_, wide{den_} * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(wide{num_} * rhs.num_, wide{den_} * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw ArgumentError("rational division by zero");
  *this = from_wide(wide{num_} * rhs.den_, wide{den_} * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
  return wide{lhs.num_} * rhs.den_ <=> wide{rhs.num_} * lhs.den_;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace tmat
