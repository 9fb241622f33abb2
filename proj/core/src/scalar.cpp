#include "typedmatrices/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "typedmatrices/errors.hpp"

namespace tmat {

std::string_view to_string(ScalarKind kind) noexcept {
  return kind == ScalarKind::float64 ? "float64" : "rational64";
}

std::optional<ScalarKind> parse_scalar_kind(std::string_view text) noexcept {
  if (text == "f64" || text == "float64" || text == "float") return ScalarKind::float64;
  if (text == "rat" || text == "rational64" || text == "rational") return ScalarKind::rational64;
  return std::nullopt;
}

double Scalar::to_double() const noexcept {
  if (const auto* d = std::get_if<double>(&value_)) return *d;
  return std::get<Rational>(value_).to_double();
}

std::optional<Rational> Scalar::try_rational() const noexcept {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  return Rational::from_double(std::get<double>(value_));
}

Rational Scalar::to_rational() const {
  if (auto r = try_rational()) return *r;
  throw ArgumentError("value " + to_string() + " has no exact 64-bit rational representation");
}

Scalar Scalar::as(ScalarKind kind) const {
  if (kind == ScalarKind::float64) return Scalar(to_double());
  return Scalar(to_rational());
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->to_string();
  return format_double(std::get<double>(value_));
}

Scalar Scalar::parse(std::string_view text) {
  if (auto r = Rational::parse(text)) return Scalar(*r);
  std::string owned(text);
  char* end = nullptr;
  double v = std::strtod(owned.c_str(), &end);
  if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(v)) {
    throw ArgumentError("not a number: '" + owned + "'");
  }
  return Scalar(v);
}

bool operator==(const Scalar& lhs, const Scalar& rhs) noexcept {
  if (lhs.kind() == rhs.kind()) return lhs.value_ == rhs.value_;
  return lhs.to_double() == rhs.to_double();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace tmat
