#pragma once

// Shared helpers for the builtin family definitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "typedmatrices/errors.hpp"
#include "typedmatrices/family.hpp"

namespace tmat::families {

/// Reads a dimension argument, rejecting negatives with "<value> < 0".
inline std::optional<std::size_t> read_dim(const ParamArgs& args, const std::string& name) {
  auto v = args.integer(name);
  if (!v) return std::nullopt;
  if (*v < 0) throw ArgumentError(std::to_string(*v) + " < 0");
  return static_cast<std::size_t>(*v);
}

inline std::size_t require_dim(const ParamArgs& args, const std::string& name, const std::string& family) {
  if (auto n = read_dim(args, name)) return *n;
  throw ArgumentError(family + ": missing required parameter '" + name + "'");
}

inline ParamSpec dim_spec(std::string name = "n", std::string default_text = {}) {
  return {std::move(name), ParamType::dimension, std::move(default_text), ">= 0"};
}

/// Square families: {"n": size}.
inline ParamArgs sized(std::size_t n) { return ParamArgs{{"n", static_cast<std::int64_t>(n)}}; }

/// Runs `fn(T{})` with T = Rational or double according to `kind`, wrapping
/// the value as a Scalar.
template <typename F>
Scalar with_kind_scalar(ScalarKind kind, F&& fn) {
  if (kind == ScalarKind::rational64) return Scalar(fn(Rational{}));
  return Scalar(fn(double{}));
}

template <typename F>
DenseMatrix with_kind_dense(ScalarKind kind, F&& fn) {
  if (kind == ScalarKind::rational64) return DenseMatrix(fn(Rational{}));
  return DenseMatrix(fn(double{}));
}

/// Binomial coefficient C(n, k) in T (exact and checked for Rational).
template <typename T>
T binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return T(0);
  k = std::min(k, n - k);
  if constexpr (std::is_same_v<T, double>) {
    double r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(r);
  } else {
    // C(n-k+i, i) is an integer at every step, so the division is exact.
    __extension__ __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
      if (r > std::numeric_limits<std::int64_t>::max()) throw OverflowError("binomial overflow");
    }
    return T(static_cast<std::int64_t>(r));
  }
}

template <typename T>
T power(T base, std::size_t e) {
  T r(1);
  for (std::size_t k = 0; k < e; ++k) r *= base;
  return r;
}

inline Eigenvalues sorted(Eigenvalues values) {
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return values;
}

inline void require_square(const MatrixHandle& h, const char* what) {
  if (!h.square()) throw ArgumentError(std::string(what) + " requires a square matrix, got " + h.label());
}

// Factories, one per builtin family, in catalog order.
Family make_hilbert();
Family make_inversehilbert();
Family make_cauchy();
Family make_minij();
Family make_clement();
Family make_lehmer();
Family make_pei();
Family make_pascal();
Family make_kms();
Family make_moler();
Family make_forsythe();
Family make_jordbloc();
Family make_frank();
Family make_lotkin();
Family make_grcar();
Family make_wilkinson();
Family make_poisson();
Family make_companion();
Family make_triw();

}  // namespace tmat::families
