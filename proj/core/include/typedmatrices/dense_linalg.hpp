#pragma once

// Generic dense kernels, templated over double, Rational and
// std::complex<double>. These are the fallbacks used when a family has no
// closed-form routine, and the independent route the closed forms are
// checked against.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "typedmatrices/dense.hpp"
#include "typedmatrices/errors.hpp"
#include "typedmatrices/rational.hpp"

namespace tmat::dense {

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

/// |x| in a type that orders: T itself for real kinds, double for complex.
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
inline Rational magnitude(const Rational& x) { return abs(x); }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }

template <typename T>
double frobenius(const Dense<T>& a) {
  double s = 0;
  for (const auto& v : a.data()) {
    const double m = to_double(magnitude(v));
    s += m * m;
  }
  return std::sqrt(s);
}

/// Max column absolute sum.
template <typename T>
double norm1(const Dense<T>& a) {
  double best = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s = 0;
    for (std::size_t r = 0; r < a.rows(); ++r) s += to_double(magnitude(a(r, c)));
    best = std::max(best, s);
  }
  return best;
}

/// Packed LU factors with row permutation: P A = L U, unit-diagonal L below
/// the diagonal, U on and above it.
template <typename T>
struct LuFactors {
  Dense<T> lu;
  std::vector<std::size_t> perm;  // perm[k] = original row now at row k
  int sign = 1;
  bool singular = false;
};

/// Partial pivoting by largest magnitude, ties to the lowest row. A pivot
/// with magnitude <= `threshold` (exact zero for Rational) marks the matrix
/// singular and its column is skipped.
template <typename T>
LuFactors<T> lu_factor(Dense<T> a, double threshold = 0.0) {
  if (!a.square()) throw ArgumentError("LU factorization requires a square matrix");
  const std::size_t n = a.rows();
  LuFactors<T> f{std::move(a), std::vector<std::size_t>(n), 1, false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  Dense<T>& m = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    auto best = magnitude(m(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      auto mag = magnitude(m(r, k));
      if (mag > best) {
        best = mag;
        p = r;
      }
    }
    bool zero;
    if constexpr (is_exact_v<T>) {
      zero = best.is_zero();
    } else {
      zero = best <= threshold;
    }
    if (zero) {
      f.singular = true;
      continue;
    }
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const T pivot = m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == T{}) continue;
      T factor = m(r, k) / pivot;
      m(r, k) = factor;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (m(k, c) == T{}) continue;
        m(r, c) -= factor * m(k, c);
      }
    }
  }
  return f;
}

template <typename T>
T determinant(const Dense<T>& a) {
  if (!a.square()) throw ArgumentError("determinant requires a square matrix");
  auto f = lu_factor(a);
  if (f.singular) return T(0);
  T det(f.sign);
  for (std::size_t k = 0; k < a.rows(); ++k) det *= f.lu(k, k);
  return det;
}

/// Singularity threshold for floating pivots: 1e-13 * ||A||_F.
template <typename T>
double pivot_threshold(const Dense<T>& a) {
  if constexpr (is_exact_v<T>) {
    return 0.0;
  } else {
    return 1e-13 * frobenius(a);
  }
}

template <typename T>
std::vector<T> lu_solve(const LuFactors<T>& f, std::span<const T> rhs) {
  const std::size_t n = f.lu.rows();
  std::vector<T> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = rhs[f.perm[k]];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (f.lu(r, c) != T{}) x[r] -= f.lu(r, c) * x[c];
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c)
      if (f.lu(r, c) != T{}) x[r] -= f.lu(r, c) * x[c];
    x[r] /= f.lu(r, r);
  }
  return x;
}

template <typename T>
std::vector<T> solve(const Dense<T>& a, std::span<const T> rhs) {
  if (!a.square()) throw ArgumentError("solve requires a square matrix");
  if (rhs.size() != a.rows()) throw ArgumentError("right-hand side length does not match the matrix");
  auto f = lu_factor(a, pivot_threshold(a));
  if (f.singular) throw SingularError("matrix is singular");
  return lu_solve(f, rhs);
}

template <typename T>
Dense<T> inverse(const Dense<T>& a) {
  if (!a.square()) throw ArgumentError("inverse requires a square matrix");
  auto f = lu_factor(a, pivot_threshold(a));
  if (f.singular) throw SingularError("matrix is singular");
  const std::size_t n = a.rows();
  Dense<T> inv(n, n);
  std::vector<T> e(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(e.begin(), e.end(), T(0));
    e[c] = T(1);
    auto x = lu_solve<T>(f, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  return inv;
}

/// Row-echelon rank. Float pivots at or below `threshold` count as zero.
template <typename T>
std::size_t rank(Dense<T> a, double threshold = 0.0) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    auto best = magnitude(a(rank, c));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      auto mag = magnitude(a(r, c));
      if (mag > best) {
        best = mag;
        p = r;
      }
    }
    bool zero;
    if constexpr (is_exact_v<T>) {
      zero = best.is_zero();
    } else {
      zero = best <= threshold;
    }
    if (zero) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(rank, k), a(p, k));
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (a(r, c) == T{}) continue;
      T factor = a(r, c) / a(rank, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= factor * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

template <typename T>
bool is_symmetric(const Dense<T>& a) {
  if (!a.square()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = c + 1; r < a.rows(); ++r)
      if (!(a(r, c) == a(c, r))) return false;
  return true;
}

template <typename T>
bool is_diagonal(const Dense<T>& a) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != c && !(a(r, c) == T{})) return false;
  return true;
}

/// Symmetric positive definiteness by attempting a Cholesky factorization
/// (exact symmetric elimination for Rational).
template <typename T>
bool is_posdef(Dense<T> a) {
  if (!is_symmetric(a)) return false;
  const std::size_t n = a.rows();
  if constexpr (is_exact_v<T>) {
    for (std::size_t k = 0; k < n; ++k) {
      const T pivot = a(k, k);
      if (pivot.sign() <= 0) return false;
      for (std::size_t r = k + 1; r < n; ++r) {
        if (a(r, k).is_zero()) continue;
        T factor = a(r, k) / pivot;
        for (std::size_t c = k + 1; c <= r; ++c) a(r, c) -= factor * a(c, k);
      }
    }
    return true;
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      double d = a(j, j);
      for (std::size_t k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
      if (!(d > 0.0)) return false;
      const double l = std::sqrt(d);
      a(j, j) = l;
      for (std::size_t i = j + 1; i < n; ++i) {
        double s = a(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
        a(i, j) = s / l;
      }
    }
    return true;
  }
}

struct JacobiOptions {
  double relative_tolerance = 1e-14;  // stop once off(A) <= tol * ||A||_F
  std::size_t max_sweeps = 100;
};

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method, ascending.
/// Throws ConvergenceError if the off-diagonal mass does not fall below the
/// tolerance within the sweep budget.
std::vector<double> jacobi_eigenvalues(Dense<double> a, JacobiOptions options = {});

/// Product a * b with conversion of both operands into T.
template <typename T>
Dense<T> multiply(const Dense<T>& a, const Dense<T>& b) {
  return a * b;
}

}  // namespace tmat::dense
