#pragma once

// Reference computations used by the tests. Each oracle is deliberately
// naive and independent of the library's algorithms: it reads entries only
// through `element`, and never calls the linalg routines it is checking.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include <typedmatrices/typedmatrices.hpp>

namespace oracle {

using tmat::MatrixHandle;
using tmat::Rational;

/// Row-major copy of the entries, exactly.
inline std::vector<std::vector<Rational>> exact_entries(const MatrixHandle& h) {
  std::vector<std::vector<Rational>> a(h.rows(), std::vector<Rational>(h.cols()));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) a[i][j] = h.element(i + 1, j + 1).to_rational();
  return a;
}

inline std::vector<std::vector<double>> float_entries(const MatrixHandle& h) {
  std::vector<std::vector<double>> a(h.rows(), std::vector<double>(h.cols()));
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) a[i][j] = h.element(i + 1, j + 1).to_double();
  return a;
}

/// [DERIVED] Laplace expansion along the first row. O(n!), for n <= 7.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return T(1);
  if (n == 1) return a[0][0];
  T det(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    const T term = a[0][c] * cofactor_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// [DERIVED] Exact product of two square matrices read through `element`.
inline std::vector<std::vector<Rational>> exact_product(const std::vector<std::vector<Rational>>& a,
                                                        const std::vector<std::vector<Rational>>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline bool is_identity(const std::vector<std::vector<Rational>>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j)
      if (c[i][j] != Rational(i == j ? 1 : 0)) return false;
  return true;
}

/// [DERIVED] Brute-force structural scans over every entry.
inline bool scan_symmetric(const MatrixHandle& h) {
  if (h.rows() != h.cols()) return false;
  for (std::size_t i = 1; i <= h.rows(); ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (!(h.element(i, j) == h.element(j, i))) return false;
  return true;
}

inline bool scan_diagonal(const MatrixHandle& h) {
  for (std::size_t i = 1; i <= h.rows(); ++i)
    for (std::size_t j = 1; j <= h.cols(); ++j)
      if (i != j && h.element(i, j).to_double() != 0.0) return false;
  return true;
}

/// [DERIVED] Positive definiteness by Sylvester's criterion on exact
/// leading principal minors (symmetric input only).
inline bool sylvester_posdef(const MatrixHandle& h) {
  if (!scan_symmetric(h)) return false;
  const auto a = exact_entries(h);
  for (std::size_t k = 1; k <= a.size(); ++k) {
    std::vector<std::vector<Rational>> lead(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead[i][j] = a[i][j];
    if (cofactor_det(lead).sign() <= 0) return false;
  }
  return true;
}

/// [DERIVED] Textbook cyclic Jacobi rotation sweeps on a dense symmetric
/// matrix; eigenvalues returned in ascending order. Written from the
/// classical 2x2 rotation formulas, independent of the library's solver.
inline std::vector<double> jacobi(std::vector<std::vector<double>> a, int sweeps = 200) {
  const std::size_t n = a.size();
  for (int s = 0; s < sweeps; ++s) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {  // columns p, q
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - sn * akq;
          a[k][q] = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // rows p, q
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - sn * aqk;
          a[q][k] = sn * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t k = 0; k < n; ++k) ev[k] = a[k][k];
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// [DERIVED] Nonzero count of the 2-D Laplacian I⊗T + T⊗I on a k x k
/// grid: k^2 diagonal entries plus two per interior grid edge, of which
/// there are 2k(k-1).
inline std::size_t poisson_nnz(std::size_t k) { return k * k + 4 * k * (k - 1); }

}  // namespace oracle
