#pragma once

// Linear algebra over matrix handles. Each operation prefers the family's
// registered closed-form routine and otherwise falls back to a generic dense
// algorithm on the materialized matrix.

#include <cstddef>
#include <span>
#include <vector>

#include "typedmatrices/dense.hpp"
#include "typedmatrices/dense_linalg.hpp"
#include "typedmatrices/family.hpp"
#include "typedmatrices/matrix.hpp"

namespace tmat {

/// Closed form when available, else LU with partial pivoting (exact for
/// rational64). Throws ArgumentError on non-square input and OverflowError,
/// with advice to switch to float64, if exact elimination overflows.
Scalar determinant(const MatrixHandle& h);

/// Closed form when available (a lazy handle for Hilbert <-> InverseHilbert,
/// dense otherwise), else the LU inverse. Throws SingularError.
InverseResult inverse(const MatrixHandle& h);

/// Ascending eigenvalues. Closed form when available; otherwise cyclic Jacobi
/// for symmetric matrices, and UnsupportedError for the rest.
Eigenvalues eigvals(const MatrixHandle& h);

/// Square root of the sum of squared entries, streamed without
/// materialization.
double frobenius_norm(const MatrixHandle& h);

/// Structural predicates. The family's closed-form answer is used when it
/// covers the current parameters; otherwise an entry scan (symmetric,
/// diagonal) or a Cholesky attempt (posdef). These never throw.
bool is_symmetric(const MatrixHandle& h) noexcept;
bool is_posdef(const MatrixHandle& h) noexcept;
bool is_diagonal(const MatrixHandle& h) noexcept;

/// LU solve, exact in rational64. `rhs` values are converted to the handle's
/// kind. Throws SingularError.
std::vector<Scalar> solve(const MatrixHandle& h, std::span<const Scalar> rhs);

/// Rank by exact elimination (rational64) or thresholded elimination with
/// threshold 1e-10 * ||A||_F (float64). Falls back to float64 if exact
/// elimination overflows.
std::size_t rank(const MatrixHandle& h);

inline constexpr std::size_t kDefaultCondBound = 64;

/// ||A||_1 * ||A^-1||_1 by explicit inversion; +infinity when singular.
/// Throws ArgumentError for non-square input or n above `max_n`.
double cond1(const MatrixHandle& h, std::size_t max_n = kDefaultCondBound);

/// The generic fallbacks, bypassing any closed-form routine. Used to check
/// the closed forms against an independent computation.
namespace generic {

Scalar determinant(const DenseMatrix& a);
DenseMatrix inverse(const DenseMatrix& a);
/// Jacobi eigenvalues of a symmetric matrix (UnsupportedError otherwise).
Eigenvalues eigvals(const DenseMatrix& a);
bool is_symmetric(const DenseMatrix& a) noexcept;
bool is_posdef(const DenseMatrix& a) noexcept;
bool is_diagonal(const DenseMatrix& a) noexcept;
std::size_t rank(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a) noexcept;

/// Entry-scan predicates over a handle (no closed form, no materialization).
bool scan_symmetric(const MatrixHandle& h) noexcept;
bool scan_diagonal(const MatrixHandle& h) noexcept;

}  // namespace generic

}  // namespace tmat
