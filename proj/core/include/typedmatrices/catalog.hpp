#pragma once

// Shorthand constructors for the builtin families, resolved against the
// global registry. Omitted scalar kinds fall back to each family's default.

#include <optional>
#include <vector>

#include "typedmatrices/family.hpp"

namespace tmat {

using OptKind = std::optional<ScalarKind>;

MatrixHandle hilbert(std::size_t n, OptKind kind = {});
MatrixHandle hilbert(std::size_t m, std::size_t n, OptKind kind = {});
MatrixHandle inversehilbert(std::size_t n, OptKind kind = {});
MatrixHandle cauchy(std::size_t n, OptKind kind = {});
MatrixHandle cauchy(std::vector<Scalar> x, std::vector<Scalar> y, OptKind kind = {});
MatrixHandle minij(std::size_t n, OptKind kind = {});
MatrixHandle clement(std::size_t n, bool symmetric = false, OptKind kind = {});
MatrixHandle lehmer(std::size_t n, OptKind kind = {});
MatrixHandle pei(std::size_t n, Scalar alpha = 1, OptKind kind = {});
MatrixHandle pascal(std::size_t n, OptKind kind = {});
MatrixHandle kms(std::size_t n, Scalar rho = Rational(1, 2), OptKind kind = {});
MatrixHandle moler(std::size_t n, Scalar alpha = -1, OptKind kind = {});
MatrixHandle forsythe(std::size_t n, Scalar alpha = Rational(1, 10'000'000'000), Scalar lambda = 0,
                      OptKind kind = {});
MatrixHandle jordbloc(std::size_t n, Scalar lambda = 1, OptKind kind = {});
MatrixHandle frank(std::size_t n, OptKind kind = {});
MatrixHandle lotkin(std::size_t n, OptKind kind = {});
MatrixHandle grcar(std::size_t n, std::int64_t k = 3, OptKind kind = {});
MatrixHandle wilkinson(std::size_t n, OptKind kind = {});
/// n^2 x n^2.
MatrixHandle poisson(std::size_t n, OptKind kind = {});
MatrixHandle companion(std::size_t n, OptKind kind = {});
MatrixHandle companion(std::vector<Scalar> coefficients, OptKind kind = {});
MatrixHandle triw(std::size_t n, Scalar alpha = -1, std::optional<std::int64_t> k = {}, OptKind kind = {});

}  // namespace tmat
