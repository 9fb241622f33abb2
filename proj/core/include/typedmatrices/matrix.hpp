#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "typedmatrices/dense.hpp"
#include "typedmatrices/params.hpp"
#include "typedmatrices/scalar.hpp"

namespace tmat {

struct Family;

/// A constructed test matrix: family, validated parameters, scalar kind.
///
/// Handles never store entries. `element` evaluates the family formula on
/// demand, so the handle's size does not depend on its dimensions. Handles
/// are immutable and safe to share across threads; the family they refer to
/// is owned by its registry, which must outlive them.
class MatrixHandle {
 public:
  MatrixHandle(const Family& family, std::size_t rows, std::size_t cols, ScalarKind kind,
               ParamRecord params);

  const Family& family() const noexcept { return *family_; }
  const std::string& family_id() const noexcept;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::pair<std::size_t, std::size_t> dims() const noexcept { return {rows_, cols_}; }
  bool square() const noexcept { return rows_ == cols_; }
  ScalarKind kind() const noexcept { return kind_; }
  const ParamRecord& params() const noexcept { return params_; }

  /// One-based entry (i, j). Throws BoundsError outside the matrix and
  /// OverflowError (naming the entry) if rational evaluation overflows.
  Scalar element(std::size_t i, std::size_t j) const;

  /// Entry without the bounds check, for loops already within range.
  Scalar element_unchecked(std::size_t i, std::size_t j) const;

  template <typename T>
  T get(std::size_t i, std::size_t j) const {
    return element(i, j).template get<T>();
  }

  DenseMatrix materialize() const;

  /// Same family and parameters in another scalar kind. Throws
  /// ArgumentError when the parameters are not exact in that kind.
  MatrixHandle with_kind(ScalarKind kind) const;

  /// Human-readable label such as "hilbert(3x3, rational64)".
  std::string label() const;

  friend bool operator==(const MatrixHandle& a, const MatrixHandle& b) noexcept {
    return a.family_id() == b.family_id() && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.kind_ == b.kind_ && a.params_ == b.params_;
  }

 private:
  const Family* family_;
  std::size_t rows_;
  std::size_t cols_;
  ScalarKind kind_;
  ParamRecord params_;
};

inline std::pair<std::size_t, std::size_t> dims(const MatrixHandle& h) noexcept { return h.dims(); }

inline Scalar element(const MatrixHandle& h, std::size_t i, std::size_t j) { return h.element(i, j); }

inline DenseMatrix materialize(const MatrixHandle& h) { return h.materialize(); }

/// Bytes of the handle's parameter record: the two dimensions plus the
/// inline parameter values. Generator element storage is excluded (see
/// `handle_owned_bytes`).
std::size_t handle_footprint(const MatrixHandle& h) noexcept;

/// Heap bytes owned by vector-valued parameters.
std::size_t handle_owned_bytes(const MatrixHandle& h) noexcept;

/// Entry bytes of the dense copy of `h` stored as `kind`.
std::size_t dense_footprint(const MatrixHandle& h, ScalarKind kind) noexcept;

}  // namespace tmat
