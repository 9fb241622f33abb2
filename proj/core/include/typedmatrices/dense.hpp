#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "typedmatrices/errors.hpp"
#include "typedmatrices/scalar.hpp"

namespace tmat {

/// Column-major dense storage.
///
/// `operator()(r, c)` takes zero-based offsets and is unchecked; `at(i, j)`
/// takes the library's one-based indices and is bounds-checked.
template <typename T>
class Dense {
 public:
  using value_type = T;

  Dense() = default;
  Dense(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Dense identity(std::size_t n) {
    Dense d(n, n);
    for (std::size_t k = 0; k < n; ++k) d(k, k) = T{1};
    return d;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) noexcept { return data_[c * rows_ + r]; }
  const T& operator()(std::size_t r, std::size_t c) const noexcept { return data_[c * rows_ + r]; }

  const T& at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw BoundsError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    return (*this)(i - 1, j - 1);
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  Dense transposed() const {
    Dense t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Dense&, const Dense&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Dense<T> operator*(const Dense<T>& a, const Dense<T>& b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix product dimension mismatch");
  Dense<T> c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& bkj = b(k, j);
      if (bkj == T{}) continue;
      for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
    }
  return c;
}

/// Materialized matrix of either scalar kind.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Dense<double> d) : storage_(std::move(d)) {}    // NOLINT(implicit)
  DenseMatrix(Dense<Rational> d) : storage_(std::move(d)) {}  // NOLINT(implicit)

  ScalarKind kind() const noexcept {
    return std::holds_alternative<Dense<double>>(storage_) ? ScalarKind::float64
                                                           : ScalarKind::rational64;
  }

  std::size_t rows() const noexcept {
    return std::visit([](const auto& d) { return d.rows(); }, storage_);
  }
  std::size_t cols() const noexcept {
    return std::visit([](const auto& d) { return d.cols(); }, storage_);
  }

  /// One-based, bounds-checked.
  Scalar at(std::size_t i, std::size_t j) const {
    return std::visit([&](const auto& d) { return Scalar(d.at(i, j)); }, storage_);
  }

  /// Bytes occupied by the entry array.
  std::size_t data_bytes() const noexcept {
    return std::visit(
        [](const auto& d) { return d.data().size() * sizeof(typename std::decay_t<decltype(d)>::value_type); },
        storage_);
  }

  template <typename T>
  const Dense<T>& get() const {
    return std::get<Dense<T>>(storage_);
  }
  template <typename T>
  const Dense<T>* get_if() const noexcept {
    return std::get_if<Dense<T>>(&storage_);
  }

  /// Float copy (exact rationals rounded once per entry).
  Dense<double> to_float() const;

  template <typename Visitor>
  decltype(auto) visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), storage_);
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::variant<Dense<double>, Dense<Rational>> storage_;
};

}  // namespace tmat
