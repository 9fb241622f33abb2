#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "typedmatrices/scalar.hpp"

namespace tmat {

enum class ParamType { dimension, integer, scalar, flag, vector };

std::string_view to_string(ParamType type) noexcept;

/// Vector-valued family parameter (Cauchy generators, companion
/// coefficients). The two implicit forms carry no element storage: `range`
/// is (1, 2, ..., len) and `ones` is (1, ..., 1), with the length implied by
/// the matrix dimensions.
class Generator {
 public:
  enum class Form : std::uint8_t { range, ones, values };

  Generator() = default;
  explicit Generator(Form form) : form_(form) {}
  explicit Generator(std::vector<Scalar> values)
      : values_(std::make_shared<const std::vector<Scalar>>(std::move(values))),
        form_(Form::values) {}

  Form form() const noexcept { return form_; }

  /// One-based element access.
  Scalar at(std::size_t i) const {
    switch (form_) {
      case Form::range: return Scalar(static_cast<std::int64_t>(i));
      case Form::ones: return Scalar(1);
      case Form::values: break;
    }
    return (*values_)[i - 1];
  }

  template <typename T>
  T get(std::size_t i) const {
    switch (form_) {
      case Form::range: return T(static_cast<std::int64_t>(i));
      case Form::ones: return T(1);
      case Form::values: break;
    }
    return (*values_)[i - 1].get<T>();
  }

  /// Explicit length, or nullopt for the implicit forms.
  std::optional<std::size_t> explicit_size() const noexcept {
    if (form_ != Form::values) return std::nullopt;
    return values_->size();
  }

  const std::vector<Scalar>* values() const noexcept { return values_.get(); }

  /// Bytes of heap-owned element storage.
  std::size_t owned_bytes() const noexcept {
    return values_ ? values_->size() * sizeof(Scalar) : 0;
  }

  friend bool operator==(const Generator& a, const Generator& b) noexcept {
    if (a.form_ != b.form_) return false;
    if (a.form_ != Form::values) return true;
    return *a.values_ == *b.values_;
  }

 private:
  std::shared_ptr<const std::vector<Scalar>> values_;
  Form form_ = Form::range;
};

/// A validated family parameter value as stored in a handle.
using ParamValue = std::variant<std::monostate, std::int64_t, Scalar, bool, Generator>;

/// Positional store of a family's non-dimension parameters. Slot order is
/// the order of the non-dimension entries in the family's schema.
class ParamRecord {
 public:
  static constexpr std::size_t kMaxSlots = 4;

  ParamRecord() = default;
  ParamRecord(std::initializer_list<ParamValue> values);

  std::size_t size() const noexcept { return count_; }

  void push(ParamValue value);

  const ParamValue& operator[](std::size_t slot) const { return slots_.at(slot); }
  ParamValue& operator[](std::size_t slot) { return slots_.at(slot); }

  std::int64_t integer(std::size_t slot) const { return std::get<std::int64_t>(slots_.at(slot)); }
  const Scalar& scalar(std::size_t slot) const { return std::get<Scalar>(slots_.at(slot)); }
  bool flag(std::size_t slot) const { return std::get<bool>(slots_.at(slot)); }
  const Generator& generator(std::size_t slot) const { return std::get<Generator>(slots_.at(slot)); }

  /// Inline bytes of the stored values (excludes generator element storage).
  std::size_t inline_bytes() const noexcept;
  std::size_t owned_bytes() const noexcept;

  friend bool operator==(const ParamRecord&, const ParamRecord&) = default;

 private:
  std::array<ParamValue, kMaxSlots> slots_{};
  std::size_t count_ = 0;
};

/// Argument value supplied by a caller before validation.
using ArgValue = std::variant<std::int64_t, Scalar, bool, std::vector<Scalar>>;

/// Named constructor arguments, e.g. {{"n", 5}, {"alpha", Scalar(2)}}.
class ParamArgs {
 public:
  ParamArgs() = default;
  ParamArgs(std::initializer_list<std::pair<const std::string, ArgValue>> init) : values_(init) {}

  ParamArgs& set(const std::string& name, ArgValue value) {
    values_.insert_or_assign(name, std::move(value));
    return *this;
  }

  bool has(const std::string& name) const { return values_.count(name) != 0; }
  const ArgValue* find(const std::string& name) const;

  /// Typed getters; nullopt when absent, ArgumentError on a type mismatch.
  std::optional<std::int64_t> integer(const std::string& name) const;
  std::optional<Scalar> scalar(const std::string& name) const;
  std::optional<bool> flag(const std::string& name) const;
  std::optional<std::vector<Scalar>> vector(const std::string& name) const;

  const std::map<std::string, ArgValue>& values() const noexcept { return values_; }

 private:
  std::map<std::string, ArgValue> values_;
};

}  // namespace tmat
