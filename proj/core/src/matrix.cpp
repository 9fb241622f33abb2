#include "typedmatrices/matrix.hpp"

#include "typedmatrices/errors.hpp"
#include "typedmatrices/family.hpp"

namespace tmat {

std::string_view to_string(ParamType type) noexcept {
  switch (type) {
    case ParamType::dimension: return "dimension";
    case ParamType::integer: return "integer";
    case ParamType::scalar: return "scalar";
    case ParamType::flag: return "flag";
    case ParamType::vector: return "vector";
  }
  return "?";
}

ParamRecord::ParamRecord(std::initializer_list<ParamValue> values) {
  for (const auto& v : values) push(v);
}

void ParamRecord::push(ParamValue value) {
  if (count_ == kMaxSlots) throw ArgumentError("too many family parameters");
  slots_[count_++] = std::move(value);
}

std::size_t ParamRecord::inline_bytes() const noexcept {
  std::size_t bytes = 0;
  for (std::size_t k = 0; k < count_; ++k) {
    bytes += std::visit(
        [](const auto& v) -> std::size_t {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, std::monostate>) {
            return 0;
          } else {
            return sizeof(V);
          }
        },
        slots_[k]);
  }
  return bytes;
}

std::size_t ParamRecord::owned_bytes() const noexcept {
  std::size_t bytes = 0;
  for (std::size_t k = 0; k < count_; ++k) {
    if (const auto* g = std::get_if<Generator>(&slots_[k])) bytes += g->owned_bytes();
  }
  return bytes;
}

const ArgValue* ParamArgs::find(const std::string& name) const {
  auto it = values_.find(name);
  return it == values_.end() ? nullptr : &it->second;
}

std::optional<std::int64_t> ParamArgs::integer(const std::string& name) const {
  const ArgValue* v = find(name);
  if (!v) return std::nullopt;
  if (const auto* i = std::get_if<std::int64_t>(v)) return *i;
  if (const auto* s = std::get_if<Scalar>(v)) {
    if (auto r = s->try_rational(); r && r->is_integer()) return r->num();
  }
  throw ArgumentError("parameter '" + name + "' must be an integer");
}

std::optional<Scalar> ParamArgs::scalar(const std::string& name) const {
  const ArgValue* v = find(name);
  if (!v) return std::nullopt;
  if (const auto* s = std::get_if<Scalar>(v)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(v)) return Scalar(*i);
  throw ArgumentError("parameter '" + name + "' must be a number");
}

std::optional<bool> ParamArgs::flag(const std::string& name) const {
  const ArgValue* v = find(name);
  if (!v) return std::nullopt;
  if (const auto* b = std::get_if<bool>(v)) return *b;
  if (const auto* i = std::get_if<std::int64_t>(v); i && (*i == 0 || *i == 1)) return *i == 1;
  throw ArgumentError("parameter '" + name + "' must be a boolean");
}

std::optional<std::vector<Scalar>> ParamArgs::vector(const std::string& name) const {
  const ArgValue* v = find(name);
  if (!v) return std::nullopt;
  if (const auto* vec = std::get_if<std::vector<Scalar>>(v)) return *vec;
  throw ArgumentError("parameter '" + name + "' must be a vector");
}

MatrixHandle::MatrixHandle(const Family& family, std::size_t rows, std::size_t cols,
                           ScalarKind kind, ParamRecord params)
    : family_(&family), rows_(rows), cols_(cols), kind_(kind), params_(std::move(params)) {}

const std::string& MatrixHandle::family_id() const noexcept { return family_->descriptor.id; }

Scalar MatrixHandle::element(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw BoundsError("index (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                      label());
  }
  return element_unchecked(i, j);
}

Scalar MatrixHandle::element_unchecked(std::size_t i, std::size_t j) const {
  try {
    return family_->ops.element(*this, i, j);
  } catch (const OverflowError& e) {
    throw OverflowError(std::string(e.what()) + " computing entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") of " + label() + "; use float64");
  }
}

DenseMatrix MatrixHandle::materialize() const {
  auto fill = [this](auto zero) {
    using T = decltype(zero);
    Dense<T> d(rows_, cols_);
    for (std::size_t j = 1; j <= cols_; ++j)
      for (std::size_t i = 1; i <= rows_; ++i) d(i - 1, j - 1) = element_unchecked(i, j).get<T>();
    return DenseMatrix(std::move(d));
  };
  if (kind_ == ScalarKind::rational64) return fill(Rational{});
  return fill(double{});
}

std::string MatrixHandle::label() const {
  return family_->descriptor.id + "(" + std::to_string(rows_) + "x" + std::to_string(cols_) + ", " +
         std::string(to_string(kind_)) + ")";
}

DenseMatrix materialize(const InverseResult& inv) {
  if (const auto* h = std::get_if<MatrixHandle>(&inv)) return h->materialize();
  return std::get<DenseMatrix>(inv);
}

Dense<double> DenseMatrix::to_float() const {
  if (const auto* d = get_if<double>()) return *d;
  const auto& r = get<Rational>();
  Dense<double> out(r.rows(), r.cols());
  auto src = r.data();
  auto dst = out.data();
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] = src[k].to_double();
  return out;
}

std::size_t handle_footprint(const MatrixHandle& h) noexcept {
  return 2 * sizeof(std::size_t) + h.params().inline_bytes();
}

std::size_t handle_owned_bytes(const MatrixHandle& h) noexcept { return h.params().owned_bytes(); }

std::size_t dense_footprint(const MatrixHandle& h, ScalarKind kind) noexcept {
  std::size_t per = kind == ScalarKind::float64 ? sizeof(double) : sizeof(Rational);
  return h.rows() * h.cols() * per;
}

}  // namespace tmat
