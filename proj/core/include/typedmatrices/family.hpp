#pragma once

#include <complex>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

#include "typedmatrices/matrix.hpp"
#include "typedmatrices/property.hpp"

namespace tmat {

enum class Capability : std::uint8_t {
  closed_det = 1,
  closed_inverse = 2,
  closed_eigvals = 4,
  closed_predicates = 8,
};

class Capabilities {
 public:
  constexpr Capabilities() = default;
  constexpr Capabilities(std::initializer_list<Capability> caps) {
    for (auto c : caps) bits_ |= static_cast<std::uint8_t>(c);
  }
  constexpr bool has(Capability c) const noexcept { return (bits_ & static_cast<std::uint8_t>(c)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  friend constexpr bool operator==(Capabilities, Capabilities) = default;

 private:
  std::uint8_t bits_ = 0;
};

std::string_view to_string(Capability c) noexcept;

enum class Predicate { symmetric, posdef, diagonal };

/// Result of an inversion: a lazy handle when the inverse is itself a
/// family (Hilbert <-> InverseHilbert), otherwise dense storage.
using InverseResult = std::variant<MatrixHandle, DenseMatrix>;

DenseMatrix materialize(const InverseResult& inv);

/// Eigenvalues sorted by (real, imaginary) part.
using Eigenvalues = std::vector<std::complex<double>>;

struct ParamSpec {
  std::string name;
  ParamType type;
  std::string default_text;  // empty when required or derived
  std::string constraint;
};

/// Static metadata of one matrix family.
struct FamilyDescriptor {
  std::string id;            // lowercase, unique
  std::string display_name;  // e.g. "InverseHilbert"
  std::vector<ParamSpec> params;
  ScalarKind default_kind = ScalarKind::float64;
  std::vector<PropertyTag> tags;
  Capabilities capabilities;
  std::string summary;
};

struct BuiltParams {
  std::size_t rows;
  std::size_t cols;
  ParamRecord record;
};

using BuildFn = std::function<BuiltParams(const ParamArgs&)>;
using ElementFn = std::function<Scalar(const MatrixHandle&, std::size_t, std::size_t)>;
using KindCheckFn = std::function<void(const ParamRecord&, ScalarKind)>;
using DetFn = std::function<Scalar(const MatrixHandle&)>;
/// nullopt when the closed form does not cover the current parameters; the
/// generic LU inverse is used instead.
using InverseFn = std::function<std::optional<InverseResult>(const MatrixHandle&)>;
using EigvalsFn = std::function<Eigenvalues(const MatrixHandle&)>;
/// nullopt defers to the generic scan for that predicate.
using PredicateFn = std::function<std::optional<bool>(const MatrixHandle&, Predicate)>;
/// Maps a requested square size to constructor arguments (nullopt when the
/// family has no instance of that size).
using SizeFn = std::function<std::optional<ParamArgs>(std::size_t)>;

/// Behaviour of a family: construction, the element formula, and optional
/// closed-form routines backing the declared capabilities.
struct FamilyOps {
  BuildFn build;
  ElementFn element;
  KindCheckFn check_kind;  // optional extra scalar-kind constraint
  DetFn det;
  InverseFn inverse;
  EigvalsFn eigvals;
  PredicateFn predicates;
  SizeFn size_args;  // default: {"n": size}
  /// Parameters at which a parameter-dependent tag is expected to hold, if
  /// not at the defaults (e.g. jordbloc is nilpotent at lambda = 0).
  std::map<PropertyTag, ParamArgs> witness_args;
};

struct Family {
  FamilyDescriptor descriptor;
  FamilyOps ops;

  const std::string& id() const noexcept { return descriptor.id; }
  bool has(Capability c) const noexcept { return descriptor.capabilities.has(c); }
};

/// Wraps a generic formula `f(h, i, j, T{})`, evaluated as double or as
/// Rational according to the handle's kind.
template <typename F>
ElementFn typed_element(F f) {
  return [f](const MatrixHandle& h, std::size_t i, std::size_t j) -> Scalar {
    if (h.kind() == ScalarKind::rational64) return Scalar(f(h, i, j, Rational{}));
    return Scalar(f(h, i, j, double{}));
  };
}

/// Catalog of matrix families, in registration order.
///
/// Lookups may run concurrently; `add` takes an exclusive lock. Families are
/// never removed, so references returned by `get` stay valid for the
/// registry's lifetime.
class FamilyRegistry {
 public:
  FamilyRegistry() = default;
  FamilyRegistry(const FamilyRegistry&) = delete;
  FamilyRegistry& operator=(const FamilyRegistry&) = delete;

  /// Registers a family. Throws LookupError on a duplicate id, ArgumentError
  /// when a declared capability has no routine (or vice versa).
  const Family& add(Family family);

  const Family* find(std::string_view id) const;
  const Family& get(std::string_view id) const;  // LookupError if unknown
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  std::vector<std::string> ids() const;
  std::vector<const Family*> families() const;
  std::size_t size() const;

  /// Validates `args` against the family schema and builds a handle. The
  /// scalar kind defaults to the family's.
  MatrixHandle construct(std::string_view id, const ParamArgs& args,
                         std::optional<ScalarKind> kind = std::nullopt) const;

  /// Process-wide registry preloaded with the builtin catalog.
  static FamilyRegistry& global();

 private:
  mutable std::shared_mutex mutex_;
  std::deque<Family> families_;
};

/// Constructs a handle for an already-resolved family.
MatrixHandle construct(const Family& family, const ParamArgs& args,
                       std::optional<ScalarKind> kind = std::nullopt);

/// Global-registry shorthands.
MatrixHandle construct(std::string_view id, const ParamArgs& args,
                       std::optional<ScalarKind> kind = std::nullopt);
std::vector<std::string> list_families();
void register_family(Family family);

/// Registers the 19 builtin families in catalog order.
void register_builtin_families(FamilyRegistry& registry);

/// Builtin ids in catalog order.
const std::vector<std::string>& builtin_family_ids();

}  // namespace tmat
