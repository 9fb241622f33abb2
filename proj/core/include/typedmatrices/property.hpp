#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tmat {

/// The fixed property vocabulary. Enumerator order is the canonical
/// listing order.
enum class PropertyTag : std::uint8_t {
  bidiagonal,
  binary,
  circulant,
  complex,
  correlation,
  defective,
  diagdom,
  eigen,
  fixedsize,
  graph,
  hankel,
  hessenberg,
  illcond,
  indefinite,
  infdiv,
  integer,
  inverse,
  involutory,
  nilpotent,
  nonneg,
  normal,
  orthogonal,
  positive,
  posdef,
  random,
  rankdef,
  rectangular,
  regprob,
  singval,
  sparse,
  symmetric,
  triangular,
  tridiagonal,
  toeplitz,
  totnonneg,
  totpos,
  unimodular,
};

inline constexpr std::size_t kPropertyCount = 37;

/// All tags in canonical order.
const std::array<PropertyTag, kPropertyCount>& list_properties() noexcept;

/// Canonical lowercase name.
std::string_view to_string(PropertyTag tag) noexcept;

/// One-line description of the property.
std::string_view describe(PropertyTag tag) noexcept;

/// Case-insensitive parse.
std::optional<PropertyTag> parse_property(std::string_view name) noexcept;

/// Parse or throw LookupError listing the valid names.
PropertyTag property_from_name(std::string_view name);

/// True for tags whose definition reads "for some parameter values": a
/// family may legitimately fail them away from its witness parameters.
bool parameter_dependent(PropertyTag tag) noexcept;

}  // namespace tmat
