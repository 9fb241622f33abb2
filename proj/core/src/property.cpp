#include "typedmatrices/property.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "typedmatrices/errors.hpp"

namespace tmat {

namespace {

struct PropertyInfo {
  PropertyTag tag;
  std::string_view name;
  std::string_view description;
  bool parametric;
};

constexpr std::array<PropertyInfo, kPropertyCount> kInfo{{
    {PropertyTag::bidiagonal, "bidiagonal", "upper or lower bidiagonal", false},
    {PropertyTag::binary, "binary", "entries from a binary set", false},
    {PropertyTag::circulant, "circulant", "circulant", false},
    {PropertyTag::complex, "complex", "complex entries", false},
    {PropertyTag::correlation, "correlation", "correlation matrix", false},
    {PropertyTag::defective, "defective", "defective", false},
    {PropertyTag::diagdom, "diagdom", "diagonally dominant", false},
    {PropertyTag::eigen, "eigen", "part of the eigensystem is known explicitly", false},
    {PropertyTag::fixedsize, "fixedsize", "available only in some fixed sizes", false},
    {PropertyTag::graph, "graph", "adjacency matrix of a graph", false},
    {PropertyTag::hankel, "hankel", "Hankel", false},
    {PropertyTag::hessenberg, "hessenberg", "upper or lower Hessenberg", false},
    {PropertyTag::illcond, "illcond", "ill-conditioned for some parameter values", true},
    {PropertyTag::indefinite, "indefinite", "indefinite for some parameter values", true},
    {PropertyTag::infdiv, "infdiv", "infinitely divisible", false},
    {PropertyTag::integer, "integer", "integer entries", false},
    {PropertyTag::inverse, "inverse", "inverse known explicitly", false},
    {PropertyTag::involutory, "involutory", "involutory for some parameter values", true},
    {PropertyTag::nilpotent, "nilpotent", "nilpotent for some parameter values", true},
    {PropertyTag::nonneg, "nonneg", "nonnegative for some parameter values", true},
    {PropertyTag::normal, "normal", "normal", false},
    {PropertyTag::orthogonal, "orthogonal", "orthogonal for some parameter values", true},
    {PropertyTag::positive, "positive", "positive for some parameter values", true},
    {PropertyTag::posdef, "posdef", "positive definite for some parameter values", true},
    {PropertyTag::random, "random", "random entries", false},
    {PropertyTag::rankdef, "rankdef", "rank deficient", false},
    {PropertyTag::rectangular, "rectangular", "rectangular for some parameter values", true},
    {PropertyTag::regprob, "regprob", "test problem for regularization methods", false},
    {PropertyTag::singval, "singval", "part of the singular system is known explicitly", false},
    {PropertyTag::sparse, "sparse", "sparse", false},
    {PropertyTag::symmetric, "symmetric", "symmetric for some parameter values", true},
    {PropertyTag::triangular, "triangular", "upper or lower triangular", false},
    {PropertyTag::tridiagonal, "tridiagonal", "tridiagonal", false},
    {PropertyTag::toeplitz, "toeplitz", "Toeplitz", false},
    {PropertyTag::totnonneg, "totnonneg", "totally nonnegative for some parameter values", true},
    {PropertyTag::totpos, "totpos", "totally positive for some parameter values", true},
    {PropertyTag::unimodular, "unimodular", "unimodular for some parameter values", true},
}};

constexpr std::array<PropertyTag, kPropertyCount> make_list() {
  std::array<PropertyTag, kPropertyCount> out{};
  for (std::size_t k = 0; k < kPropertyCount; ++k) out[k] = kInfo[k].tag;
  return out;
}

constexpr auto kList = make_list();

const PropertyInfo& info(PropertyTag tag) noexcept { return kInfo[static_cast<std::size_t>(tag)]; }

}  // namespace

const std::array<PropertyTag, kPropertyCount>& list_properties() noexcept { return kList; }

std::string_view to_string(PropertyTag tag) noexcept { return info(tag).name; }

std::string_view describe(PropertyTag tag) noexcept { return info(tag).description; }

bool parameter_dependent(PropertyTag tag) noexcept { return info(tag).parametric; }

std::optional<PropertyTag> parse_property(std::string_view name) noexcept {
  std::string lowered(name);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& entry : kInfo) {
    if (entry.name == lowered) return entry.tag;
  }
  return std::nullopt;
}

PropertyTag property_from_name(std::string_view name) {
  if (auto tag = parse_property(name)) return *tag;
  std::string msg = "unknown property '" + std::string(name) + "'; valid properties:";
  for (const auto& entry : kInfo) {
    msg += ' ';
    msg += entry.name;
  }
  throw LookupError(msg);
}

}  // namespace tmat
