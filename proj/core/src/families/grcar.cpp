#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kBand = 0;
}

Family make_grcar() {
  Family f;
  f.descriptor = {
      .id = "grcar",
      .display_name = "Grcar",
      .params = {dim_spec(), {"k", ParamType::integer, "3", ">= 0"}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::toeplitz, PropertyTag::hessenberg, PropertyTag::integer},
      .capabilities = {},
      .summary = "-1 on the subdiagonal, ones on the diagonal and k superdiagonals",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "grcar");
    auto k = args.integer("k").value_or(3);
    if (k < 0) throw ArgumentError("grcar: k = " + std::to_string(k) + " < 0");
    return BuiltParams{n, n, {k}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == j + 1) return T(-1);
    const auto band = static_cast<std::size_t>(h.params().integer(kBand));
    return (j >= i && j <= i + band) ? T(1) : T(0);
  });
  return f;
}

}  // namespace tmat::families
