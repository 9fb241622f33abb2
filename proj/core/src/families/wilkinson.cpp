#include "common.hpp"

namespace tmat::families {

Family make_wilkinson() {
  Family f;
  f.descriptor = {
      .id = "wilkinson",
      .display_name = "Wilkinson",
      .params = {dim_spec()},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::symmetric, PropertyTag::tridiagonal},
      .capabilities = {},
      .summary = "symmetric tridiagonal, diagonal |i - (n+1)/2|, unit off-diagonals",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "wilkinson");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == j) {
      auto twice = static_cast<std::int64_t>(2 * i) - static_cast<std::int64_t>(h.rows() + 1);
      return T(twice < 0 ? -twice : twice) / T(2);
    }
    return (i == j + 1 || j == i + 1) ? T(1) : T(0);
  });
  return f;
}

}  // namespace tmat::families
