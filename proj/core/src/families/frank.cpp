#include "common.hpp"

namespace tmat::families {

Family make_frank() {
  Family f;
  f.descriptor = {
      .id = "frank",
      .display_name = "Frank",
      .params = {dim_spec()},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::hessenberg, PropertyTag::illcond, PropertyTag::integer},
      .capabilities = {Capability::closed_det},
      .summary = "upper Hessenberg, a(i,j) = n+1-max(i,j) for j >= i-1",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "frank");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (j + 1 < i) return T(0);
    return T(static_cast<std::int64_t>(h.rows() + 1 - std::max(i, j)));
  });
  f.ops.det = [](const MatrixHandle& h) {
    return with_kind_scalar(h.kind(), [](auto zero) { return decltype(zero)(1); });
  };
  return f;
}

}  // namespace tmat::families
