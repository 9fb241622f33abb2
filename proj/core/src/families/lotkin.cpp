#include "common.hpp"

namespace tmat::families {

Family make_lotkin() {
  Family f;
  f.descriptor = {
      .id = "lotkin",
      .display_name = "Lotkin",
      .params = {dim_spec()},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::inverse, PropertyTag::illcond, PropertyTag::eigen},
      .capabilities = {},
      .summary = "Hilbert matrix with the first row set to ones",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "lotkin");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle&, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == 1) return T(1);
    return T(1) / T(static_cast<std::int64_t>(i + j - 1));
  });
  return f;
}

}  // namespace tmat::families
