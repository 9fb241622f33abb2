#include "common.hpp"

namespace tmat::families {

Family make_pascal() {
  Family f;
  f.descriptor = {
      .id = "pascal",
      .display_name = "Pascal",
      .params = {dim_spec()},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::eigen, PropertyTag::inverse,
               PropertyTag::illcond, PropertyTag::integer, PropertyTag::totpos, PropertyTag::unimodular},
      .capabilities = {Capability::closed_det},
      .summary = "a(i,j) = C(i+j-2, i-1)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "pascal");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle&, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return binomial<T>(static_cast<std::int64_t>(i + j - 2), static_cast<std::int64_t>(i - 1));
  });
  f.ops.det = [](const MatrixHandle& h) {
    require_square(h, "determinant");
    return with_kind_scalar(h.kind(), [](auto zero) { return decltype(zero)(1); });
  };
  return f;
}

}  // namespace tmat::families
