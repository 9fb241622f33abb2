#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kAlpha = 0;
}

Family make_moler() {
  Family f;
  f.descriptor = {
      .id = "moler",
      .display_name = "Moler",
      .params = {dim_spec(), {"alpha", ParamType::scalar, "-1", ""}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::illcond},
      .capabilities = {Capability::closed_det},
      .summary = "T'T with T = triw(n, alpha)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "moler");
    return BuiltParams{n, n, {args.scalar("alpha").value_or(Scalar(-1))}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    T alpha = h.params().scalar(kAlpha).get<T>();
    T k(static_cast<std::int64_t>(std::min(i, j) - 1));
    if (i == j) return T(1) + k * alpha * alpha;
    return alpha + k * alpha * alpha;
  });
  f.ops.det = [](const MatrixHandle& h) {
    return with_kind_scalar(h.kind(), [](auto zero) { return decltype(zero)(1); });
  };
  return f;
}

}  // namespace tmat::families
