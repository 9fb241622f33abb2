#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kAlpha = 0;
constexpr std::size_t kBand = 1;
}  // namespace

Family make_triw() {
  Family f;
  f.descriptor = {
      .id = "triw",
      .display_name = "Triw",
      .params = {dim_spec(), {"alpha", ParamType::scalar, "-1", ""}, {"k", ParamType::integer, "n-1", ">= 0"}},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::triangular, PropertyTag::illcond, PropertyTag::integer, PropertyTag::unimodular},
      .capabilities = {Capability::closed_det},
      .summary = "unit upper triangular with alpha on the first k superdiagonals",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "triw");
    auto k = args.integer("k").value_or(n > 0 ? static_cast<std::int64_t>(n) - 1 : 0);
    if (k < 0) throw ArgumentError("triw: k = " + std::to_string(k) + " < 0");
    return BuiltParams{n, n, {args.scalar("alpha").value_or(Scalar(-1)), k}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == j) return T(1);
    const auto band = static_cast<std::size_t>(h.params().integer(kBand));
    return (j > i && j <= i + band) ? h.params().scalar(kAlpha).get<T>() : T(0);
  });
  f.ops.det = [](const MatrixHandle& h) {
    return with_kind_scalar(h.kind(), [](auto zero) { return decltype(zero)(1); });
  };
  return f;
}

}  // namespace tmat::families
