#include "common.hpp"

namespace tmat::families {

Family make_lehmer() {
  Family f;
  f.descriptor = {
      .id = "lehmer",
      .display_name = "Lehmer",
      .params = {dim_spec()},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::inverse, PropertyTag::totnonneg},
      .capabilities = {Capability::closed_inverse},
      .summary = "a(i,j) = min(i,j)/max(i,j)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "lehmer");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle&, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return T(static_cast<std::int64_t>(std::min(i, j))) / T(static_cast<std::int64_t>(std::max(i, j)));
  });
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    return with_kind_dense(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      const auto n = static_cast<std::int64_t>(h.rows());
      Dense<T> inv(h.rows(), h.rows());
      for (std::int64_t i = 1; i <= n; ++i) {
        const auto r = static_cast<std::size_t>(i - 1);
        if (i < n) {
          inv(r, r) = T(4 * i * i * i) / T(4 * i * i - 1);
          inv(r, r + 1) = inv(r + 1, r) = -(T(i * (i + 1)) / T(2 * i + 1));
        } else {
          inv(r, r) = T(n * n) / T(2 * n - 1);
        }
      }
      return inv;
    });
  };
  return f;
}

}  // namespace tmat::families
