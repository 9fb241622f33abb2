#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kSymmetric = 0;
}

Family make_clement() {
  Family f;
  f.descriptor = {
      .id = "clement",
      .display_name = "Clement",
      .params = {dim_spec(), {"symmetric", ParamType::flag, "false", "true selects sqrt(i(n-i)) off-diagonals"}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::tridiagonal, PropertyTag::eigen, PropertyTag::integer},
      .capabilities = {Capability::closed_eigvals},
      .summary = "tridiagonal, zero diagonal, off-diagonals i and n-i",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "clement");
    return BuiltParams{n, n, {args.flag("symmetric").value_or(false)}};
  };
  f.ops.check_kind = [](const ParamRecord& p, ScalarKind kind) {
    if (p.flag(kSymmetric) && kind == ScalarKind::rational64) {
      throw ArgumentError("clement: the symmetric variant has irrational entries; use float64");
    }
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    const auto n = static_cast<std::int64_t>(h.rows());
    const auto k = static_cast<std::int64_t>(std::min(i, j));
    if (i != j + 1 && j != i + 1) return T(0);
    if (h.params().flag(kSymmetric)) {
      if constexpr (std::is_same_v<T, double>) {
        return std::sqrt(static_cast<double>(k * (n - k)));
      } else {
        throw ArgumentError("clement: symmetric variant is float64 only");
      }
    }
    // a(k, k+1) = k, a(k+1, k) = n - k
    return j == i + 1 ? T(k) : T(n - k);
  });
  f.ops.eigvals = [](const MatrixHandle& h) {
    const auto n = static_cast<std::int64_t>(h.rows());
    Eigenvalues out;
    for (std::int64_t k = 0; k < n; ++k) out.emplace_back(static_cast<double>(n - 1 - 2 * k), 0.0);
    return sorted(out);
  };
  return f;
}

}  // namespace tmat::families
