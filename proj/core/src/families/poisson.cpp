#include "common.hpp"

namespace tmat::families {

namespace {

std::optional<std::size_t> exact_sqrt(std::size_t v) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(v))));
  for (std::size_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c) {
    if (c * c == v) return c;
  }
  return std::nullopt;
}

}  // namespace

Family make_poisson() {
  Family f;
  f.descriptor = {
      .id = "poisson",
      .display_name = "Poisson",
      .params = {dim_spec("n", "")},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::eigen, PropertyTag::sparse,
               PropertyTag::integer},
      .capabilities = {Capability::closed_eigvals},
      .summary = "n^2 x n^2 five-point Laplacian I (x) T + T (x) I, T = tridiag(-1, 2, -1)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "poisson");
    // The grid size is kept alongside the n^2 x n^2 dimensions.
    return BuiltParams{n * n, n * n, {static_cast<std::int64_t>(n)}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == j) return T(4);
    // Grid coordinates of the two unknowns.
    const auto n = static_cast<std::size_t>(h.params().integer(0));
    const std::size_t ri = (i - 1) % n, ci = (i - 1) / n;
    const std::size_t rj = (j - 1) % n, cj = (j - 1) / n;
    const std::size_t dr = ri > rj ? ri - rj : rj - ri;
    const std::size_t dc = ci > cj ? ci - cj : cj - ci;
    return dr + dc == 1 ? T(-1) : T(0);
  });
  f.ops.eigvals = [](const MatrixHandle& h) {
    const auto n = static_cast<std::size_t>(h.params().integer(0));
    const double step = std::numbers::pi / static_cast<double>(n + 1);
    Eigenvalues out;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        out.emplace_back(4.0 - 2.0 * std::cos(static_cast<double>(i) * step) -
                             2.0 * std::cos(static_cast<double>(j) * step),
                         0.0);
    return sorted(out);
  };
  f.ops.size_args = [](std::size_t size) -> std::optional<ParamArgs> {
    auto k = exact_sqrt(size);
    if (!k) return std::nullopt;
    return sized(*k);
  };
  return f;
}

}  // namespace tmat::families
