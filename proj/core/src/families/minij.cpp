#include "common.hpp"

namespace tmat::families {

Family make_minij() {
  Family f;
  f.descriptor = {
      .id = "minij",
      .display_name = "Minij",
      .params = {dim_spec()},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::eigen, PropertyTag::inverse,
               PropertyTag::integer},
      .capabilities = {Capability::closed_eigvals, Capability::closed_inverse, Capability::closed_predicates},
      .summary = "a(i,j) = min(i,j)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "minij");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle&, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return T(static_cast<std::int64_t>(std::min(i, j)));
  });
  f.ops.eigvals = [](const MatrixHandle& h) {
    const auto n = static_cast<double>(h.rows());
    Eigenvalues out;
    for (std::size_t i = 1; i <= h.rows(); ++i) {
      double s = 1.0 / std::cos(static_cast<double>(i) * std::numbers::pi / (2 * n + 1));
      out.emplace_back(0.25 * s * s, 0.0);
    }
    return sorted(out);
  };
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    // Tridiagonal: 2 on the diagonal except 1 at (n,n), -1 off the diagonal.
    return with_kind_dense(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      const std::size_t n = h.rows();
      Dense<T> inv(n, n);
      for (std::size_t k = 0; k < n; ++k) {
        inv(k, k) = T(k + 1 == n ? 1 : 2);
        if (k + 1 < n) inv(k, k + 1) = inv(k + 1, k) = T(-1);
      }
      return inv;
    });
  };
  f.ops.predicates = [](const MatrixHandle& h, Predicate p) -> std::optional<bool> {
    switch (p) {
      case Predicate::symmetric:
      case Predicate::posdef: return true;
      case Predicate::diagonal: return h.rows() <= 1;
    }
    return std::nullopt;
  };
  return f;
}

}  // namespace tmat::families
