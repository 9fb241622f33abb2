#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kRho = 0;
}

Family make_kms() {
  Family f;
  f.descriptor = {
      .id = "kms",
      .display_name = "KMS",
      .params = {dim_spec(), {"rho", ParamType::scalar, "0.5", "inverse needs rho^2 != 1"}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::inverse, PropertyTag::toeplitz},
      .capabilities = {Capability::closed_inverse, Capability::closed_det},
      .summary = "Kac-Murdock-Szego Toeplitz matrix, a(i,j) = rho^|i-j|",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "kms");
    return BuiltParams{n, n, {args.scalar("rho").value_or(Scalar(Rational(1, 2)))}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return power(h.params().scalar(kRho).get<T>(), i > j ? i - j : j - i);
  });
  f.ops.det = [](const MatrixHandle& h) {
    // (1 - rho^2)^(n-1)
    return with_kind_scalar(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      if (h.rows() == 0) return T(1);
      T rho = h.params().scalar(kRho).get<T>();
      return power(T(1) - rho * rho, h.rows() - 1);
    });
  };
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    return with_kind_dense(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      const std::size_t n = h.rows();
      T rho = h.params().scalar(kRho).get<T>();
      T gap = T(1) - rho * rho;
      if (n > 1 && gap == T(0)) throw SingularError("kms: singular for rho^2 = 1");
      Dense<T> inv(n, n);
      if (n == 1) inv(0, 0) = T(1);
      if (n < 2) return inv;
      T interior = (T(1) + rho * rho) / gap;
      T off = -(rho / gap);
      for (std::size_t k = 0; k < n; ++k) {
        inv(k, k) = (k == 0 || k + 1 == n) ? T(1) / gap : interior;
        if (k + 1 < n) inv(k, k + 1) = inv(k + 1, k) = off;
      }
      return inv;
    });
  };
  return f;
}

}  // namespace tmat::families
