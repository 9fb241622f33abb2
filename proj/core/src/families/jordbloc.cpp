#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kLambda = 0;
}

Family make_jordbloc() {
  Family f;
  f.descriptor = {
      .id = "jordbloc",
      .display_name = "JordBloc",
      .params = {dim_spec(), {"lambda", ParamType::scalar, "1", ""}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::eigen, PropertyTag::bidiagonal, PropertyTag::triangular, PropertyTag::toeplitz,
               PropertyTag::defective, PropertyTag::nilpotent},
      .capabilities = {Capability::closed_eigvals, Capability::closed_det},
      .summary = "Jordan block: lambda on the diagonal, ones above",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "jordbloc");
    return BuiltParams{n, n, {args.scalar("lambda").value_or(Scalar(1))}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == j) return h.params().scalar(kLambda).get<T>();
    return j == i + 1 ? T(1) : T(0);
  });
  f.ops.eigvals = [](const MatrixHandle& h) {
    return Eigenvalues(h.rows(), {h.params().scalar(kLambda).to_double(), 0.0});
  };
  f.ops.det = [](const MatrixHandle& h) {
    return with_kind_scalar(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      return power(h.params().scalar(kLambda).get<T>(), h.rows());
    });
  };
  f.ops.witness_args = {{PropertyTag::nilpotent, ParamArgs{{"lambda", Scalar(0)}}}};
  return f;
}

}  // namespace tmat::families
