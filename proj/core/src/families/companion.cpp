#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kCoeffs = 0;
}

Family make_companion() {
  Family f;
  f.descriptor = {
      .id = "companion",
      .display_name = "Companion",
      .params = {dim_spec("n", "length of v"), {"v", ParamType::vector, "(1, ..., 1)", "monic coefficients"}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::hessenberg, PropertyTag::sparse, PropertyTag::integer},
      .capabilities = {Capability::closed_det},
      .summary = "companion matrix in bottom-row form: ones above the diagonal, last row -v",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = read_dim(args, "n");
    auto v = args.vector("v");
    if (!n && !v) throw ArgumentError("companion: give either 'n' or 'v'");
    if (n && v && *n != v->size()) throw ArgumentError("companion: 'n' does not match the length of 'v'");
    std::size_t size = v ? v->size() : *n;
    return BuiltParams{size, size, {v ? Generator(*v) : Generator(Generator::Form::ones)}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    if (i == h.rows()) return -h.params().generator(kCoeffs).get<T>(j);
    return j == i + 1 ? T(1) : T(0);
  });
  f.ops.det = [](const MatrixHandle& h) {
    // (-1)^n v(1)
    return with_kind_scalar(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      if (h.rows() == 0) return T(1);
      T v1 = h.params().generator(kCoeffs).get<T>(1);
      return h.rows() % 2 == 0 ? v1 : -v1;
    });
  };
  return f;
}

}  // namespace tmat::families
