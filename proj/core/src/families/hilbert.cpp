#include "common.hpp"

namespace tmat::families {

namespace {

// det(InverseHilbert(n)) = prod_{k=1}^{n-1} (2k+1) C(2k,k)^2, the reciprocal
// of the Hilbert determinant c_n^4 / c_{2n} with c_n = prod_{k<n} k!.
template <typename T>
T inverse_hilbert_det(std::size_t n) {
  T det(1);
  for (std::int64_t k = 1; k < static_cast<std::int64_t>(n); ++k) {
    T c = binomial<T>(2 * k, k);
    det *= T(2 * k + 1) * c * c;
  }
  return det;
}

template <typename T>
T inverse_hilbert_entry(std::int64_t n, std::int64_t i, std::int64_t j) {
  T c = binomial<T>(i + j - 2, i - 1);
  T v = T(i + j - 1) * binomial<T>(n + i - 1, n - j) * binomial<T>(n + j - 1, n - i) * c * c;
  return (i + j) % 2 == 0 ? v : -v;
}

}  // namespace

const Family& hilbert_family();
const Family& inversehilbert_family();

Family make_hilbert() {
  Family f;
  f.descriptor = {
      .id = "hilbert",
      .display_name = "Hilbert",
      .params = {dim_spec("m", "n"), dim_spec("n", "m")},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::symmetric, PropertyTag::inverse, PropertyTag::illcond, PropertyTag::posdef,
               PropertyTag::totpos},
      .capabilities = {Capability::closed_inverse, Capability::closed_det, Capability::closed_predicates},
      .summary = "a(i,j) = 1/(i+j-1)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto m = read_dim(args, "m");
    auto n = read_dim(args, "n");
    if (!m && !n) throw ArgumentError("hilbert: missing required parameter 'n'");
    return BuiltParams{m.value_or(*n), n.value_or(*m), {}};
  };
  f.ops.element = typed_element([](const MatrixHandle&, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return T(1) / T(static_cast<std::int64_t>(i + j - 1));
  });
  f.ops.det = [](const MatrixHandle& h) {
    require_square(h, "determinant");
    // det(H) = 1 / det(inv(H))
    return with_kind_scalar(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      return T(1) / inverse_hilbert_det<T>(h.rows());
    });
  };
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    require_square(h, "inverse");
    return MatrixHandle(inversehilbert_family(), h.rows(), h.rows(), h.kind(), {});
  };
  f.ops.predicates = [](const MatrixHandle& h, Predicate p) -> std::optional<bool> {
    switch (p) {
      case Predicate::symmetric:
      case Predicate::posdef: return h.square();
      case Predicate::diagonal:
        // Every entry is nonzero, so only shapes without off-diagonal
        // positions are diagonal.
        return h.rows() == 0 || h.cols() == 0 || (h.rows() <= 1 && h.cols() <= 1);
    }
    return std::nullopt;
  };
  f.ops.size_args = [](std::size_t n) -> std::optional<ParamArgs> { return sized(n); };
  return f;
}

Family make_inversehilbert() {
  Family f;
  f.descriptor = {
      .id = "inversehilbert",
      .display_name = "InverseHilbert",
      .params = {dim_spec()},
      .default_kind = ScalarKind::rational64,
      .tags = {PropertyTag::symmetric, PropertyTag::inverse, PropertyTag::illcond, PropertyTag::posdef,
               PropertyTag::integer},
      .capabilities = {Capability::closed_inverse, Capability::closed_det},
      .summary = "inverse of the Hilbert matrix in closed form",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "inversehilbert");
    return BuiltParams{n, n, {}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    return inverse_hilbert_entry<T>(static_cast<std::int64_t>(h.rows()), static_cast<std::int64_t>(i),
                                    static_cast<std::int64_t>(j));
  });
  f.ops.det = [](const MatrixHandle& h) {
    return with_kind_scalar(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      return inverse_hilbert_det<T>(h.rows());
    });
  };
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    return MatrixHandle(hilbert_family(), h.rows(), h.rows(), h.kind(), {});
  };
  return f;
}

const Family& hilbert_family() {
  static const Family f = make_hilbert();
  return f;
}

const Family& inversehilbert_family() {
  static const Family f = make_inversehilbert();
  return f;
}

}  // namespace tmat::families
