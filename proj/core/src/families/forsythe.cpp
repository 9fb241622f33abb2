#include <complex>

#include "common.hpp"

namespace tmat::families {

namespace {
constexpr std::size_t kAlpha = 0;
constexpr std::size_t kLambda = 1;
}  // namespace

Family make_forsythe() {
  Family f;
  f.descriptor = {
      .id = "forsythe",
      .display_name = "Forsythe",
      .params = {dim_spec(),
                 {"alpha", ParamType::scalar, "1e-10", "closed inverse needs alpha != 0"},
                 {"lambda", ParamType::scalar, "0", "closed inverse needs lambda = 0"}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::eigen, PropertyTag::inverse, PropertyTag::illcond},
      .capabilities = {Capability::closed_eigvals, Capability::closed_inverse},
      .summary = "Jordan block perturbed by alpha at (n,1)",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = require_dim(args, "n", "forsythe");
    return BuiltParams{n, n,
                       {args.scalar("alpha").value_or(Scalar(Rational(1, 10'000'000'000))),
                        args.scalar("lambda").value_or(Scalar(0))}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    T v(0);
    if (i == j) v += h.params().scalar(kLambda).get<T>();
    if (j == i + 1) v += T(1);
    // For n = 1 the perturbation lands on the diagonal: [lambda + alpha].
    if (i == h.rows() && j == 1) v += h.params().scalar(kAlpha).get<T>();
    return v;
  });
  f.ops.eigvals = [](const MatrixHandle& h) {
    // (mu - lambda)^n = alpha
    const std::size_t n = h.rows();
    const double alpha = h.params().scalar(kAlpha).to_double();
    const double lambda = h.params().scalar(kLambda).to_double();
    Eigenvalues out;
    const double radius = std::pow(std::abs(alpha), 1.0 / static_cast<double>(n));
    const double base = alpha < 0 ? std::numbers::pi : 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      double angle = (base + 2 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(n);
      auto mu = std::complex<double>(lambda, 0.0) + std::polar(radius, angle);
      // Real roots come out with rounding noise in the imaginary part.
      if (std::abs(mu.imag()) <= 1e-15 * std::max(1.0, radius)) mu.imag(0.0);
      out.push_back(mu);
    }
    return sorted(out);
  };
  f.ops.inverse = [](const MatrixHandle& h) -> std::optional<InverseResult> {
    if (h.params().scalar(kLambda).to_double() != 0.0) return std::nullopt;
    // Row 1 is (0, ..., 0, 1/alpha); ones on the subdiagonal.
    return with_kind_dense(h.kind(), [&](auto zero) {
      using T = decltype(zero);
      const std::size_t n = h.rows();
      T alpha = h.params().scalar(kAlpha).get<T>();
      if (n > 0 && alpha == T(0)) throw SingularError("forsythe: singular for alpha = 0 and lambda = 0");
      Dense<T> inv(n, n);
      if (n == 0) return inv;
      inv(0, n - 1) = T(1) / alpha;
      for (std::size_t k = 0; k + 1 < n; ++k) inv(k + 1, k) = T(1);
      return inv;
    });
  };
  return f;
}

}  // namespace tmat::families
