#include "typedmatrices/catalog.hpp"

namespace tmat {

namespace {

std::int64_t as_arg(std::size_t n) { return static_cast<std::int64_t>(n); }

MatrixHandle make(std::string_view id, ParamArgs args, OptKind kind) {
  return construct(id, args, kind);
}

}  // namespace

MatrixHandle hilbert(std::size_t n, OptKind kind) { return make("hilbert", {{"n", as_arg(n)}}, kind); }
MatrixHandle hilbert(std::size_t m, std::size_t n, OptKind kind) {
  return make("hilbert", {{"m", as_arg(m)}, {"n", as_arg(n)}}, kind);
}
MatrixHandle inversehilbert(std::size_t n, OptKind kind) {
  return make("inversehilbert", {{"n", as_arg(n)}}, kind);
}
MatrixHandle cauchy(std::size_t n, OptKind kind) { return make("cauchy", {{"n", as_arg(n)}}, kind); }
MatrixHandle cauchy(std::vector<Scalar> x, std::vector<Scalar> y, OptKind kind) {
  return make("cauchy", {{"x", std::move(x)}, {"y", std::move(y)}}, kind);
}
MatrixHandle minij(std::size_t n, OptKind kind) { return make("minij", {{"n", as_arg(n)}}, kind); }
MatrixHandle clement(std::size_t n, bool symmetric, OptKind kind) {
  return make("clement", {{"n", as_arg(n)}, {"symmetric", symmetric}}, kind);
}
MatrixHandle lehmer(std::size_t n, OptKind kind) { return make("lehmer", {{"n", as_arg(n)}}, kind); }
MatrixHandle pei(std::size_t n, Scalar alpha, OptKind kind) {
  return make("pei", {{"n", as_arg(n)}, {"alpha", alpha}}, kind);
}
MatrixHandle pascal(std::size_t n, OptKind kind) { return make("pascal", {{"n", as_arg(n)}}, kind); }
MatrixHandle kms(std::size_t n, Scalar rho, OptKind kind) {
  return make("kms", {{"n", as_arg(n)}, {"rho", rho}}, kind);
}
MatrixHandle moler(std::size_t n, Scalar alpha, OptKind kind) {
  return make("moler", {{"n", as_arg(n)}, {"alpha", alpha}}, kind);
}
MatrixHandle forsythe(std::size_t n, Scalar alpha, Scalar lambda, OptKind kind) {
  return make("forsythe", {{"n", as_arg(n)}, {"alpha", alpha}, {"lambda", lambda}}, kind);
}
MatrixHandle jordbloc(std::size_t n, Scalar lambda, OptKind kind) {
  return make("jordbloc", {{"n", as_arg(n)}, {"lambda", lambda}}, kind);
}
MatrixHandle frank(std::size_t n, OptKind kind) { return make("frank", {{"n", as_arg(n)}}, kind); }
MatrixHandle lotkin(std::size_t n, OptKind kind) { return make("lotkin", {{"n", as_arg(n)}}, kind); }
MatrixHandle grcar(std::size_t n, std::int64_t k, OptKind kind) {
  return make("grcar", {{"n", as_arg(n)}, {"k", k}}, kind);
}
MatrixHandle wilkinson(std::size_t n, OptKind kind) { return make("wilkinson", {{"n", as_arg(n)}}, kind); }
MatrixHandle poisson(std::size_t n, OptKind kind) { return make("poisson", {{"n", as_arg(n)}}, kind); }
MatrixHandle companion(std::size_t n, OptKind kind) { return make("companion", {{"n", as_arg(n)}}, kind); }
MatrixHandle companion(std::vector<Scalar> coefficients, OptKind kind) {
  return make("companion", {{"v", std::move(coefficients)}}, kind);
}
MatrixHandle triw(std::size_t n, Scalar alpha, std::optional<std::int64_t> k, OptKind kind) {
  ParamArgs args{{"n", as_arg(n)}, {"alpha", alpha}};
  if (k) args.set("k", *k);
  return make("triw", args, kind);
}

}  // namespace tmat
