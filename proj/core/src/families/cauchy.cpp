#include <numeric>

#include "common.hpp"

namespace tmat::families {

namespace {

constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;

/// Exact product of many rational factors. Numerator and denominator
/// factors are cross-cancelled before any multiplication, so only the
/// reduced result has to fit in 64 bits.
class ExactProduct {
 public:
  void multiply(const Rational& r) {
    push(num_, r.num());
    push(den_, r.den());
  }
  void divide(const Rational& r) {
    if (r.is_zero()) throw ArgumentError("division by zero in product");
    push(num_, r.den());
    push(den_, r.num());
  }

  Rational value() {
    if (zero_) return Rational(0);
    for (auto& a : num_)
      for (auto& b : den_) {
        std::int64_t g = std::gcd(a, b);
        if (g > 1) {
          a /= g;
          b /= g;
        }
      }
    Rational out(negative_ ? -1 : 1);
    for (auto a : num_) out *= Rational(a);
    for (auto b : den_) out /= Rational(b);
    return out;
  }

 private:
  void push(std::vector<std::int64_t>& list, std::int64_t v) {
    if (v == 0) {
      zero_ = true;
      return;
    }
    if (v < 0) {
      negative_ = !negative_;
      v = -v;
    }
    if (v != 1) list.push_back(v);
  }

  std::vector<std::int64_t> num_;
  std::vector<std::int64_t> den_;
  bool negative_ = false;
  bool zero_ = false;
};

/// Running product kept as mantissa * 2^exponent so long products of small
/// factors do not underflow before the end.
class ScaledProduct {
 public:
  void multiply(double v) {
    mantissa_ *= v;
    int e = 0;
    mantissa_ = std::frexp(mantissa_, &e);
    exponent_ += e;
  }
  double value() const { return std::ldexp(mantissa_, static_cast<int>(exponent_)); }

 private:
  double mantissa_ = 1.0;
  long exponent_ = 0;
};

std::vector<Scalar> sequence(const Generator& g, std::size_t n) {
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(g.at(i));
  return out;
}

}  // namespace

Family make_cauchy() {
  Family f;
  f.descriptor = {
      .id = "cauchy",
      .display_name = "Cauchy",
      .params = {dim_spec("n", "length of x"),
                 {"x", ParamType::vector, "(1, ..., n)", ""},
                 {"y", ParamType::vector, "x", "x(i) + y(j) != 0"}},
      .default_kind = ScalarKind::float64,
      .tags = {PropertyTag::symmetric, PropertyTag::posdef, PropertyTag::inverse, PropertyTag::illcond,
               PropertyTag::infdiv},
      .capabilities = {Capability::closed_det},
      .summary = "a(i,j) = 1/(x(i) + y(j))",
  };
  f.ops.build = [](const ParamArgs& args) {
    auto n = read_dim(args, "n");
    auto xv = args.vector("x");
    auto yv = args.vector("y");
    if (!n && !xv) throw ArgumentError("cauchy: give either 'n' or 'x'");
    if (n && xv && *n != xv->size()) throw ArgumentError("cauchy: 'n' does not match the length of 'x'");
    Generator x = xv ? Generator(*xv) : Generator(Generator::Form::range);
    Generator y = yv ? Generator(*yv) : x;
    std::size_t rows = xv ? xv->size() : *n;
    std::size_t cols = yv ? yv->size() : rows;
    if (xv || yv) {
      for (std::size_t i = 1; i <= rows; ++i)
        for (std::size_t j = 1; j <= cols; ++j) {
          Scalar xi = x.at(i);
          Scalar yj = y.at(j);
          bool zero = xi.is_rational() && yj.is_rational()
                          ? (xi.to_rational() + yj.to_rational()).is_zero()
                          : xi.to_double() + yj.to_double() == 0.0;
          if (zero) {
            throw ArgumentError("cauchy: x(" + std::to_string(i) + ") + y(" + std::to_string(j) + ") = 0");
          }
        }
    }
    return BuiltParams{rows, cols, {x, y}};
  };
  f.ops.element = typed_element([](const MatrixHandle& h, std::size_t i, std::size_t j, auto zero) {
    using T = decltype(zero);
    const auto& p = h.params();
    return T(1) / (p.generator(kX).get<T>(i) + p.generator(kY).get<T>(j));
  });
  f.ops.det = [](const MatrixHandle& h) -> Scalar {
    require_square(h, "determinant");
    const std::size_t n = h.rows();
    auto x = sequence(h.params().generator(kX), n);
    auto y = sequence(h.params().generator(kY), n);
    // det = prod_{i<j} (x_j - x_i)(y_j - y_i) / prod_{i,j} (x_i + y_j)
    if (h.kind() == ScalarKind::rational64) {
      ExactProduct prod;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          prod.multiply(x[j].to_rational() - x[i].to_rational());
          prod.multiply(y[j].to_rational() - y[i].to_rational());
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prod.divide(x[i].to_rational() + y[j].to_rational());
      return prod.value();
    }
    ScaledProduct prod;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j)
        prod.multiply((x[j].to_double() - x[i].to_double()) * (y[j].to_double() - y[i].to_double()));
      for (std::size_t j = 0; j < n; ++j) prod.multiply(1.0 / (x[i].to_double() + y[j].to_double()));
    }
    return prod.value();
  };
  return f;
}

}  // namespace tmat::families
