#include "typedmatrices/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "typedmatrices/errors.hpp"

namespace tmat {

namespace dense {

std::vector<double> jacobi_eigenvalues(Dense<double> a, JacobiOptions options) {
  if (!a.square()) throw ArgumentError("Jacobi eigenvalues require a square matrix");
  const std::size_t n = a.rows();
  const double limit = options.relative_tolerance * frobenius(a);

  auto off_norm = [&] {
    double s = 0;
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t p = 0; p < n; ++p)
        if (p != q) s += a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  for (std::size_t sweep = 0;; ++sweep) {
    if (off_norm() <= limit) break;
    if (sweep == options.max_sweeps) {
      throw ConvergenceError("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) +
                             " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = a(k, k);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace dense

namespace {

void require_square(const MatrixHandle& h, const char* op) {
  if (!h.square()) throw ArgumentError(std::string(op) + " requires a square matrix, got " + h.label());
}

std::optional<bool> closed_predicate(const MatrixHandle& h, Predicate p) {
  const Family& f = h.family();
  if (!f.has(Capability::closed_predicates)) return std::nullopt;
  return f.ops.predicates(h, p);
}

Eigenvalues to_complex(const std::vector<double>& values) {
  return Eigenvalues(values.begin(), values.end());
}

}  // namespace

namespace generic {

Scalar determinant(const DenseMatrix& a) {
  return a.visit([](const auto& d) { return Scalar(dense::determinant(d)); });
}

DenseMatrix inverse(const DenseMatrix& a) {
  return a.visit([](const auto& d) { return DenseMatrix(dense::inverse(d)); });
}

Eigenvalues eigvals(const DenseMatrix& a) {
  if (!is_symmetric(a)) {
    throw UnsupportedError("eigenvalues of a nonsymmetric matrix without a closed form are not supported");
  }
  return to_complex(dense::jacobi_eigenvalues(a.to_float()));
}

bool is_symmetric(const DenseMatrix& a) noexcept {
  return a.visit([](const auto& d) { return dense::is_symmetric(d); });
}

bool is_diagonal(const DenseMatrix& a) noexcept {
  return a.visit([](const auto& d) { return dense::is_diagonal(d); });
}

bool is_posdef(const DenseMatrix& a) noexcept {
  try {
    if (const auto* r = a.get_if<Rational>()) {
      try {
        return dense::is_posdef(*r);
      } catch (const OverflowError&) {
        return dense::is_posdef(a.to_float());
      }
    }
    return dense::is_posdef(a.get<double>());
  } catch (...) {
    return false;
  }
}

std::size_t rank(const DenseMatrix& a) {
  if (const auto* r = a.get_if<Rational>()) {
    try {
      return dense::rank(*r);
    } catch (const OverflowError&) {
      // Exact elimination ran out of range; fall through to float.
    }
  }
  Dense<double> f = a.to_float();
  const double threshold = 1e-10 * dense::frobenius(f);
  return dense::rank(std::move(f), threshold);
}

double frobenius_norm(const DenseMatrix& a) noexcept {
  return a.visit([](const auto& d) { return dense::frobenius(d); });
}

namespace {

/// Runs `scan` on `h`, retrying in float64 when rational entries overflow.
template <typename Scan>
bool scan_with_fallback(const MatrixHandle& h, Scan scan) noexcept {
  try {
    try {
      return scan(h);
    } catch (const OverflowError&) {
      return scan(h.with_kind(ScalarKind::float64));
    }
  } catch (...) {
    return false;
  }
}

}  // namespace

bool scan_symmetric(const MatrixHandle& h) noexcept {
  if (!h.square()) return false;
  return scan_with_fallback(h, [](const MatrixHandle& m) {
    for (std::size_t j = 1; j <= m.cols(); ++j)
      for (std::size_t i = j + 1; i <= m.rows(); ++i)
        if (!(m.element_unchecked(i, j) == m.element_unchecked(j, i))) return false;
    return true;
  });
}

bool scan_diagonal(const MatrixHandle& h) noexcept {
  return scan_with_fallback(h, [](const MatrixHandle& m) {
    for (std::size_t j = 1; j <= m.cols(); ++j)
      for (std::size_t i = 1; i <= m.rows(); ++i)
        if (i != j && m.element_unchecked(i, j).to_double() != 0.0) return false;
    return true;
  });
}

}  // namespace generic

Scalar determinant(const MatrixHandle& h) {
  require_square(h, "determinant");
  try {
    if (h.family().has(Capability::closed_det)) return h.family().ops.det(h);
    return generic::determinant(h.materialize());
  } catch (const OverflowError&) {
    throw OverflowError("64-bit rational overflow in the determinant of " + h.label() +
                        "; use float64 for this size");
  }
}

InverseResult inverse(const MatrixHandle& h) {
  require_square(h, "inverse");
  if (h.family().has(Capability::closed_inverse)) {
    if (auto inv = h.family().ops.inverse(h)) return std::move(*inv);
  }
  DenseMatrix a = h.materialize();
  try {
    return generic::inverse(a);
  } catch (const SingularError&) {
    throw SingularError(h.label() + " is singular" +
                        (h.kind() == ScalarKind::float64 ? " to working precision" : ""));
  } catch (const OverflowError&) {
    throw OverflowError("rational overflow during elimination of " + h.label() +
                        "; use float64 for this size");
  }
}

Eigenvalues eigvals(const MatrixHandle& h) {
  require_square(h, "eigvals");
  if (h.family().has(Capability::closed_eigvals)) return h.family().ops.eigvals(h);
  if (!is_symmetric(h)) {
    throw UnsupportedError("eigvals: " + h.label() +
                           " is nonsymmetric and its family has no closed-form spectrum");
  }
  return to_complex(dense::jacobi_eigenvalues(h.with_kind(ScalarKind::float64).materialize().get<double>()));
}

double frobenius_norm(const MatrixHandle& h) {
  const MatrixHandle f = h.with_kind(ScalarKind::float64);
  double s = 0;
  for (std::size_t j = 1; j <= f.cols(); ++j)
    for (std::size_t i = 1; i <= f.rows(); ++i) {
      const double v = f.element_unchecked(i, j).to_double();
      s += v * v;
    }
  return std::sqrt(s);
}

bool is_symmetric(const MatrixHandle& h) noexcept {
  try {
    if (auto r = closed_predicate(h, Predicate::symmetric)) return *r;
  } catch (...) {
  }
  return generic::scan_symmetric(h);
}

bool is_diagonal(const MatrixHandle& h) noexcept {
  try {
    if (auto r = closed_predicate(h, Predicate::diagonal)) return *r;
  } catch (...) {
  }
  return generic::scan_diagonal(h);
}

bool is_posdef(const MatrixHandle& h) noexcept {
  if (!h.square()) return false;
  try {
    if (auto r = closed_predicate(h, Predicate::posdef)) return *r;
    DenseMatrix a;
    try {
      a = h.materialize();
    } catch (const OverflowError&) {
      a = h.with_kind(ScalarKind::float64).materialize();
    }
    return generic::is_posdef(a);
  } catch (...) {
    return false;
  }
}

std::vector<Scalar> solve(const MatrixHandle& h, std::span<const Scalar> rhs) {
  require_square(h, "solve");
  if (rhs.size() != h.rows()) {
    throw ArgumentError("solve: right-hand side has " + std::to_string(rhs.size()) + " entries, expected " +
                        std::to_string(h.rows()));
  }
  DenseMatrix a = h.materialize();
  return a.visit([&](const auto& d) {
    using T = typename std::decay_t<decltype(d)>::value_type;
    std::vector<T> b;
    b.reserve(rhs.size());
    for (const auto& x : rhs) b.push_back(x.as(h.kind()).template get<T>());
    std::vector<T> x;
    try {
      x = dense::solve<T>(d, b);
    } catch (const SingularError&) {
      throw SingularError("solve: " + h.label() + " is singular");
    }
    return std::vector<Scalar>(x.begin(), x.end());
  });
}

std::size_t rank(const MatrixHandle& h) {
  try {
    return generic::rank(h.materialize());
  } catch (const OverflowError&) {
    return generic::rank(h.with_kind(ScalarKind::float64).materialize());
  }
}

double cond1(const MatrixHandle& h, std::size_t max_n) {
  require_square(h, "cond1");
  if (h.rows() > max_n) {
    throw ArgumentError("cond1: " + h.label() + " exceeds the size bound " + std::to_string(max_n));
  }
  auto compute = [](const MatrixHandle& m) {
    try {
      const DenseMatrix inv = materialize(inverse(m));
      return dense::norm1(m.materialize().to_float()) * dense::norm1(inv.to_float());
    } catch (const SingularError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  try {
    return compute(h);
  } catch (const OverflowError&) {
    return compute(h.with_kind(ScalarKind::float64));
  }
}

}  // namespace tmat
