#include "typedmatrices/audit.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

#include "typedmatrices/dense_linalg.hpp"
#include "typedmatrices/errors.hpp"
#include "typedmatrices/linalg.hpp"

namespace tmat {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_checkable: return "not-checkable";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

std::size_t AuditReport::count(Verdict v) const noexcept {
  std::size_t n = 0;
  for (const auto& e : entries)
    for (const auto& t : e.verdicts)
      if (t.verdict == v) ++n;
  return n;
}

namespace {

using Complex = std::complex<double>;

/// Entry comparison: exact for Rational, absolute tolerance for double.
template <typename T>
struct Compare {
  double tol;
  bool zero(const T& x) const {
    if constexpr (dense::is_exact_v<T>) {
      return x.is_zero();
    } else {
      return std::abs(x) <= tol;
    }
  }
  bool eq(const T& a, const T& b) const {
    if constexpr (dense::is_exact_v<T>) {
      return a == b;
    } else {
      return std::abs(a - b) <= tol;
    }
  }
  bool positive(const T& x) const {
    if constexpr (dense::is_exact_v<T>) {
      return x.sign() > 0;
    } else {
      return x > 0;
    }
  }
  bool nonneg(const T& x) const {
    if constexpr (dense::is_exact_v<T>) {
      return x.sign() >= 0;
    } else {
      return x >= -tol;
    }
  }
  bool integral(const T& x) const {
    if constexpr (dense::is_exact_v<T>) {
      return x.is_integer();
    } else {
      return std::abs(x - std::round(x)) <= tol;
    }
  }
};

template <typename T, typename Allowed>
bool zero_outside(const Dense<T>& a, const Compare<T>& cmp, Allowed allowed) {
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!allowed(r, c) && !cmp.zero(a(r, c))) return false;
  return true;
}

template <typename T, typename Pred>
bool all_entries(const Dense<T>& a, Pred pred) {
  for (const auto& x : a.data())
    if (!pred(x)) return false;
  return true;
}

TagVerdict verdict(PropertyTag tag, bool ok, std::string detail = {}) {
  return {tag, ok ? Verdict::pass : Verdict::fail, std::move(detail)};
}

/// Structural checks that only look at entry values. They are exact in both
/// scalar kinds: a structural tag is a claim about the formula (a zero is an
/// exact zero, a symmetric pair is bit-identical), so a tiny entry such as
/// forsythe's alpha = 1e-10 corner is not rounded away.
template <typename T>
std::optional<TagVerdict> structural(PropertyTag tag, const Dense<T>& a, const AuditOptions& o) {
  const Compare<T> cmp{0.0};
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  using P = PropertyTag;
  switch (tag) {
    case P::symmetric: {
      bool ok = a.square();
      for (std::size_t c = 0; ok && c < n; ++c)
        for (std::size_t r = c + 1; ok && r < m; ++r) ok = cmp.eq(a(r, c), a(c, r));
      return verdict(tag, ok);
    }
    case P::triangular:
      return verdict(tag, zero_outside(a, cmp, [](auto r, auto c) { return r <= c; }) ||
                              zero_outside(a, cmp, [](auto r, auto c) { return r >= c; }));
    case P::bidiagonal:
      return verdict(tag, zero_outside(a, cmp, [](auto r, auto c) { return c == r || c == r + 1; }) ||
                              zero_outside(a, cmp, [](auto r, auto c) { return c == r || r == c + 1; }));
    case P::tridiagonal:
      return verdict(tag, zero_outside(a, cmp, [](auto r, auto c) { return r <= c + 1 && c <= r + 1; }));
    case P::hessenberg:
      return verdict(tag, zero_outside(a, cmp, [](auto r, auto c) { return r <= c + 1; }) ||
                              zero_outside(a, cmp, [](auto r, auto c) { return c <= r + 1; }));
    case P::toeplitz: {
      bool ok = true;
      for (std::size_t c = 0; ok && c + 1 < n; ++c)
        for (std::size_t r = 0; ok && r + 1 < m; ++r) ok = cmp.eq(a(r, c), a(r + 1, c + 1));
      return verdict(tag, ok);
    }
    case P::hankel: {
      bool ok = true;
      for (std::size_t c = 1; ok && c < n; ++c)
        for (std::size_t r = 0; ok && r + 1 < m; ++r) ok = cmp.eq(a(r, c), a(r + 1, c - 1));
      return verdict(tag, ok);
    }
    case P::circulant: {
      bool ok = a.square();
      for (std::size_t c = 0; ok && c < n; ++c)
        for (std::size_t r = 0; ok && r + 1 < m; ++r) ok = cmp.eq(a(r, c), a(r + 1, (c + 1) % n));
      return verdict(tag, ok);
    }
    case P::binary:
      return verdict(tag, all_entries(a, [&](const T& x) { return cmp.zero(x) || cmp.eq(x, T(1)); }));
    case P::integer: return verdict(tag, all_entries(a, [&](const T& x) { return cmp.integral(x); }));
    case P::positive: return verdict(tag, all_entries(a, [&](const T& x) { return cmp.positive(x); }));
    case P::nonneg: return verdict(tag, all_entries(a, [&](const T& x) { return cmp.nonneg(x); }));
    case P::diagdom: {
      bool ok = a.square();
      for (std::size_t r = 0; ok && r < m; ++r) {
        double off = 0;
        for (std::size_t c = 0; c < n; ++c)
          if (c != r) off += dense::to_double(dense::magnitude(a(r, c)));
        ok = dense::to_double(dense::magnitude(a(r, r))) >= off - cmp.tol;
      }
      return verdict(tag, ok);
    }
    case P::sparse: {
      std::size_t nnz = 0;
      for (const auto& x : a.data())
        if (!cmp.zero(x)) ++nnz;
      const std::size_t limit = o.sparse_factor * std::max(m, n);
      return verdict(tag, nnz <= limit, "nnz " + std::to_string(nnz) + ", limit " + std::to_string(limit));
    }
    case P::rectangular: return verdict(tag, m != n, std::to_string(m) + "x" + std::to_string(n));
    case P::complex: return verdict(tag, false, "entries are real");
    default: return std::nullopt;
  }
}

Dense<double> identity_residual(const Dense<double>& a) {
  Dense<double> r = a;
  for (std::size_t k = 0; k < std::min(r.rows(), r.cols()); ++k) r(k, k) -= 1.0;
  return r;
}

double sq(double x) { return x * x; }

/// Eigenvalues of the symmetric part (A + A^T)/2.
std::vector<double> symmetric_part_spectrum(const Dense<double>& f) {
  Dense<double> s(f.rows(), f.cols());
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r) s(r, c) = 0.5 * (f(r, c) + f(c, r));
  return dense::jacobi_eigenvalues(std::move(s));
}

TagVerdict check_inverse(const MatrixHandle& h, const AuditOptions& o) {
  const auto tag = PropertyTag::inverse;
  if (!h.square()) return verdict(tag, false, "not square");
  DenseMatrix ai;
  try {
    ai = materialize(inverse(h));
  } catch (const SingularError& e) {
    return verdict(tag, false, e.what());
  }
  const DenseMatrix a = h.materialize();
  if (a.kind() == ScalarKind::rational64 && ai.kind() == ScalarKind::rational64) {
    const bool ok = a.get<Rational>() * ai.get<Rational>() == Dense<Rational>::identity(h.rows());
    return verdict(tag, ok, "exact");
  }
  const Dense<double> f = a.to_float();
  const Dense<double> fi = ai.to_float();
  const double res = dense::frobenius(identity_residual(f * fi));
  const double bound = o.tolerance * std::max(1.0, dense::frobenius(f) * dense::frobenius(fi));
  return verdict(tag, res <= bound, "residual " + format_double(res));
}

TagVerdict check_eigen(const MatrixHandle& h, const AuditOptions& o) {
  const auto tag = PropertyTag::eigen;
  if (!h.family().has(Capability::closed_eigvals)) {
    return {tag, Verdict::not_checkable, "no closed-form spectrum registered"};
  }
  const Eigenvalues closed = eigvals(h);
  const Dense<double> f = h.materialize().to_float();
  const std::size_t n = f.rows();
  if (closed.size() != n) return verdict(tag, false, "closed form returned " + std::to_string(closed.size()));
  const double scale = std::max(1.0, dense::frobenius(f));

  if (dense::is_symmetric(f)) {
    const auto ref = dense::jacobi_eigenvalues(f);
    std::vector<double> re;
    double imag = 0;
    for (const auto& z : closed) {
      re.push_back(z.real());
      imag = std::max(imag, std::abs(z.imag()));
    }
    std::sort(re.begin(), re.end());
    double diff = imag;
    for (std::size_t k = 0; k < n; ++k) diff = std::max(diff, std::abs(re[k] - ref[k]));
    return verdict(tag, diff <= o.tolerance * scale, "max deviation from Jacobi " + format_double(diff));
  }

  Complex sum = 0;
  double trace = 0;
  for (std::size_t k = 0; k < n; ++k) trace += f(k, k);
  double worst = 0;
  for (const auto& mu : closed) {
    sum += mu;
    Dense<Complex> shifted(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) shifted(r, c) = f(r, c) - (r == c ? mu : Complex{});
    double hadamard = 1;
    for (std::size_t c = 0; c < n; ++c) {
      double col = 0;
      for (std::size_t r = 0; r < n; ++r) col += std::norm(shifted(r, c));
      hadamard *= std::sqrt(col);
    }
    const double det = std::abs(dense::determinant(shifted));
    if (det > o.eigen_tolerance * hadamard) {
      return verdict(tag, false, "|det(A - lambda I)| = " + format_double(det) + " at lambda = " +
                                     format_double(mu.real()) + (mu.imag() >= 0 ? "+" : "") +
                                     format_double(mu.imag()) + "i");
    }
    if (hadamard > 0) worst = std::max(worst, det / hadamard);
  }
  const double trace_err = std::abs(sum - Complex(trace));
  if (trace_err > o.eigen_tolerance * scale * static_cast<double>(std::max<std::size_t>(n, 1))) {
    return verdict(tag, false, "eigenvalue sum differs from the trace by " + format_double(trace_err));
  }
  return verdict(tag, true, "max relative |det(A - lambda I)| " + format_double(worst));
}

TagVerdict check_minors(PropertyTag tag, const MatrixHandle& h, const AuditOptions& o) {
  if (h.rows() > o.minor_bound || h.cols() > o.minor_bound) {
    return {tag, Verdict::skipped, "minor enumeration limited to n <= " + std::to_string(o.minor_bound)};
  }
  const bool strict = tag == PropertyTag::totpos;
  const DenseMatrix a = h.materialize();
  const double tol = o.tolerance * std::max(1.0, generic::frobenius_norm(a));
  std::size_t count = 0;
  std::optional<Minor> bad;
  for_each_minor(a, [&](const Minor& m) {
    ++count;
    bool ok;
    if (auto r = m.value.try_rational(); r && m.value.is_rational()) {
      ok = strict ? r->sign() > 0 : r->sign() >= 0;
    } else {
      const double v = m.value.to_double();
      ok = strict ? v > 0 : v >= -tol;
    }
    if (!ok) bad = m;
    return ok;
  });
  if (bad) {
    std::string where = "minor rows";
    for (auto r : bad->rows) where += " " + std::to_string(r);
    where += " cols";
    for (auto c : bad->cols) where += " " + std::to_string(c);
    return verdict(tag, false, where + " = " + bad->value.to_string());
  }
  return verdict(tag, true, std::to_string(count) + " minors");
}

TagVerdict check_numeric(PropertyTag tag, const MatrixHandle& h, const AuditOptions& o) {
  using P = PropertyTag;
  const DenseMatrix a = h.materialize();
  const Dense<double> f = a.to_float();
  const double norm = std::max(1.0, dense::frobenius(f));
  const double tol = o.tolerance;
  switch (tag) {
    case P::posdef: return verdict(tag, generic::is_posdef(a));
    case P::orthogonal: {
      if (!h.square()) return verdict(tag, false, "not square");
      const double res = dense::frobenius(identity_residual(f.transposed() * f));
      return verdict(tag, res <= tol * sq(norm), "residual " + format_double(res));
    }
    case P::involutory: {
      if (!h.square()) return verdict(tag, false, "not square");
      const double res = dense::frobenius(identity_residual(f * f));
      return verdict(tag, res <= tol * sq(norm), "residual " + format_double(res));
    }
    case P::nilpotent: {
      if (!h.square()) return verdict(tag, false, "not square");
      if (const auto* r = a.get_if<Rational>()) {
        Dense<Rational> p = Dense<Rational>::identity(h.rows());
        for (std::size_t k = 0; k < h.rows(); ++k) p = p * *r;
        return verdict(tag, p == Dense<Rational>(h.rows(), h.cols()), "exact");
      }
      Dense<double> p = Dense<double>::identity(h.rows());
      for (std::size_t k = 0; k < h.rows(); ++k) p = p * f;
      const double res = dense::frobenius(p);
      return verdict(tag, res <= tol * norm, "||A^n|| = " + format_double(res));
    }
    case P::normal: {
      if (!h.square()) return verdict(tag, false, "not square");
      const Dense<double> ft = f.transposed();
      Dense<double> d = ft * f;
      const Dense<double> e = f * ft;
      for (std::size_t k = 0; k < d.data().size(); ++k) d.data()[k] -= e.data()[k];
      const double res = dense::frobenius(d);
      return verdict(tag, res <= tol * sq(norm), "residual " + format_double(res));
    }
    case P::unimodular: {
      if (!h.square()) return verdict(tag, false, "not square");
      auto integral = structural(P::integer, f, o);
      if (integral->verdict != Verdict::pass) return verdict(tag, false, "entries are not integers");
      const Scalar det = generic::determinant(a);
      if (det.is_rational()) {
        const Rational d = det.to_rational();
        return verdict(tag, d == Rational(1) || d == Rational(-1), "det " + det.to_string());
      }
      return verdict(tag, std::abs(std::abs(det.to_double()) - 1.0) <= o.eigen_tolerance,
                     "det " + det.to_string());
    }
    case P::rankdef: {
      const std::size_t r = generic::rank(a);
      return verdict(tag, r < std::min(h.rows(), h.cols()), "rank " + std::to_string(r));
    }
    case P::correlation: {
      if (!dense::is_symmetric(f)) return verdict(tag, false, "not symmetric");
      for (std::size_t k = 0; k < f.rows(); ++k)
        if (std::abs(f(k, k) - 1.0) > tol * norm) return verdict(tag, false, "diagonal is not all ones");
      const auto ev = dense::jacobi_eigenvalues(f);
      const bool psd = ev.empty() || ev.front() >= -tol * norm;
      return verdict(tag, psd, psd ? "" : "negative eigenvalue " + format_double(ev.front()));
    }
    case P::indefinite: {
      if (!h.square()) return verdict(tag, false, "not square");
      const auto ev = symmetric_part_spectrum(f);
      const bool mixed = !ev.empty() && ev.front() < -tol * norm && ev.back() > tol * norm;
      return verdict(tag, mixed);
    }
    case P::illcond: {
      if (!h.square()) return {tag, Verdict::not_checkable, "not square"};
      const double c = cond1(h, std::max(h.rows(), kDefaultCondBound));
      if (c > o.illcond_threshold) return verdict(tag, true, "cond1 " + format_double(c));
      return {tag, Verdict::not_checkable,
              "advisory: cond1 " + format_double(c) + " <= " + format_double(o.illcond_threshold)};
    }
    default: return {tag, Verdict::not_checkable, "no checker"};
  }
}

TagVerdict dispatch(PropertyTag tag, const MatrixHandle& h, const AuditOptions& o) {
  using P = PropertyTag;
  switch (tag) {
    case P::random:
    case P::fixedsize:
    case P::graph:
    case P::regprob:
    case P::infdiv: return {tag, Verdict::not_checkable, "declarative property"};
    case P::defective: return {tag, Verdict::not_checkable, "eigenvector structure is not audited"};
    case P::singval: return {tag, Verdict::not_checkable, "no closed-form singular values registered"};
    case P::inverse: return check_inverse(h, o);
    case P::eigen: return check_eigen(h, o);
    case P::totpos:
    case P::totnonneg: return check_minors(tag, h, o);
    default: break;
  }
  const DenseMatrix a = h.materialize();
  auto s = a.visit([&](const auto& d) { return structural(tag, d, o); });
  if (s) return *s;
  return check_numeric(tag, h, o);
}

ParamArgs merged(ParamArgs base, const ParamArgs& extra) {
  for (const auto& [name, value] : extra.values()) base.set(name, value);
  return base;
}

}  // namespace

TagVerdict check_tag(PropertyTag tag, const MatrixHandle& h, const AuditOptions& options) {
  try {
    try {
      return dispatch(tag, h, options);
    } catch (const OverflowError&) {
      if (h.kind() != ScalarKind::rational64) throw;
      TagVerdict v = dispatch(tag, h.with_kind(ScalarKind::float64), options);
      v.detail += v.detail.empty() ? "float64 fallback" : " (float64 fallback)";
      return v;
    }
  } catch (const OverflowError& e) {
    return {tag, Verdict::skipped, e.what()};
  } catch (const std::exception& e) {
    return {tag, Verdict::fail, e.what()};
  }
}

AuditReport audit(const FamilyRegistry& registry, std::string_view family_id,
                  const std::vector<std::size_t>& sizes, const AuditOptions& options) {
  const Family& family = registry.get(family_id);
  const auto& tags = family.descriptor.tags;
  AuditReport report{family.id(), {}};
  for (std::size_t size : sizes) {
    AuditEntry entry{size, {}};
    if (size < 1 || size > options.size_bound) {
      for (auto tag : tags) {
        entry.verdicts.push_back({tag, Verdict::skipped,
                                  "size outside 1.." + std::to_string(options.size_bound)});
      }
      report.entries.push_back(std::move(entry));
      continue;
    }
    ParamArgs base{{"n", static_cast<std::int64_t>(size)}};
    if (options.params) base = merged(*options.params, base);
    std::optional<MatrixHandle> handle;
    std::string failure;
    try {
      handle = construct(family, base);
    } catch (const Error& e) {
      failure = e.what();
    }
    for (auto tag : tags) {
      if (!handle) {
        entry.verdicts.push_back({tag, Verdict::fail, "construction failed: " + failure});
        continue;
      }
      std::optional<MatrixHandle> witness;
      if (!options.params) {
        if (auto it = family.ops.witness_args.find(tag); it != family.ops.witness_args.end()) {
          try {
            witness = construct(family, merged(base, it->second));
          } catch (const Error& e) {
            entry.verdicts.push_back({tag, Verdict::fail, std::string("witness construction failed: ") + e.what()});
            continue;
          }
        }
      }
      TagVerdict v = check_tag(tag, witness ? *witness : *handle, options);
      if (witness) v.detail = "at witness parameters" + (v.detail.empty() ? "" : "; " + v.detail);
      if (options.params && v.verdict == Verdict::fail && parameter_dependent(tag)) {
        v = {tag, Verdict::skipped, "parameter-dependent tag does not hold at these parameters: " + v.detail};
      }
      entry.verdicts.push_back(std::move(v));
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

AuditReport audit(std::string_view family, const std::vector<std::size_t>& sizes, const AuditOptions& options) {
  return audit(FamilyRegistry::global(), family, sizes, options);
}

void write_report(std::ostream& os, const AuditReport& report) {
  for (const auto& entry : report.entries) {
    for (const auto& v : entry.verdicts) {
      os << report.family << '\t' << entry.size << '\t' << to_string(v.tag) << '\t' << to_string(v.verdict);
      if (!v.detail.empty()) os << '\t' << v.detail;
      os << '\n';
    }
  }
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

template <typename T>
bool minors_of(const Dense<T>& a, const std::function<bool(const Minor&)>& visit) {
  const std::size_t order = std::min(a.rows(), a.cols());
  for (std::size_t k = 1; k <= order; ++k) {
    std::vector<std::size_t> rows(k);
    for (std::size_t q = 0; q < k; ++q) rows[q] = q;
    do {
      std::vector<std::size_t> cols(k);
      for (std::size_t q = 0; q < k; ++q) cols[q] = q;
      do {
        Dense<T> sub(k, k);
        for (std::size_t c = 0; c < k; ++c)
          for (std::size_t r = 0; r < k; ++r) sub(r, c) = a(rows[r], cols[c]);
        Minor m;
        for (auto r : rows) m.rows.push_back(r + 1);
        for (auto c : cols) m.cols.push_back(c + 1);
        m.value = Scalar(dense::determinant(sub));
        if (!visit(m)) return false;
      } while (next_combination(cols, a.cols()));
    } while (next_combination(rows, a.rows()));
  }
  return true;
}

}  // namespace

void for_each_minor(const DenseMatrix& a, const std::function<bool(const Minor&)>& visit) {
  a.visit([&](const auto& d) { minors_of(d, visit); });
}

}  // namespace tmat
