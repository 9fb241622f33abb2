#pragma once

// Machine checks of declared property tags on small materialized instances.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typedmatrices/family.hpp"
#include "typedmatrices/property.hpp"

namespace tmat {

enum class Verdict { pass, fail, not_checkable, skipped };

std::string_view to_string(Verdict v) noexcept;

struct TagVerdict {
  PropertyTag tag;
  Verdict verdict;
  std::string detail;  // reason for skipped / not-checkable / fail, or a measured value
};

struct AuditOptions {
  double tolerance = 1e-10;        // numeric residual checks, scaled by ||A||_F (structural checks are exact)
  double eigen_tolerance = 1e-8;   // |det(A - lambda I)| relative to the Hadamard bound
  std::size_t size_bound = 16;     // larger sizes are skipped
  std::size_t minor_bound = 6;     // totpos / totnonneg brute-force limit
  double illcond_threshold = 1e4;  // advisory cond1 threshold
  std::size_t sparse_factor = 5;   // sparse: nnz <= factor * max(m, n)
  /// Explicit constructor parameters (merged with {"n": size}). When unset,
  /// parameter-dependent tags are checked at the family's witness parameters.
  std::optional<ParamArgs> params;
};

/// Verdicts for one family at one size; each declared tag appears once, in
/// declaration order.
struct AuditEntry {
  std::size_t size;
  std::vector<TagVerdict> verdicts;
};

struct AuditReport {
  std::string family;
  std::vector<AuditEntry> entries;

  std::size_t count(Verdict v) const noexcept;
  bool ok() const noexcept { return count(Verdict::fail) == 0; }
};

/// Audits every declared tag of `family` at each size (the constructor's `n`).
/// Throws LookupError for an unknown family; oversize requests produce
/// skipped verdicts.
AuditReport audit(const FamilyRegistry& registry, std::string_view family, const std::vector<std::size_t>& sizes,
                  const AuditOptions& options = {});
AuditReport audit(std::string_view family, const std::vector<std::size_t>& sizes,
                  const AuditOptions& options = {});

/// Runs the checker for one tag on an already constructed handle.
TagVerdict check_tag(PropertyTag tag, const MatrixHandle& h, const AuditOptions& options = {});

/// Writes "family<TAB>size<TAB>tag<TAB>verdict[<TAB>detail]" lines.
void write_report(std::ostream& os, const AuditReport& report);

/// A square submatrix determinant: 1-based row and column index sets.
struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Scalar value;
};

/// Calls `visit` for every square minor of order 1..min(m, n), in order of
/// increasing order, then lexicographic rows, then columns. Stops early when
/// `visit` returns false. Exact for rational matrices (OverflowError if a
/// minor does not fit).
void for_each_minor(const DenseMatrix& a, const std::function<bool(const Minor&)>& visit);

}  // namespace tmat
