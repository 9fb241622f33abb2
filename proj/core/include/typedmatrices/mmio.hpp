#pragma once

// Matrix Market exchange format: array and coordinate writers, array reader.

#include <filesystem>
#include <iosfwd>

#include "typedmatrices/dense.hpp"
#include "typedmatrices/matrix.hpp"

namespace tmat {

/// Writes `%%MatrixMarket matrix array real general` (or `symmetric`, which
/// stores only the lower triangle), the size line and the entries in
/// column-major order, one per line. Values use the shortest decimal that
/// round-trips a double. Rational handles are written as decimals after a
/// `% scalar-kind: rational64` comment. Throws ArgumentError when
/// `symmetric` is requested for a matrix that is not symmetric, IoError if
/// the stream fails.
void export_array(const MatrixHandle& h, std::ostream& out, bool symmetric = false);
void export_array(const MatrixHandle& h, const std::filesystem::path& path, bool symmetric = false);

/// Writes `%%MatrixMarket matrix coordinate real general`, the line
/// `m n nnz` and one `i j v` line per entry with |v| > zero_tol, 1-based, in
/// row-major order.
void export_coordinate(const MatrixHandle& h, std::ostream& out, double zero_tol = 0.0);
void export_coordinate(const MatrixHandle& h, const std::filesystem::path& path, double zero_tol = 0.0);

/// Reads an array-format file (`real general` or `real symmetric`, the
/// latter mirrored). Throws ParseError with the offending line number for
/// malformed input and UnsupportedError for other formats or fields.
DenseMatrix import_array(std::istream& in);
DenseMatrix import_array(const std::filesystem::path& path);

}  // namespace tmat
