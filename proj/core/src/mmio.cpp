#include "typedmatrices/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "typedmatrices/errors.hpp"
#include "typedmatrices/linalg.hpp"

namespace tmat {

namespace {

/// Entries as doubles. Rational handles are evaluated exactly and rounded
/// once; if exact evaluation overflows, the float64 formula is used.
Dense<double> float_entries(const MatrixHandle& h) {
  try {
    return h.materialize().to_float();
  } catch (const OverflowError&) {
    return h.with_kind(ScalarKind::float64).materialize().get<double>();
  }
}

void write_header(std::ostream& out, const MatrixHandle& h, std::string_view format, std::string_view symmetry) {
  out << "%%MatrixMarket matrix " << format << " real " << symmetry << '\n';
  if (h.kind() == ScalarKind::rational64) out << "% scalar-kind: rational64\n";
}

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("failed to write Matrix Market output");
}

template <typename Writer>
void to_file(const std::filesystem::path& path, Writer write) {
  std::ostringstream buffer;
  write(buffer);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << buffer.str();
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

double parse_value(const std::string& tok, std::size_t line) {
  double v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw ParseError("invalid value '" + tok + "'", line);
  return v;
}

std::size_t parse_size(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError("invalid size '" + tok + "'", line);
  return v;
}

}  // namespace

void export_array(const MatrixHandle& h, std::ostream& out, bool symmetric) {
  const Dense<double> a = float_entries(h);
  if (symmetric && !is_symmetric(h)) {
    throw ArgumentError("symmetric export requested for nonsymmetric " + h.label());
  }
  write_header(out, h, "array", symmetric ? "symmetric" : "general");
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = symmetric ? c : 0; r < a.rows(); ++r) out << format_double(a(r, c)) << '\n';
  check_stream(out);
}

void export_array(const MatrixHandle& h, const std::filesystem::path& path, bool symmetric) {
  to_file(path, [&](std::ostream& out) { export_array(h, out, symmetric); });
}

void export_coordinate(const MatrixHandle& h, std::ostream& out, double zero_tol) {
  const Dense<double> a = float_entries(h);
  std::ostringstream body;
  std::size_t nnz = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const double v = a(r, c);
      if (std::abs(v) > zero_tol) {
        body << r + 1 << ' ' << c + 1 << ' ' << format_double(v) << '\n';
        ++nnz;
      }
    }
  write_header(out, h, "coordinate", "general");
  out << a.rows() << ' ' << a.cols() << ' ' << nnz << '\n' << body.str();
  check_stream(out);
}

void export_coordinate(const MatrixHandle& h, const std::filesystem::path& path, double zero_tol) {
  to_file(path, [&](std::ostream& out) { export_coordinate(h, out, zero_tol); });
}

DenseMatrix import_array(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line)) throw ParseError("empty input, expected a %%MatrixMarket header", 1);
  number = 1;
  const auto header = split(lower(line));
  if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix") {
    throw ParseError("malformed header '" + line + "'", number);
  }
  if (header[2] != "array") throw UnsupportedError("line 1: unsupported format '" + header[2] + "'; expected array");
  if (header[3] != "real") throw UnsupportedError("line 1: unsupported field '" + header[3] + "'; expected real");
  const bool symmetric = header[4] == "symmetric";
  if (!symmetric && header[4] != "general") {
    throw UnsupportedError("line 1: unsupported symmetry '" + header[4] + "'");
  }

  // Size line, after optional comments and blank lines.
  std::vector<std::string> size;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line.front() == '%') continue;
    size = split(line);
    if (size.empty()) continue;
    break;
  }
  if (size.empty()) throw ParseError("missing size line", number + 1);
  if (size.size() != 2) throw ParseError("size line must be 'rows cols'", number);
  const std::size_t m = parse_size(size[0], number);
  const std::size_t n = parse_size(size[1], number);
  if (symmetric && m != n) throw ParseError("symmetric matrix must be square", number);

  const std::size_t expected = symmetric ? n * (n + 1) / 2 : m * n;
  std::vector<double> values;
  values.reserve(expected);
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.front() == '%') continue;
    for (const auto& tok : split(line)) {
      if (values.size() == expected) throw ParseError("unexpected data after " + std::to_string(expected) + " values", number);
      values.push_back(parse_value(tok, number));
    }
  }
  if (values.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " values, found " + std::to_string(values.size()),
                     number + 1);
  }

  Dense<double> a(m, n);
  std::size_t k = 0;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = symmetric ? c : 0; r < m; ++r) {
      a(r, c) = values[k++];
      if (symmetric) a(c, r) = a(r, c);
    }
  return DenseMatrix(std::move(a));
}

DenseMatrix import_array(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return import_array(in);
}

}  // namespace tmat
