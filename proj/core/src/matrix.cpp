#include "estrada/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "estrada/error.hpp"

namespace estrada {
namespace {

std::string position(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r", pos);
    if (pos == std::string_view::npos) break;
    const auto end = std::min(line.find_first_of(" \t\r", pos), line.size());
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

// Lines of a Matrix Market body with their 1-based line numbers, comments and blanks dropped.
struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    ++number;
    if (number > 1 && !line.starts_with('%')) {
      auto tokens = split_ws(line);
      if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    }
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::size_t parse_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "invalid integer '" + std::string(token) + "'");
  }
  return value;
}

double parse_value(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(line_no, "invalid numeric value '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SymNonnegMatrix::SymNonnegMatrix(std::size_t ell) : ell_(ell), entries_(ell * ell, 0.0) {
  if (ell == 0) throw InputError("matrix order must be at least 1");
}

SymNonnegMatrix SymNonnegMatrix::from_dense(std::size_t ell, std::span<const double> row_major) {
  SymNonnegMatrix m(ell);
  if (row_major.size() != ell * ell) {
    throw InputError("expected " + std::to_string(ell * ell) + " entries, got " +
                     std::to_string(row_major.size()));
  }
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      const double v = row_major[i * ell + j];
      if (!std::isfinite(v)) throw InputError("non-finite entry at " + position(i, j));
      if (v < 0.0) throw InputError("negative entry at " + position(i, j));
    }
  }
  for (std::size_t i = 0; i < ell; ++i) {
    m.entries_[i * ell + i] = row_major[i * ell + i] + 0.0;
    for (std::size_t j = i + 1; j < ell; ++j) {
      const double a = row_major[i * ell + j];
      const double b = row_major[j * ell + i];
      if (std::abs(a - b) > kSymmetryTolerance * std::max(std::abs(a), std::abs(b))) {
        throw InputError("matrix is not symmetric at " + position(i, j));
      }
      const double s = a == b ? a + 0.0 : 0.5 * (a + b);
      m.entries_[i * ell + j] = s;
      m.entries_[j * ell + i] = s;
    }
  }
  for (std::size_t i = 0; i < ell; ++i) m.trace_ += m.entries_[i * ell + i];
  return m;
}

SymNonnegMatrix SymNonnegMatrix::identity(std::size_t ell) {
  SymNonnegMatrix m(ell);
  for (std::size_t i = 0; i < ell; ++i) m.entries_[i * ell + i] = 1.0;
  m.trace_ = static_cast<double>(ell);
  return m;
}

void SymNonnegMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < ell_; ++i) {
    const double* r = entries_.data() + i * ell_;
    double acc = 0.0;
    for (std::size_t j = 0; j < ell_; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

bool SymNonnegMatrix::irreducible() const {
  std::vector<char> seen(ell_, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < ell_; ++v) {
      if (v != u && !seen[v] && (*this)(u, v) != 0.0) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == ell_;
}

SymNonnegMatrix parse_matrix_market(std::string_view text) {
  const auto header_end = text.find('\n');
  const auto header = split_ws(text.substr(0, header_end));
  if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix") {
    throw ParseError(1, "expected '%%MatrixMarket matrix <format> <field> <symmetry>' header");
  }
  const auto format = lower(header[2]);
  const auto field = lower(header[3]);
  const auto symmetry = lower(header[4]);
  if (format != "coordinate" && format != "array") {
    throw ParseError(1, "unsupported format '" + format + "'");
  }
  if (field != "real" && field != "integer" && field != "double") {
    throw ParseError(1, "unsupported field '" + field + "' (need real)");
  }
  if (symmetry != "symmetric" && symmetry != "general") {
    throw ParseError(1, "unsupported symmetry '" + symmetry + "'");
  }
  const bool symmetric = symmetry == "symmetric";

  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(1, "missing size line");
  const auto& size_line = lines.front();
  const bool coordinate = format == "coordinate";
  if (size_line.tokens.size() != (coordinate ? 3u : 2u)) {
    throw ParseError(size_line.number, "malformed size line");
  }
  const auto rows = parse_index(size_line.tokens[0], size_line.number);
  const auto cols = parse_index(size_line.tokens[1], size_line.number);
  if (rows != cols) throw ParseError(size_line.number, "matrix must be square");
  if (rows == 0) throw ParseError(size_line.number, "matrix order must be at least 1");
  const std::size_t ell = rows;

  std::vector<double> dense(ell * ell, 0.0);
  auto check_sign = [&](double v, std::size_t i, std::size_t j, std::size_t line_no) {
    if (v < 0.0) throw ParseError(line_no, "negative entry at " + position(i, j));
  };

  if (coordinate) {
    const auto nnz = parse_index(size_line.tokens[2], size_line.number);
    if (lines.size() - 1 != nnz) {
      throw ParseError(size_line.number, "declared " + std::to_string(nnz) + " entries, found " +
                                             std::to_string(lines.size() - 1));
    }
    std::vector<char> seen(ell * ell, 0);
    for (std::size_t e = 1; e < lines.size(); ++e) {
      const auto& [line_no, tokens] = lines[e];
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'row col value'");
      const auto i = parse_index(tokens[0], line_no);
      const auto j = parse_index(tokens[1], line_no);
      if (i < 1 || i > ell || j < 1 || j > ell) throw ParseError(line_no, "index out of range");
      const double v = parse_value(tokens[2], line_no);
      check_sign(v, i - 1, j - 1, line_no);
      const auto at = (i - 1) * ell + (j - 1);
      const auto mirror = (j - 1) * ell + (i - 1);
      if (seen[at] || (symmetric && seen[mirror])) {
        throw ParseError(line_no, "duplicate entry at " + position(i - 1, j - 1));
      }
      seen[at] = 1;
      dense[at] = v;
      if (symmetric) {
        seen[mirror] = 1;
        dense[mirror] = v;
      }
    }
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t j = 0; j < ell; ++j)
      for (std::size_t i = symmetric ? j : 0; i < ell; ++i) slots.emplace_back(i, j);
    if (lines.size() - 1 != slots.size()) {
      throw ParseError(size_line.number, "expected " + std::to_string(slots.size()) +
                                             " array values, found " +
                                             std::to_string(lines.size() - 1));
    }
    for (std::size_t e = 0; e < slots.size(); ++e) {
      const auto& [line_no, tokens] = lines[e + 1];
      if (tokens.size() != 1) throw ParseError(line_no, "expected one value per line");
      const auto [i, j] = slots[e];
      const double v = parse_value(tokens[0], line_no);
      check_sign(v, i, j, line_no);
      dense[i * ell + j] = v;
      if (symmetric) dense[j * ell + i] = v;
    }
  }
  return SymNonnegMatrix::from_dense(ell, dense);
}

std::string to_matrix_market(const SymNonnegMatrix& r) {
  const std::size_t ell = r.order();
  std::string body;
  std::size_t nnz = 0;
  char buf[64];
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (r(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%zu %zu %.17g\n", i + 1, j + 1, r(i, j));
      body += buf;
      ++nnz;
    }
  }
  std::snprintf(buf, sizeof buf, "%zu %zu %zu\n", ell, ell, nnz);
  return "%%MatrixMarket matrix coordinate real symmetric\n" + std::string(buf) + body;
}

SymNonnegMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> dense(n * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    dense[u * n + v] = 1.0;
    dense[v * n + u] = 1.0;
  }
  return SymNonnegMatrix::from_dense(n, dense);
}

double frobenius_norm(const SymNonnegMatrix& r) {
  double sq = 0.0;
  for (double v : r.data()) sq += v * v;
  return std::sqrt(sq);
}

}  // namespace estrada
