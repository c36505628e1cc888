#include "sign_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace permrange {

SignMatrix::SignMatrix(int64_t rows, int64_t cols, std::vector<std::vector<int64_t>> minus_positions)
    : rows_(rows), cols_(cols), minus_(std::move(minus_positions)) {
  if (rows_ < 1) throw InputError("sign matrix needs at least one row");
  if (rows_ > cols_) throw InputError("sign matrix needs k <= n, got k=" + std::to_string(rows_) +
                                      " n=" + std::to_string(cols_));
  if (static_cast<int64_t>(minus_.size()) != rows_)
    throw InputError("minus position list does not match row count");
  for (auto& row : minus_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw InputError("duplicate minus position in a row");
    for (int64_t j : row) {
      if (j < 0 || j >= cols_) throw InputError("minus position out of range");
    }
  }
}

SignMatrix SignMatrix::all_plus(int64_t rows, int64_t cols) {
  return SignMatrix(rows, cols, std::vector<std::vector<int64_t>>(static_cast<size_t>(rows)));
}

int SignMatrix::entry(int64_t row, int64_t col) const {
  const auto& m = minus_[static_cast<size_t>(row)];
  return std::binary_search(m.begin(), m.end(), col) ? -1 : +1;
}

uint64_t SignMatrix::row_mask(int64_t row) const {
  if (cols_ > 64) throw InputError("row_mask supports at most 64 columns");
  uint64_t mask = 0;
  for (int64_t j : minus_[static_cast<size_t>(row)]) mask |= uint64_t{1} << j;
  return mask;
}

SignMatrix SignMatrix::with_row_negated(int64_t row) const {
  auto m = minus_;
  const auto& old = minus_[static_cast<size_t>(row)];
  std::vector<int64_t> flipped;
  flipped.reserve(static_cast<size_t>(cols_ - minus_count(row)));
  for (int64_t j = 0; j < cols_; ++j) {
    if (!std::binary_search(old.begin(), old.end(), j)) flipped.push_back(j);
  }
  m[static_cast<size_t>(row)] = std::move(flipped);
  return SignMatrix(rows_, cols_, std::move(m));
}

SignMatrix SignMatrix::without_column(int64_t col) const {
  if (col < 0 || col >= cols_) throw InputError("column index out of range");
  std::vector<std::vector<int64_t>> m(static_cast<size_t>(rows_));
  for (int64_t i = 0; i < rows_; ++i) {
    for (int64_t j : minus_[static_cast<size_t>(i)]) {
      if (j == col) continue;
      m[static_cast<size_t>(i)].push_back(j < col ? j : j - 1);
    }
  }
  return SignMatrix(rows_, cols_ - 1, std::move(m));
}

SignMatrix SignMatrix::submatrix_minor(int64_t row, int64_t col) const {
  if (rows_ < 2) throw InputError("minor of a single-row matrix is empty");
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw InputError("minor index out of range");
  std::vector<std::vector<int64_t>> m;
  m.reserve(static_cast<size_t>(rows_ - 1));
  for (int64_t i = 0; i < rows_; ++i) {
    if (i == row) continue;
    std::vector<int64_t> r;
    for (int64_t j : minus_[static_cast<size_t>(i)]) {
      if (j == col) continue;
      r.push_back(j < col ? j : j - 1);
    }
    m.push_back(std::move(r));
  }
  return SignMatrix(rows_ - 1, cols_ - 1, std::move(m));
}

int64_t CountsVector::sum() const {
  return std::accumulate(entries.begin(), entries.end(), int64_t{0});
}

CountsVector make_counts(int64_t ambient_cols, std::vector<int64_t> entries) {
  if (ambient_cols < 0) throw InputError("ambient column count must be nonnegative");
  int64_t total = 0;
  for (int64_t e : entries) {
    if (e < 0) throw InputError("counts must be nonnegative");
    total += e;
  }
  if (total > ambient_cols)
    throw InputError("counts sum " + std::to_string(total) + " exceeds ambient n=" +
                     std::to_string(ambient_cols));
  return CountsVector{ambient_cols, std::move(entries)};
}

SignMatrix make_block_matrix(const CountsVector& counts) {
  if (counts.size() < 1) throw InputError("block matrix needs at least one row");
  if (counts.sum() > counts.ambient_cols) throw InputError("counts sum exceeds ambient n");
  std::vector<std::vector<int64_t>> minus(static_cast<size_t>(counts.size()));
  int64_t next = counts.plus_columns();
  for (int64_t i = 0; i < counts.size(); ++i) {
    for (int64_t t = 0; t < counts.entries[static_cast<size_t>(i)]; ++t)
      minus[static_cast<size_t>(i)].push_back(next++);
  }
  return SignMatrix(counts.size(), counts.ambient_cols, std::move(minus));
}

SignMatrix concat_rows(const SignMatrix& top, const SignMatrix& bottom) {
  if (top.cols() != bottom.cols())
    throw InputError("row concatenation needs equal column counts, got " +
                     std::to_string(top.cols()) + " and " + std::to_string(bottom.cols()));
  std::vector<std::vector<int64_t>> m;
  m.reserve(static_cast<size_t>(top.rows() + bottom.rows()));
  for (int64_t i = 0; i < top.rows(); ++i) m.push_back(top.minus_positions(i));
  for (int64_t i = 0; i < bottom.rows(); ++i) m.push_back(bottom.minus_positions(i));
  return SignMatrix(top.rows() + bottom.rows(), top.cols(), std::move(m));
}

namespace {

int64_t parse_dim(const std::string& token, const char* what) {
  if (token.empty()) throw InputError(std::string("missing ") + what + " in matrix header");
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError(std::string("malformed ") + what + " in matrix header: '" + token + "'");
  }
  if (token.size() > 9) throw InputError(std::string(what) + " in matrix header is too large");
  return std::stoll(token);
}

}  // namespace

SignMatrix parse_matrix(const std::string& text) {
  size_t eol = text.find('\n');
  if (eol == std::string::npos) throw InputError("matrix header line is not newline-terminated");
  const std::string header = text.substr(0, eol);
  size_t space = header.find(' ');
  if (space == std::string::npos || header.find(' ', space + 1) != std::string::npos)
    throw InputError("matrix header must be 'k n' with a single space");
  int64_t k = parse_dim(header.substr(0, space), "row count");
  int64_t n = parse_dim(header.substr(space + 1), "column count");
  if (k < 1) throw InputError("matrix needs at least one row");
  if (k > n) throw InputError("matrix needs k <= n, got k=" + std::to_string(k) +
                              " n=" + std::to_string(n));

  std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
  size_t pos = eol + 1;
  for (int64_t i = 0; i < k; ++i) {
    size_t row_end = text.find('\n', pos);
    if (row_end == std::string::npos) throw InputError("matrix row " + std::to_string(i + 1) +
                                                       " is missing or not newline-terminated");
    if (static_cast<int64_t>(row_end - pos) != n)
      throw InputError("matrix row " + std::to_string(i + 1) + " has " +
                       std::to_string(row_end - pos) + " entries, expected " + std::to_string(n));
    for (int64_t j = 0; j < n; ++j) {
      char c = text[pos + static_cast<size_t>(j)];
      if (c == '-') minus[static_cast<size_t>(i)].push_back(j);
      else if (c != '+') throw InputError(std::string("illegal matrix character '") + c + "'");
    }
    pos = row_end + 1;
  }
  if (pos != text.size()) throw InputError("trailing content after matrix rows");
  return SignMatrix(k, n, std::move(minus));
}

std::string render_matrix(const SignMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int64_t i = 0; i < m.rows(); ++i) {
    const auto& minus = m.minus_positions(i);
    size_t next = 0;
    for (int64_t j = 0; j < m.cols(); ++j) {
      if (next < minus.size() && minus[next] == j) {
        out << '-';
        ++next;
      } else {
        out << '+';
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace permrange
