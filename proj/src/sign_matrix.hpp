#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace permrange {

// A k x n matrix with entries in {-1, +1}, k <= n. Stored as the sorted set
// of -1 column positions of each row; everything not listed is +1.
// Instances are immutable after construction and safe to share across threads.
class SignMatrix {
 public:
  SignMatrix(int64_t rows, int64_t cols, std::vector<std::vector<int64_t>> minus_positions);

  static SignMatrix all_plus(int64_t rows, int64_t cols);  // J_{k,n}

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }

  int entry(int64_t row, int64_t col) const;  // +1 or -1
  const std::vector<int64_t>& minus_positions(int64_t row) const { return minus_[static_cast<size_t>(row)]; }
  int64_t minus_count(int64_t row) const { return static_cast<int64_t>(minus_[static_cast<size_t>(row)].size()); }

  // Bit j set iff entry (row, j) is -1. Requires cols() <= 64.
  uint64_t row_mask(int64_t row) const;

  SignMatrix with_row_negated(int64_t row) const;
  SignMatrix without_column(int64_t col) const;
  // Drops one row and one column; requires rows() >= 2.
  SignMatrix submatrix_minor(int64_t row, int64_t col) const;

  bool operator==(const SignMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && minus_ == other.minus_;
  }

 private:
  int64_t rows_;
  int64_t cols_;
  std::vector<std::vector<int64_t>> minus_;
};

// Per-row -1 multiplicities (n_1, ..., n_k) inside an ambient column count n.
// Entries are nonnegative and sum to at most n; the n - sum leftover columns
// are all-plus.
struct CountsVector {
  int64_t ambient_cols = 0;
  std::vector<int64_t> entries;

  int64_t size() const { return static_cast<int64_t>(entries.size()); }
  int64_t sum() const;
  int64_t plus_columns() const { return ambient_cols - sum(); }  // n_0
};

CountsVector make_counts(int64_t ambient_cols, std::vector<int64_t> entries);

// Canonical layout for the one-minus-per-column family: the first n_0 columns
// are all-plus, then n_1 columns carrying -1 in row 0 only, then n_2 columns
// for row 1, and so on. Row i ends up with exactly entries[i] minus entries
// and no column holds more than one.
SignMatrix make_block_matrix(const CountsVector& counts);

SignMatrix concat_rows(const SignMatrix& top, const SignMatrix& bottom);

// Text format, bit-exact: "k n\n" followed by k rows of exactly n characters
// from {+,-}, each newline-terminated.
SignMatrix parse_matrix(const std::string& text);
std::string render_matrix(const SignMatrix& m);

}  // namespace permrange
