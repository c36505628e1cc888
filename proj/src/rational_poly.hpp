#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace permrange {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial has an empty coefficient vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(int value) : RationalPoly(Rational(value)) {}  // NOLINT: ring constant
  RationalPoly(const Rational& constant);                     // NOLINT: ring constant
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }  // -1 when zero
  Rational coeff(int64_t i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  // Evaluation that must land on an integer; throws otherwise.
  BigInt eval_int(const BigInt& x) const;

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
  RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
  RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }
  RationalPoly operator*(const Rational& s) const;
  RationalPoly operator/(const Rational& s) const;
  bool operator==(const RationalPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string str(const std::string& var = "n") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// (x - shift)(x - shift - 1) ... (x - shift - length + 1); 1 when length = 0.
RationalPoly falling_factorial_poly(int64_t shift, int64_t length);

RationalPoly pow_poly(const RationalPoly& base, int64_t exp);

// All elementary symmetric values e_0..e_m of xs in one pass of the product
// recurrence prod (t + x_i); works over any commutative ring with int
// constants (Rational, BigInt, RationalPoly).
template <class T>
std::vector<T> elementary_symmetric_all(const std::vector<T>& xs) {
  std::vector<T> e(xs.size() + 1, T(0));
  e[0] = T(1);
  size_t filled = 0;
  for (const T& x : xs) {
    ++filled;
    for (size_t j = filled; j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

// e_ell of the values; 0 when ell exceeds the count.
Rational elementary_symmetric(int64_t ell, const std::vector<Rational>& values);

// Dense rectangular matrix over the rationals with exact elimination.
class RationalMatrix {
 public:
  RationalMatrix(int64_t rows, int64_t cols);

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  Rational& at(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const Rational& at(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

  int64_t rank() const;
  Rational determinant() const;  // square only

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int64_t rows_;
  int64_t cols_;
  std::vector<Rational> data_;
};

// Rows are polynomials, columns are monomials x^0..x^maxdeg.
RationalMatrix coefficient_matrix(const std::vector<RationalPoly>& polys);

int64_t rank_over_q(const RationalMatrix& m);
int64_t rank_over_q(const std::vector<RationalPoly>& polys);

// Incremental exact row space; accepts a row iff it enlarges the span.
class RowSpace {
 public:
  explicit RowSpace(int64_t cols) : cols_(cols) {}
  bool try_add(std::vector<Rational> row);
  int64_t rank() const { return static_cast<int64_t>(basis_.size()); }

 private:
  int64_t cols_;
  std::vector<std::vector<Rational>> basis_;  // row echelon, leading entry 1
  std::vector<int64_t> pivots_;
};

}  // namespace permrange
