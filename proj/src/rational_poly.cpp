#include "rational_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace permrange {

RationalPoly::RationalPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

RationalPoly RationalPoly::variable() { return RationalPoly(std::vector<Rational>{0, 1}); }

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int64_t i) const {
  if (i < 0 || i >= static_cast<int64_t>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt RationalPoly::eval_int(const BigInt& x) const {
  Rational v = eval(Rational(x));
  if (denominator(v) != 1)
    throw InputError("polynomial evaluation expected an integer, got " + to_decimal(v));
  return numerator(v);
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c = -c;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return RationalPoly();
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= s;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator/(const Rational& s) const {
  if (s == 0) throw InputError("division of a polynomial by zero");
  return *this * (1 / s);
}

std::string RationalPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int64_t i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || i == 0) out << to_decimal(a);
    if (i > 0) {
      if (a != 1) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

RationalPoly falling_factorial_poly(int64_t shift, int64_t length) {
  if (length < 0) throw InputError("falling factorial length must be nonnegative");
  RationalPoly p(1);
  for (int64_t t = 0; t < length; ++t)
    p *= RationalPoly(std::vector<Rational>{Rational(-(shift + t)), Rational(1)});
  return p;
}

RationalPoly pow_poly(const RationalPoly& base, int64_t exp) {
  if (exp < 0) throw InputError("polynomial power must be nonnegative");
  RationalPoly r(1);
  for (int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

Rational elementary_symmetric(int64_t ell, const std::vector<Rational>& values) {
  if (ell < 0) throw InputError("elementary symmetric index must be nonnegative");
  if (ell > static_cast<int64_t>(values.size())) return Rational(0);
  return elementary_symmetric_all(values)[static_cast<size_t>(ell)];
}

RationalMatrix::RationalMatrix(int64_t rows, int64_t cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), Rational(0)) {
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
}

namespace {

// Exact Gaussian elimination; pivots on the largest numerator magnitude in
// the column. Returns rank; tracks the determinant when requested.
int64_t eliminate(RationalMatrix m, Rational* det) {
  int64_t rank = 0;
  if (det) *det = 1;
  for (int64_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int64_t pivot = -1;
    BigInt best = 0;
    for (int64_t i = rank; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      BigInt mag = abs(numerator(m.at(i, col)));
      if (pivot < 0 || mag > best) {
        pivot = i;
        best = mag;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int64_t j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
      if (det) *det = -*det;
    }
    const Rational lead = m.at(rank, col);
    if (det) *det *= lead;
    for (int64_t i = rank + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / lead;
      for (int64_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  if (det && rank < std::min(m.rows(), m.cols())) *det = 0;
  return rank;
}

}  // namespace

int64_t RationalMatrix::rank() const { return eliminate(*this, nullptr); }

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant requires a square matrix");
  if (rows_ == 0) return Rational(1);
  Rational det;
  int64_t rank = eliminate(*this, &det);
  return rank == rows_ ? det : Rational(0);
}

RationalMatrix coefficient_matrix(const std::vector<RationalPoly>& polys) {
  int64_t maxdeg = 0;
  for (const auto& p : polys) maxdeg = std::max(maxdeg, p.degree());
  RationalMatrix m(static_cast<int64_t>(polys.size()), maxdeg + 1);
  for (int64_t i = 0; i < m.rows(); ++i)
    for (int64_t j = 0; j <= maxdeg; ++j) m.at(i, j) = polys[static_cast<size_t>(i)].coeff(j);
  return m;
}

int64_t rank_over_q(const RationalMatrix& m) { return m.rank(); }

int64_t rank_over_q(const std::vector<RationalPoly>& polys) {
  if (polys.empty()) return 0;
  return coefficient_matrix(polys).rank();
}

bool RowSpace::try_add(std::vector<Rational> row) {
  if (static_cast<int64_t>(row.size()) != cols_) throw InputError("row width mismatch");
  for (size_t b = 0; b < basis_.size(); ++b) {
    const Rational& lead = row[static_cast<size_t>(pivots_[b])];
    if (lead == 0) continue;
    Rational f = lead;  // basis rows are normalized to leading 1
    for (int64_t j = 0; j < cols_; ++j) row[static_cast<size_t>(j)] -= f * basis_[b][static_cast<size_t>(j)];
  }
  int64_t pivot = -1;
  for (int64_t j = 0; j < cols_; ++j) {
    if (row[static_cast<size_t>(j)] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  Rational lead = row[static_cast<size_t>(pivot)];
  for (auto& v : row) v /= lead;
  basis_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace permrange
