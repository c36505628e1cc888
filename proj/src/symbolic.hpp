#pragma once

#include <cstdint>
#include <vector>

#include "numeric.hpp"
#include "rational_poly.hpp"
#include "sign_matrix.hpp"

namespace permrange::symbolic {

// Weight of e_ell in the closed-form permanent of a block sign matrix with k
// rows: (-2)^ell (n - ell)_(k - ell), as a polynomial in the ambient size n.
RationalPoly sym_weight_poly(int64_t ell, int64_t k);

// The same weight evaluated at n - 1, i.e. (-2)^ell (n - 1 - ell)_(k - ell);
// this is the ambient size seen by single-column minors.
RationalPoly sym_weight_poly_shifted(int64_t ell, int64_t k);

// Exact permanent of the block matrix with the given counts:
// sum_ell (-2)^ell (n - ell)_(k - ell) e_ell(n_1..n_k). Handles k = 0 (empty
// matrix, permanent 1). Must agree with every permanent engine.
BigInt block_permanent_closed_form(const CountsVector& counts);

// Throws unless mu is a list of k positive, pairwise distinct rationals
// summing to one.
void validate_mu(const std::vector<Rational>& mu);

// Minor polynomials: entry i is the permanent of the block matrix on ambient
// size n - 1 whose counts are mu_j (n - n0) with the ith count decremented,
// viewed as a polynomial in n of degree <= k.
std::vector<RationalPoly> minor_polys(int64_t k, const std::vector<Rational>& mu, int64_t n0);

// Scaled minor differences (first minus ith, divided by mu_1 - mu_i) for
// i = 2..k, built from the telescoped closed form
//   sum_{ell=2..k} weight_ell(n-1) (n - n0)^(ell-1) e_{ell-2}(mu minus 1, i).
// Must equal the direct subtraction route from minor_polys.
std::vector<RationalPoly> scaled_diff_polys(int64_t k, const std::vector<Rational>& mu, int64_t n0);

// (k-1) x (k-1) matrix whose row i-2, column j holds the coefficient of
// n^(k-j-1) in the ith scaled difference polynomial.
RationalMatrix diff_coeff_matrix(int64_t k, const std::vector<Rational>& mu, int64_t n0);

// Left factor of the outer-product decomposition: entry i-2 is
// e_{ell-2}(mu with entries 1 and i removed), i = 2..k.
std::vector<Rational> left_factor_vector(int64_t k, const std::vector<Rational>& mu, int64_t ell);

// Right factor: entry j is (-1)^j e_j of the multiset holding ell-1 copies of
// n0 together with ell+a, ell+a+1, ..., k. Length k - a, entry 0 is always 1.
// Requires a >= 1 and 2 <= ell <= k + 1 - a.
std::vector<Rational> right_factor_vector(int64_t k, int64_t n0, int64_t ell, int64_t a);

RationalMatrix left_factor_stack(int64_t k, const std::vector<Rational>& mu);   // rows ell = 2..k
RationalMatrix right_factor_stack(int64_t k, int64_t n0);                       // rows ell = 2..k, a = 1

// Independent route to the coefficient matrix:
// sum_{ell=2..k} (-2)^ell left_ell right_ell^T.
RationalMatrix outer_product_matrix(int64_t k, const std::vector<Rational>& mu, int64_t n0);

// Expands (n - n0)^(ell-1) (n - ell - 1)(n - ell - 2)...(n - k) both by direct
// multiplication and as sum_j (-1)^j n^(k-1-j) e_j(n0 x (ell-1), ell+1..k),
// asserts the two agree, and returns the polynomial.
RationalPoly shifted_product_expansion(int64_t k, int64_t ell, int64_t n0);

struct SpanDimCase {
  int64_t a = 0;
  int64_t dim = 0;          // dim span { right factors, ell = 2..k+1-a }
  int64_t lower_bound = 0;  // k-1-a when a <= n0-2, else k-a
  bool ok = false;
};

// Everything the rank argument certifies for one (k, mu, n0): the rank of the
// scaled differences and of the minor polynomials themselves, a witness set
// of k-2 indices with independent minor polynomials, the outer-product
// decomposition check, the right-factor recursion, and the per-family span
// dimensions against their case bounds. For k <= 2 the k-2 bound is vacuous
// and reported as such.
struct RankCertificate {
  int64_t k = 0;
  int64_t n0 = 0;
  bool vacuous = false;
  int64_t required = 0;           // max(k-2, 0)
  int64_t rank_scaled_diffs = 0;  // rank of the k-1 scaled differences
  int64_t rank_minor_polys = 0;
  int64_t rank_coeff_matrix = 0;
  int64_t rank_right_stack = 0;
  bool left_stack_invertible = false;
  bool rank_ok = false;            // rank_scaled_diffs >= required
  std::vector<int64_t> witness;    // 1-based indices with independent minors
  bool witness_ok = false;
  bool diff_routes_agree = false;  // closed form vs subtraction
  bool decomposition_ok = false;   // coeff matrix vs outer products
  bool recursion_ok = false;       // right-factor recursion identity
  std::vector<SpanDimCase> span_dims;
  bool span_dims_ok = false;
  bool passed = false;
};

RankCertificate rank_certificate(int64_t k, const std::vector<Rational>& mu, int64_t n0);

struct DifferencePolyReport {
  RationalPoly poly;            // sum_i (y_i - x_i) scale * minor_i, integer coefficients
  int64_t degree = -1;
  std::vector<BigInt> betas;    // coefficients beta_0..beta_degree
  bool coeff_bound_ok = false;  // every |beta_j| <= n/2
  BigInt value_at_n;
  bool value_nonzero = false;
};

// The integer polynomial separating two lattice points of the value box;
// scale is the denominator-clearing factor (d_k^k in the standard pipeline).
DifferencePolyReport difference_poly(const std::vector<int64_t>& x, const std::vector<int64_t>& y,
                                     const std::vector<Rational>& mu, int64_t n0,
                                     const BigInt& scale, int64_t n);

}  // namespace permrange::symbolic
