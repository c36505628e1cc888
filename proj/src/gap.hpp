#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "numeric.hpp"
#include "sign_matrix.hpp"
#include "symbolic.hpp"

namespace permrange::gap {

inline constexpr uint64_t kBoxBudgetDefault = uint64_t{1} << 24;  // lattice points

// The standard weight choice: mu_i = i / (k(k+1)/2).
std::vector<Rational> choose_mu(int64_t k);

// Least common multiple of the reduced denominators.
int64_t denominator_lcm(const std::vector<Rational>& mu);

struct DerivedCounts {
  int64_t n0 = 0;
  CountsVector counts;
};

// n0 = n mod d_k and counts_i = mu_i (n - n0); requires n >= d_k so that
// every count is a positive integer.
DerivedCounts derive_counts(int64_t k, int64_t n, const std::vector<Rational>& mu);

// Basis integers: entry i is the permanent of the block matrix on ambient
// n - 1 with the ith count decremented. Requires every count >= 1.
std::vector<BigInt> minor_basis(int64_t k, int64_t n, const CountsVector& counts);

// Minor obtained by deleting one all-plus column instead (counts unchanged,
// ambient n - 1). Only meaningful when the matrix has all-plus columns.
BigInt plus_block_minor(int64_t n, const CountsVector& counts);

// A generalized arithmetic progression: the projection of an integer box,
// { offset + sum_i basis_i x_i : 0 <= x_i < limits_i }. Its size is the
// product of the limits; it is proper when it realizes size many values.
struct GapDescriptor {
  BigInt offset;
  std::vector<BigInt> basis;
  std::vector<int64_t> limits;  // exclusive upper bounds

  BigInt size() const;
};

struct GapValueSet {
  std::vector<BigInt> values;  // sorted distinct
  BigInt box_size;             // descriptor size
  uint64_t points = 0;

  bool proper() const { return BigInt(values.size()) == box_size; }
};

GapValueSet gap_values(const GapDescriptor& descriptor, uint64_t budget = 0, int workers = 1);

// Distinct values of { sum_i basis_i x_i : 0 <= x_i <= counts_i }; the
// zero-offset progression with limits counts_i + 1.
GapValueSet gamma_values(const std::vector<BigInt>& basis, const std::vector<int64_t>& counts,
                         uint64_t budget = 0, int workers = 1);

struct TransformCheck {
  BigInt indicator_row_value;  // permanent with the 0/1 row, via multilinearity
  BigInt all_plus_row_value;
  BigInt sign_row_value;
  bool ok = false;  // 2 * indicator == all_plus - sign
};

// Checks that replacing the sign row a by the indicator row (1 - a)/2 halves
// the permanent difference exactly.
TransformCheck affine_transform_check(const std::vector<int>& a, const SignMatrix& b,
                                      uint64_t budget = 0);

struct MkResult {
  BigInt value;         // max over n0 of the total scaled coefficient magnitude
  BigInt closed_bound;  // (16 k^5)^k
  bool within_bound = false;
  int64_t argmax_n0 = 0;
};

MkResult compute_mk(int64_t k, const std::vector<Rational>& mu);

// The full constants pipeline for one k with the standard mu.
struct ConstructionParams {
  int64_t k = 0;
  std::vector<Rational> mu;
  int64_t d_k = 0;
  BigInt scale;          // d_k^k, clears every minor-polynomial denominator
  BigInt m_k;
  BigInt m_k_bound;      // (16 k^5)^k
  bool m_k_within_bound = false;
  Rational delta_k;      // min( 1/(4 M_k), mu_1..mu_k )
  Rational eps_k;        // delta_k^(k-2)
  Rational delta_closed_lower;  // 1 / (4 (16 k^5)^k)
  bool delta_within_bound = false;
};

ConstructionParams constants(int64_t k);

struct BoxCertificate {
  bool vacuous = false;          // default side floor(delta_k n) was empty
  int64_t minimal_n = 0;         // smallest n making the default box nonempty
  bool default_side = false;
  int64_t side = 0;
  std::vector<int64_t> witness;  // 1-based coordinate indices spanning the box
  BigInt point_count;            // (side+1)^|witness|
  bool proper = false;           // all box values pairwise distinct
  std::optional<std::pair<std::vector<int64_t>, std::vector<int64_t>>> collision;
  BigInt collision_value;
  Rational eps_bound;            // eps_k n^(k-2)
  bool meets_eps_bound = false;  // point_count >= eps_bound
};

// Enumerates sum_{i in witness} basis_i x_i over the box [0..side]^|witness|
// and certifies that all values are pairwise distinct. side = -1 selects the
// default floor(delta_k n).
BoxCertificate proper_subbox(const ConstructionParams& params, int64_t n,
                             const std::vector<BigInt>& basis, const std::vector<int64_t>& witness,
                             const std::vector<int64_t>& counts, int64_t side,
                             uint64_t budget = 0, int workers = 1);

// { per(a * b) : a in {+-1}^n } by direct 2^n enumeration over the column
// minors of b. Returns the sorted distinct set.
std::vector<BigInt> sign_row_value_set(const SignMatrix& b, uint64_t budget = 0);

struct LowerBoundReport {
  ConstructionParams params;
  int64_t n = 0;
  int64_t n0 = 0;
  std::vector<int64_t> counts;
  std::vector<BigInt> basis;
  symbolic::RankCertificate certificate;
  BoxCertificate box;
  BigInt certified_distinct;  // = box.point_count when proper
  Rational eps_bound;         // eps_k n^(k-2)
  bool meets_bound = false;
  // Padding by all-plus rows scales the permanent by a nonzero factor, so a
  // bound on the (k+1)-row range transfers to the square range when k+1 <= n.
  bool transfers_to_square = false;
};

LowerBoundReport lower_bound_report(int64_t k, int64_t n, int64_t side, uint64_t budget = 0,
                                    int workers = 1);

struct PlugInReport {
  int64_t n = 0;
  double eps = 0.0;
  int64_t k = 0;          // floor(eps ln n / ln ln n)
  bool vacuous = false;   // k < 3 gives a trivial exponent
  int64_t exponent = 0;   // k - 2
  Rational eps_k_lower;   // (1/(4 (16 k^5)^k))^(k-2)
  Rational bound;         // eps_k_lower * n^(k-2)
  double log10_bound = 0.0;
};

// Arithmetic-only report: the k chosen by the plug-in rule and the implied
// superpolynomial exponent; no enumeration is performed.
PlugInReport main2_plugin(int64_t n, double eps);

}  // namespace permrange::gap
