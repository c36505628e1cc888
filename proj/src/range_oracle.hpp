#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "sign_matrix.hpp"

namespace permrange::range_oracle {

inline constexpr uint64_t kNaiveBudgetDefault = uint64_t{1} << 28;      // matrices visited
inline constexpr uint64_t kCanonicalBudgetDefault = uint64_t{1} << 24;  // column multisets

enum class EnumMode { kNaive, kCanonical };

struct RangeReport {
  int64_t k = 0;
  int64_t n = 0;
  std::vector<BigInt> values;  // sorted distinct
  uint64_t r = 0;              // values.size()
  std::optional<BigInt> min_positive;
  // Largest power of two dividing every nonzero value, and its exponent.
  std::optional<BigInt> two_adic_content;
  std::optional<int64_t> two_adic_valuation;
  uint64_t matrices_visited = 0;
  uint64_t symmetry_classes = 0;  // canonical mode only
  double wall_ms = 0.0;
  // First witness per distinct value, in a fixed deterministic order.
  std::vector<std::pair<BigInt, SignMatrix>> witnesses;
};

// Exhaustive range of the permanent over all k x n sign matrices.
// Naive mode walks all 2^(kn) matrices. Canonical mode walks one matrix per
// sorted column multiset, quotients by negating the first row, and closes the
// value set under negation; both modes produce the same set.
RangeReport enumerate_range(int64_t k, int64_t n, EnumMode mode, uint64_t budget = 0,
                            int workers = 1);

// Injection counts classified by the set of rows where the injection hits a
// -1. exact[mask] counts injections hitting exactly that row set; at_least
// aggregates supersets. Verifies the inclusion-exclusion identities, and the
// product formula when every column of b has at most one -1.
struct GammaCounts {
  int64_t k = 0;
  int64_t n = 0;
  std::vector<uint64_t> exact;
  std::vector<uint64_t> at_least;
  bool product_formula_applicable = false;
  bool product_formula_ok = false;
  bool mobius_ok = false;
  bool permanent_identity_ok = false;
};

GammaCounts count_gamma(const SignMatrix& b, uint64_t budget = 0);

BigInt krauter_conjecture_value(int64_t n);

struct MinPositiveReport {
  int64_t n = 0;
  BigInt min_positive;
  BigInt conjectured;
  bool matches = false;
  uint64_t classes = 0;
  double wall_ms = 0.0;
};

// Minimum positive permanent over all n x n sign matrices, against the
// conjectured power of two. n <= 4 runs freely; n = 5 only when allow_long.
MinPositiveReport min_positive_permanent(int64_t n, bool allow_long = false, uint64_t budget = 0);

struct UpperTriangularReport {
  int64_t n = 0;
  std::vector<BigInt> values;       // range with -1 entries confined to or above the diagonal
  std::vector<BigInt> full_values;  // unrestricted range
  bool equal = false;
};

UpperTriangularReport upper_triangular_range(int64_t n, uint64_t budget = 0);

struct SubsetCheckReport {
  int64_t k = 0;
  int64_t n = 0;
  bool subset_ok = false;       // predicted construction values all lie in the full range
  uint64_t construction_values = 0;
  uint64_t range_values = 0;
  double coverage = 0.0;        // construction_values / range_values
};

// Predicts { per(a * B) } from the progression basis and checks it against
// the enumerated range of (k+1) x n matrices.
SubsetCheckReport construction_subset_check(int64_t k, int64_t n, uint64_t budget = 0);

struct MonotonicityReport {
  int64_t k = 0;
  int64_t n = 0;
  uint64_t r_low = 0;   // r_{k,n}
  uint64_t r_high = 0;  // r_{k+1,n}
  bool monotone_ok = false;
  bool padding_ok = false;
  uint64_t padding_samples = 0;
};

// r_{k,n} <= r_{k+1,n} by enumeration, plus the all-plus padding identity
// per(A * J) = per(A) (n-k)_(l-k) on seeded random samples.
MonotonicityReport monotonicity_check(int64_t k, int64_t n, uint64_t budget = 0,
                                      uint64_t seed = 1, uint64_t samples = 100);

}  // namespace permrange::range_oracle
