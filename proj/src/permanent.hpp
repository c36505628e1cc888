#pragma once

#include <cstdint>
#include <string>

#include "numeric.hpp"
#include "sign_matrix.hpp"

namespace permrange {

// Default work budgets. A computation that would exceed its budget is refused
// with a BudgetError before any work is done; passing budget = 0 selects the
// default, any other value overrides it.
inline constexpr uint64_t kInjectionBudgetDefault = 100'000'000;       // (n)_k terms
inline constexpr uint64_t kSubsetTableBudgetDefault = uint64_t{1} << 24;  // dp table entries
inline constexpr uint64_t kRyserBudgetDefault = uint64_t{1} << 28;        // subsets visited

// Reference engine: literal sum over all (n)_k injections of rows into
// columns. Slow but direct; every other engine is checked against it.
BigInt permanent_injection_sum(const SignMatrix& m, uint64_t budget = 0);

// Row-by-row expansion over used-column subsets. Needs a 2^n table, n <= 26.
BigInt permanent_bitmask_dp(const SignMatrix& m, uint64_t budget = 0);

// Inclusion-exclusion over column subsets with Gray-code updates. Square only.
BigInt permanent_ryser(const SignMatrix& m, uint64_t budget = 0);

// Picks an engine by shape: injection sum while (n)_k stays within budget,
// then the subset table while it fits, then Ryser for square matrices.
// Reports the chosen engine through engine_used when non-null.
BigInt permanent_auto(const SignMatrix& m, uint64_t budget = 0, std::string* engine_used = nullptr);

// Permanent of the submatrix with one row and one column removed.
// rows() == 1 is rejected (the empty minor is not represented); callers in
// need of that case use the closed form with an empty counts vector.
BigInt permanent_minor(const SignMatrix& m, int64_t row, int64_t col, uint64_t budget = 0);

// sum_j m(row, j) * permanent_minor(m, row, j); equals the permanent itself.
BigInt laplace_expand(const SignMatrix& m, int64_t row, uint64_t budget = 0);

}  // namespace permrange
