#include "permanent.hpp"

#include <bit>
#include <vector>

namespace permrange {

namespace {

BigInt bigint_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<uint64_t>(u >> 64);
  r <<= 64;
  r |= static_cast<uint64_t>(u);
  return neg ? -r : r;
}

uint64_t effective(uint64_t budget, uint64_t fallback) { return budget == 0 ? fallback : budget; }

// Signed count of injections, +1 terms minus -1 terms, over <= 64 columns.
int64_t injection_count_masked(const SignMatrix& m, const std::vector<uint64_t>& row_masks,
                               int64_t row, uint64_t used, int sign) {
  if (row == m.rows()) return sign;
  int64_t total = 0;
  for (int64_t j = 0; j < m.cols(); ++j) {
    uint64_t bit = uint64_t{1} << j;
    if (used & bit) continue;
    int s = (row_masks[static_cast<size_t>(row)] & bit) ? -sign : sign;
    total += injection_count_masked(m, row_masks, row + 1, used | bit, s);
  }
  return total;
}

// Fallback for matrices wider than 64 columns (only small k is feasible there).
int64_t injection_count_wide(const SignMatrix& m, std::vector<uint8_t>& used, int64_t row, int sign) {
  if (row == m.rows()) return sign;
  int64_t total = 0;
  for (int64_t j = 0; j < m.cols(); ++j) {
    if (used[static_cast<size_t>(j)]) continue;
    used[static_cast<size_t>(j)] = 1;
    total += injection_count_wide(m, used, row + 1, m.entry(row, j) < 0 ? -sign : sign);
    used[static_cast<size_t>(j)] = 0;
  }
  return total;
}

template <class Value>
BigInt bitmask_dp_impl(const SignMatrix& m) {
  const int64_t k = m.rows();
  const int64_t n = m.cols();
  const size_t table = size_t{1} << n;
  // dp[mask] = permanent of the first popcount(mask) rows against exactly the
  // columns in mask; masks with more than k bits are never read.
  std::vector<Value> dp(table, Value(0));
  dp[0] = Value(1);
  std::vector<uint64_t> row_masks(static_cast<size_t>(k));
  for (int64_t i = 0; i < k; ++i) row_masks[static_cast<size_t>(i)] = m.row_mask(i);
  for (uint64_t mask = 1; mask < table; ++mask) {
    int row = std::popcount(mask) - 1;
    if (row >= k) continue;
    Value acc(0);
    uint64_t rest = mask;
    while (rest != 0) {
      uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      const Value& prev = dp[mask ^ bit];
      if (row_masks[static_cast<size_t>(row)] & bit) acc -= prev;
      else acc += prev;
    }
    dp[mask] = acc;
  }
  BigInt result = 0;
  for (uint64_t mask = 0; mask < table; ++mask) {
    if (std::popcount(mask) == k) result += BigInt(dp[mask]);
  }
  return result;
}

}  // namespace

BigInt permanent_injection_sum(const SignMatrix& m, uint64_t budget) {
  const uint64_t cap = effective(budget, kInjectionBudgetDefault);
  BigInt terms = falling_factorial(m.cols(), m.rows());
  if (terms > cap)
    throw BudgetError("injection sum too large for oracle: (n)_k = " + terms.str() +
                      " exceeds budget " + std::to_string(cap));
  if (m.cols() <= 64) {
    std::vector<uint64_t> row_masks(static_cast<size_t>(m.rows()));
    for (int64_t i = 0; i < m.rows(); ++i) row_masks[static_cast<size_t>(i)] = m.row_mask(i);
    return BigInt(injection_count_masked(m, row_masks, 0, 0, 1));
  }
  std::vector<uint8_t> used(static_cast<size_t>(m.cols()), 0);
  return BigInt(injection_count_wide(m, used, 0, 1));
}

BigInt permanent_bitmask_dp(const SignMatrix& m, uint64_t budget) {
  const int64_t n = m.cols();
  if (n > 26) throw BudgetError("subset-table engine is capped at n <= 26, got n=" + std::to_string(n));
  const uint64_t cap = effective(budget, kSubsetTableBudgetDefault);
  if ((uint64_t{1} << n) > cap)
    throw BudgetError("subset table of 2^" + std::to_string(n) + " entries exceeds budget " +
                      std::to_string(cap));
  // Partial permanents of i rows are bounded by i!, so 64-bit values suffice
  // through k = 20.
  if (m.rows() <= 20) return bitmask_dp_impl<int64_t>(m);
  return bitmask_dp_impl<BigInt>(m);
}

BigInt permanent_ryser(const SignMatrix& m, uint64_t budget) {
  const int64_t n = m.cols();
  if (m.rows() != n) throw InputError("ryser engine requires a square matrix");
  if (n > 32) throw BudgetError("ryser engine is capped at n <= 32, got n=" + std::to_string(n));
  const uint64_t cap = effective(budget, kRyserBudgetDefault);
  if (n < 64 && (uint64_t{1} << n) > cap)
    throw BudgetError("ryser subset count 2^" + std::to_string(n) + " exceeds budget " +
                      std::to_string(cap));

  std::vector<std::vector<int>> col_entries(static_cast<size_t>(n),
                                            std::vector<int>(static_cast<size_t>(n)));
  for (int64_t j = 0; j < n; ++j)
    for (int64_t i = 0; i < n; ++i) col_entries[static_cast<size_t>(j)][static_cast<size_t>(i)] = m.entry(i, j);

  std::vector<int64_t> row_sums(static_cast<size_t>(n), 0);
  BigInt total = 0;
  __int128 acc = 0;
  const __int128 flush_limit = static_cast<__int128>(1) << 100;
  const bool small = n <= 25;  // per-subset products fit __int128 up to 25^25
  uint64_t prev_gray = 0;
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    uint64_t gray = s ^ (s >> 1);
    uint64_t changed = gray ^ prev_gray;
    prev_gray = gray;
    int64_t j = std::countr_zero(changed);
    const int sign_in = (gray & changed) ? +1 : -1;
    const auto& col = col_entries[static_cast<size_t>(j)];
    bool zero = false;
    if (small) {
      __int128 prod = 1;
      for (int64_t i = 0; i < n; ++i) {
        row_sums[static_cast<size_t>(i)] += sign_in * col[static_cast<size_t>(i)];
        prod *= row_sums[static_cast<size_t>(i)];
      }
      if (prod != 0) {
        acc += (std::popcount(gray) & 1) ? -prod : prod;
        if (acc > flush_limit || acc < -flush_limit) {
          total += bigint_from_i128(acc);
          acc = 0;
        }
      }
    } else {
      BigInt prod = 1;
      for (int64_t i = 0; i < n; ++i) {
        row_sums[static_cast<size_t>(i)] += sign_in * col[static_cast<size_t>(i)];
        if (row_sums[static_cast<size_t>(i)] == 0) zero = true;
      }
      if (!zero) {
        for (int64_t i = 0; i < n; ++i) prod *= row_sums[static_cast<size_t>(i)];
        if (std::popcount(gray) & 1) total -= prod;
        else total += prod;
      }
    }
  }
  total += bigint_from_i128(acc);
  if (n & 1) total = -total;
  return total;
}

BigInt permanent_auto(const SignMatrix& m, uint64_t budget, std::string* engine_used) {
  const BigInt terms = falling_factorial(m.cols(), m.rows());
  if (terms <= effective(budget, kInjectionBudgetDefault)) {
    if (engine_used) *engine_used = "injection-sum";
    return permanent_injection_sum(m, budget);
  }
  if (m.cols() <= 26 && (uint64_t{1} << m.cols()) <= effective(budget, kSubsetTableBudgetDefault)) {
    if (engine_used) *engine_used = "bitmask-dp";
    return permanent_bitmask_dp(m, budget);
  }
  if (m.rows() == m.cols() && m.cols() <= 32 &&
      (uint64_t{1} << m.cols()) <= effective(budget, kRyserBudgetDefault)) {
    if (engine_used) *engine_used = "ryser";
    return permanent_ryser(m, budget);
  }
  throw BudgetError("matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    " is too large for every engine under the configured budget");
}

BigInt permanent_minor(const SignMatrix& m, int64_t row, int64_t col, uint64_t budget) {
  if (m.rows() < 2) throw InputError("permanent minor requires at least two rows");
  return permanent_auto(m.submatrix_minor(row, col), budget);
}

BigInt laplace_expand(const SignMatrix& m, int64_t row, uint64_t budget) {
  if (m.rows() < 2) throw InputError("laplace expansion requires at least two rows");
  if (row < 0 || row >= m.rows()) throw InputError("laplace row index out of range");
  BigInt total = 0;
  for (int64_t j = 0; j < m.cols(); ++j) {
    BigInt minor = permanent_minor(m, row, j, budget);
    if (m.entry(row, j) < 0) total -= minor;
    else total += minor;
  }
  return total;
}

}  // namespace permrange
