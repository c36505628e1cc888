#include "range_oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "gap.hpp"
#include "parallel.hpp"
#include "permanent.hpp"
#include "symbolic.hpp"

namespace permrange::range_oracle {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

SignMatrix matrix_from_code(int64_t k, int64_t n, uint64_t code) {
  std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
  for (int64_t i = 0; i < k; ++i)
    for (int64_t j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1) minus[static_cast<size_t>(i)].push_back(j);
  return SignMatrix(k, n, std::move(minus));
}

SignMatrix matrix_from_columns(int64_t k, int64_t n, const std::vector<uint32_t>& cols) {
  std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
  for (int64_t j = 0; j < n; ++j)
    for (int64_t i = 0; i < k; ++i)
      if ((cols[static_cast<size_t>(j)] >> i) & 1) minus[static_cast<size_t>(i)].push_back(j);
  return SignMatrix(k, n, std::move(minus));
}

void finish_report(RangeReport& report) {
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  report.values.clear();
  for (const auto& [value, matrix] : report.witnesses) report.values.push_back(value);
  report.r = report.values.size();
  std::optional<int64_t> two_adic;
  for (const auto& v : report.values) {
    if (v == 0) continue;
    if (!report.min_positive && v > 0) report.min_positive = v;
    const BigInt a = abs(v);
    int64_t val2 = static_cast<int64_t>(lsb(a));
    if (!two_adic || val2 < *two_adic) two_adic = val2;
  }
  report.two_adic_valuation = two_adic;
  if (two_adic) report.two_adic_content = BigInt(1) << *two_adic;
}

RangeReport enumerate_naive(int64_t k, int64_t n, uint64_t budget, int workers) {
  const uint64_t cap = budget == 0 ? kNaiveBudgetDefault : budget;
  if (k * n >= 63 || (uint64_t{1} << (k * n)) > cap)
    throw BudgetError("naive enumeration needs 2^" + std::to_string(k * n) +
                      " matrices, budget is " + std::to_string(cap));
  const uint64_t total = uint64_t{1} << (k * n);

  std::vector<std::map<BigInt, uint64_t>> partial(static_cast<size_t>(std::max(workers, 1)));
  run_partitioned(total, workers, [&](uint64_t begin, uint64_t end, int slot) {
    auto& local = partial[static_cast<size_t>(slot)];
    for (uint64_t code = begin; code < end; ++code) {
      BigInt value = permanent_auto(matrix_from_code(k, n, code));
      auto [it, inserted] = local.emplace(std::move(value), code);
      if (!inserted && code < it->second) it->second = code;
    }
  });

  std::map<BigInt, uint64_t> merged;
  for (auto& local : partial) {
    for (auto& [value, code] : local) {
      auto [it, inserted] = merged.emplace(value, code);
      if (!inserted && code < it->second) it->second = code;
    }
  }
  RangeReport report;
  report.k = k;
  report.n = n;
  report.matrices_visited = total;
  for (const auto& [value, code] : merged)
    report.witnesses.emplace_back(value, matrix_from_code(k, n, code));
  return report;
}

RangeReport enumerate_canonical(int64_t k, int64_t n, uint64_t budget) {
  if (k > 25) throw BudgetError("canonical enumeration is capped at k <= 25");
  const uint64_t cap = budget == 0 ? kCanonicalBudgetDefault : budget;
  // Number of sorted column multisets: C(2^k + n - 1, n).
  BigInt classes = 1;
  for (int64_t t = 1; t <= n; ++t) {
    classes *= (BigInt(1) << k) + n - t;
    classes /= t;
  }
  if (classes > cap)
    throw BudgetError("canonical enumeration needs " + classes.str() + " classes, budget is " +
                      std::to_string(cap));

  RangeReport report;
  report.k = k;
  report.n = n;
  report.symmetry_classes = static_cast<uint64_t>(classes);

  std::map<BigInt, SignMatrix> witnesses;
  auto record = [&](const BigInt& value, const SignMatrix& m) {
    witnesses.emplace(value, m);  // keeps the first witness in enumeration order
  };

  // Non-decreasing column sequences; negating row 0 toggles the low bit of
  // every column, and the representative is the lexicographically smaller of
  // the sorted pair. The flipped matrix contributes the negated value.
  std::vector<uint32_t> cols(static_cast<size_t>(n));
  const uint32_t col_types = uint32_t{1} << k;
  uint64_t visited = 0;
  auto rec = [&](auto&& self, int64_t pos, uint32_t min_col) -> void {
    if (pos == n) {
      std::vector<uint32_t> flipped(cols);
      for (auto& c : flipped) c ^= 1u;
      std::sort(flipped.begin(), flipped.end());
      if (flipped < cols) return;  // the flipped multiset is the representative
      SignMatrix m = matrix_from_columns(k, n, cols);
      BigInt value = permanent_auto(m);
      ++visited;
      record(value, m);
      record(-value, m.with_row_negated(0));
      return;
    }
    for (uint32_t c = min_col; c < col_types; ++c) {
      cols[static_cast<size_t>(pos)] = c;
      self(self, pos + 1, c);
    }
  };
  rec(rec, 0, 0);

  report.matrices_visited = visited;
  for (auto& [value, matrix] : witnesses) report.witnesses.emplace_back(value, matrix);
  return report;
}

}  // namespace

RangeReport enumerate_range(int64_t k, int64_t n, EnumMode mode, uint64_t budget, int workers) {
  if (k < 1 || k > n) throw InputError("range enumeration needs 1 <= k <= n");
  auto start = Clock::now();
  RangeReport report = mode == EnumMode::kNaive ? enumerate_naive(k, n, budget, workers)
                                                : enumerate_canonical(k, n, budget);
  finish_report(report);
  report.wall_ms = elapsed_ms(start);
  return report;
}

GammaCounts count_gamma(const SignMatrix& b, uint64_t budget) {
  const int64_t k = b.rows();
  const int64_t n = b.cols();
  if (k > 20) throw InputError("gamma counting is capped at k <= 20 rows");
  const uint64_t cap = budget == 0 ? kInjectionBudgetDefault : budget;
  BigInt terms = falling_factorial(n, k);
  if (terms > cap)
    throw BudgetError("gamma counting needs (n)_k = " + terms.str() + " injections, budget is " +
                      std::to_string(cap));

  GammaCounts counts;
  counts.k = k;
  counts.n = n;
  counts.exact.assign(size_t{1} << k, 0);

  if (n > 64) throw InputError("gamma counting supports at most 64 columns");
  std::vector<uint64_t> row_masks(static_cast<size_t>(k));
  for (int64_t i = 0; i < k; ++i) row_masks[static_cast<size_t>(i)] = b.row_mask(i);
  auto rec = [&](auto&& self, int64_t row, uint64_t used, uint32_t hit) -> void {
    if (row == k) {
      ++counts.exact[hit];
      return;
    }
    for (int64_t j = 0; j < n; ++j) {
      uint64_t bit = uint64_t{1} << j;
      if (used & bit) continue;
      uint32_t h = hit | ((row_masks[static_cast<size_t>(row)] & bit) ? (uint32_t{1} << row) : 0);
      self(self, row + 1, used | bit, h);
    }
  };
  rec(rec, 0, 0, 0);

  const size_t masks = size_t{1} << k;
  counts.at_least.assign(masks, 0);
  for (size_t j_set = 0; j_set < masks; ++j_set)
    for (size_t i_set = 0; i_set < masks; ++i_set)
      if ((i_set & j_set) == j_set) counts.at_least[j_set] += counts.exact[i_set];

  // per(b) = sum_I (-1)^|I| |Gamma_I|
  BigInt alternating = 0;
  for (size_t i_set = 0; i_set < masks; ++i_set) {
    if (std::popcount(i_set) & 1) alternating -= counts.exact[i_set];
    else alternating += counts.exact[i_set];
  }
  counts.permanent_identity_ok = alternating == permanent_auto(b, budget);

  // |Gamma_I| = sum_{J >= I} (-1)^|J \ I| |Gamma_>=J|
  counts.mobius_ok = true;
  for (size_t i_set = 0; i_set < masks; ++i_set) {
    int64_t recovered = 0;
    for (size_t j_set = 0; j_set < masks; ++j_set) {
      if ((i_set & j_set) != i_set) continue;
      int64_t term = static_cast<int64_t>(counts.at_least[j_set]);
      if (std::popcount(j_set & ~i_set) & 1) recovered -= term;
      else recovered += term;
    }
    if (recovered != static_cast<int64_t>(counts.exact[i_set])) counts.mobius_ok = false;
  }

  // Product formula |Gamma_>=J| = (prod_{i in J} n_i) (n - |J|)_(k - |J|)
  // holds when no column carries two minus entries.
  std::vector<int64_t> column_mult(static_cast<size_t>(n), 0);
  for (int64_t i = 0; i < k; ++i)
    for (int64_t j : b.minus_positions(i)) ++column_mult[static_cast<size_t>(j)];
  counts.product_formula_applicable =
      std::all_of(column_mult.begin(), column_mult.end(), [](int64_t c) { return c <= 1; });
  if (counts.product_formula_applicable) {
    counts.product_formula_ok = true;
    for (size_t j_set = 0; j_set < masks; ++j_set) {
      BigInt expected = 1;
      int64_t size = 0;
      for (int64_t i = 0; i < k; ++i) {
        if ((j_set >> i) & 1) {
          expected *= b.minus_count(i);
          ++size;
        }
      }
      expected *= falling_factorial(n - size, k - size);
      if (expected != counts.at_least[j_set]) counts.product_formula_ok = false;
    }
  }
  return counts;
}

BigInt krauter_conjecture_value(int64_t n) {
  if (n < 1) throw InputError("n must be positive");
  int64_t log2n = std::bit_width(static_cast<uint64_t>(n)) - 1;
  bool power_minus_one = std::has_single_bit(static_cast<uint64_t>(n) + 1);
  int64_t exponent = power_minus_one ? n - log2n - 1 : n - log2n;
  return BigInt(1) << exponent;
}

MinPositiveReport min_positive_permanent(int64_t n, bool allow_long, uint64_t budget) {
  if (n > 5) throw InputError("minimum-positive search supports n <= 5");
  if (n == 5 && !allow_long)
    throw InputError("n = 5 takes minutes; pass the long-run flag to enable it");
  auto start = Clock::now();
  uint64_t cap = budget;
  if (n == 5 && budget == 0) cap = uint64_t{1} << 26;  // C(36,5) classes
  RangeReport range = enumerate_range(n, n, EnumMode::kCanonical, cap);
  MinPositiveReport report;
  report.n = n;
  if (!range.min_positive) throw std::logic_error("no positive permanent value found");
  report.min_positive = *range.min_positive;
  report.conjectured = krauter_conjecture_value(n);
  report.matches = report.min_positive == report.conjectured;
  report.classes = range.symmetry_classes;
  report.wall_ms = elapsed_ms(start);
  return report;
}

UpperTriangularReport upper_triangular_range(int64_t n, uint64_t budget) {
  if (n < 1 || n > 4) throw InputError("upper-triangular enumeration supports 1 <= n <= 4");
  std::vector<std::pair<int64_t, int64_t>> free_cells;
  for (int64_t i = 0; i < n; ++i)
    for (int64_t j = i; j < n; ++j) free_cells.emplace_back(i, j);

  std::set<BigInt> values;
  for (uint64_t bits = 0; bits < (uint64_t{1} << free_cells.size()); ++bits) {
    std::vector<std::vector<int64_t>> minus(static_cast<size_t>(n));
    for (size_t t = 0; t < free_cells.size(); ++t)
      if ((bits >> t) & 1) minus[static_cast<size_t>(free_cells[t].first)].push_back(free_cells[t].second);
    values.insert(permanent_auto(SignMatrix(n, n, std::move(minus))));
  }

  UpperTriangularReport report;
  report.n = n;
  report.values.assign(values.begin(), values.end());
  report.full_values = enumerate_range(n, n, EnumMode::kCanonical, budget).values;
  report.equal = report.values == report.full_values;
  return report;
}

SubsetCheckReport construction_subset_check(int64_t k, int64_t n, uint64_t budget) {
  std::vector<Rational> mu = gap::choose_mu(k);
  gap::DerivedCounts derived = gap::derive_counts(k, n, mu);
  if (k + 1 > n) throw InputError("subset check needs k + 1 <= n");

  // Predicted values: per(a * B) = per(j * B) - 2 g where g ranges over the
  // progression spanned by all column minors (including the all-plus block).
  std::vector<BigInt> basis = gap::minor_basis(k, n, derived.counts);
  std::vector<int64_t> limits = derived.counts.entries;
  if (derived.n0 > 0) {
    basis.insert(basis.begin(), gap::plus_block_minor(n, derived.counts));
    limits.insert(limits.begin(), derived.n0);
  }
  gap::GapValueSet gamma = gap::gamma_values(basis, limits, budget);
  SignMatrix b = make_block_matrix(derived.counts);
  BigInt all_plus = permanent_auto(concat_rows(SignMatrix::all_plus(1, n), b), budget);

  RangeReport range = enumerate_range(k + 1, n, EnumMode::kCanonical, budget);
  std::set<BigInt> range_set(range.values.begin(), range.values.end());

  SubsetCheckReport report;
  report.k = k;
  report.n = n;
  report.subset_ok = true;
  std::set<BigInt> predicted;
  for (const BigInt& g : gamma.values) {
    BigInt value = all_plus - 2 * g;
    predicted.insert(value);
    if (range_set.find(value) == range_set.end()) report.subset_ok = false;
  }
  report.construction_values = predicted.size();
  report.range_values = range_set.size();
  report.coverage = range_set.empty() ? 0.0
                                      : static_cast<double>(predicted.size()) /
                                            static_cast<double>(range_set.size());
  return report;
}

MonotonicityReport monotonicity_check(int64_t k, int64_t n, uint64_t budget, uint64_t seed,
                                      uint64_t samples) {
  if (k + 1 > n) throw InputError("monotonicity check needs k + 1 <= n");
  MonotonicityReport report;
  report.k = k;
  report.n = n;
  report.r_low = enumerate_range(k, n, EnumMode::kCanonical, budget).r;
  report.r_high = enumerate_range(k + 1, n, EnumMode::kCanonical, budget).r;
  report.monotone_ok = report.r_low <= report.r_high;

  std::mt19937_64 rng(seed);
  report.padding_ok = true;
  report.padding_samples = samples;
  for (uint64_t s = 0; s < samples; ++s) {
    std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
    for (int64_t i = 0; i < k; ++i)
      for (int64_t j = 0; j < n; ++j)
        if (rng() & 1) minus[static_cast<size_t>(i)].push_back(j);
    SignMatrix a(k, n, std::move(minus));
    int64_t extra = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(std::max<int64_t>(n - k, 1)));
    SignMatrix padded = concat_rows(a, SignMatrix::all_plus(extra, n));
    BigInt lhs = permanent_auto(padded, budget);
    BigInt rhs = permanent_auto(a, budget) * falling_factorial(n - k, extra);
    if (lhs != rhs) report.padding_ok = false;
  }
  return report;
}

}  // namespace permrange::range_oracle
