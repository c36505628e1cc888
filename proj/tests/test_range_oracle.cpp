#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "permanent.hpp"
#include "range_oracle.hpp"

using namespace permrange;
using namespace permrange::range_oracle;

TEST_CASE("single-row ranges are the sign sums") {
  for (int64_t n = 1; n <= 12; ++n) {
    RangeReport report = enumerate_range(1, n, EnumMode::kCanonical);
    REQUIRE(report.r == static_cast<uint64_t>(n + 1));
    std::vector<BigInt> expected;
    for (int64_t m = 0; m <= n; ++m) expected.push_back(n - 2 * m);
    std::sort(expected.begin(), expected.end());
    REQUIRE(report.values == expected);
  }
}

TEST_CASE("pinned small square ranges") {
  RangeReport r22 = enumerate_range(2, 2, EnumMode::kNaive);
  CHECK(r22.values == std::vector<BigInt>{-2, 0, 2});
  CHECK(r22.matrices_visited == 16);

  RangeReport r33 = enumerate_range(3, 3, EnumMode::kNaive);
  CHECK(r33.values == std::vector<BigInt>{-6, -2, 2, 6});

  RangeReport r24 = enumerate_range(2, 4, EnumMode::kCanonical);
  CHECK(r24.values == std::vector<BigInt>{-12, -6, -4, -2, 0, 2, 4, 6, 12});
}

TEST_CASE("canonical and naive modes agree") {
  for (int64_t k = 1; k <= 2; ++k) {
    for (int64_t n = k; n <= 4; ++n) {
      RangeReport naive = enumerate_range(k, n, EnumMode::kNaive);
      RangeReport canonical = enumerate_range(k, n, EnumMode::kCanonical);
      REQUIRE(naive.values == canonical.values);
    }
  }
  REQUIRE(enumerate_range(3, 3, EnumMode::kNaive).values ==
          enumerate_range(3, 3, EnumMode::kCanonical).values);
  REQUIRE(enumerate_range(2, 5, EnumMode::kNaive).values ==
          enumerate_range(2, 5, EnumMode::kCanonical).values);
}

TEST_CASE("naive enumeration is worker-count independent") {
  RangeReport one = enumerate_range(2, 4, EnumMode::kNaive, 0, 1);
  RangeReport four = enumerate_range(2, 4, EnumMode::kNaive, 0, 4);
  REQUIRE(one.values == four.values);
  REQUIRE(one.witnesses.size() == four.witnesses.size());
  for (size_t i = 0; i < one.witnesses.size(); ++i) {
    REQUIRE(one.witnesses[i].first == four.witnesses[i].first);
    REQUIRE(one.witnesses[i].second == four.witnesses[i].second);
  }
}

TEST_CASE("value sets are negation closed and witnesses replay") {
  for (auto [k, n] : std::vector<std::pair<int64_t, int64_t>>{{2, 3}, {2, 4}, {3, 4}}) {
    RangeReport report = enumerate_range(k, n, EnumMode::kCanonical);
    std::set<BigInt> values(report.values.begin(), report.values.end());
    for (const BigInt& v : values) REQUIRE(values.count(-v) == 1);
    for (const auto& [value, witness] : report.witnesses)
      REQUIRE(testing::per_bruteforce(witness) == value);
  }
}

TEST_CASE("observed two-adic content of small square ranges") {
  // 2 divides every nonzero value at n = 2 and 3; 4 divides everything at 4
  RangeReport r2 = enumerate_range(2, 2, EnumMode::kCanonical);
  CHECK(*r2.two_adic_content == 2);
  RangeReport r3 = enumerate_range(3, 3, EnumMode::kCanonical);
  CHECK(*r3.two_adic_content == 2);
  RangeReport r4 = enumerate_range(4, 4, EnumMode::kCanonical);
  CHECK(*r4.two_adic_content == 4);
  CHECK(*r4.two_adic_valuation == 2);
}

TEST_CASE("range budgets are enforced") {
  CHECK_THROWS_AS(enumerate_range(4, 4, EnumMode::kNaive, 100), BudgetError);
  CHECK_THROWS_AS(enumerate_range(3, 9, EnumMode::kCanonical, 100), BudgetError);
}

TEST_CASE("gamma counts for the pinned 2x4 block matrix") {
  SignMatrix b = make_block_matrix(make_counts(4, {1, 1}));
  GammaCounts counts = count_gamma(b);
  REQUIRE(counts.exact.size() == 4);
  CHECK(counts.exact[0b00] == 7);
  CHECK(counts.exact[0b01] == 2);
  CHECK(counts.exact[0b10] == 2);
  CHECK(counts.exact[0b11] == 1);
  CHECK(counts.at_least[0b00] == 12);  // (4)_2
  CHECK(counts.at_least[0b01] == 3);   // 1 * (3)_1
  CHECK(counts.at_least[0b10] == 3);
  CHECK(counts.at_least[0b11] == 1);
  CHECK(counts.product_formula_applicable);
  CHECK(counts.product_formula_ok);
  CHECK(counts.mobius_ok);
  CHECK(counts.permanent_identity_ok);
}

TEST_CASE("gamma identities hold for every block matrix, k<=3 n<=7") {
  for (int64_t k = 1; k <= 3; ++k) {
    for (int64_t n = k; n <= 7; ++n) {
      std::vector<int64_t> entries(static_cast<size_t>(k), 0);
      auto rec = [&](auto&& self, int64_t pos, int64_t left) -> void {
        if (pos == k) {
          GammaCounts counts = count_gamma(make_block_matrix(make_counts(n, entries)));
          REQUIRE(counts.product_formula_applicable);
          REQUIRE(counts.product_formula_ok);
          REQUIRE(counts.mobius_ok);
          REQUIRE(counts.permanent_identity_ok);
          return;
        }
        for (int64_t v = 0; v <= left; ++v) {
          entries[static_cast<size_t>(pos)] = v;
          self(self, pos + 1, left - v);
        }
      };
      rec(rec, 0, n);
    }
  }
}

TEST_CASE("gamma identities hold for arbitrary matrices too") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    SignMatrix m = testing::random_matrix(rng, 3, 6);
    GammaCounts counts = count_gamma(m);
    REQUIRE(counts.mobius_ok);
    REQUIRE(counts.permanent_identity_ok);
  }
}

TEST_CASE("krauter conjecture values") {
  CHECK(krauter_conjecture_value(2) == 2);
  CHECK(krauter_conjecture_value(3) == 2);   // 3 = 2^2 - 1
  CHECK(krauter_conjecture_value(4) == 4);
  CHECK(krauter_conjecture_value(7) == BigInt(1) << 4);  // 7 = 2^3 - 1
  CHECK(krauter_conjecture_value(8) == BigInt(1) << 5);
}

TEST_CASE("minimum positive permanents at desk scale") {
  MinPositiveReport r2 = min_positive_permanent(2);
  CHECK(r2.min_positive == 2);
  CHECK(r2.matches);
  MinPositiveReport r3 = min_positive_permanent(3);
  CHECK(r3.min_positive == 2);
  CHECK(r3.matches);
  CHECK_THROWS_AS(min_positive_permanent(5, false), InputError);
  CHECK_THROWS_AS(min_positive_permanent(6, true), InputError);
}

TEST_CASE("upper-triangular ranges at desk scale") {
  UpperTriangularReport r1 = upper_triangular_range(1);
  CHECK(r1.values == std::vector<BigInt>{-1, 1});
  CHECK(r1.equal);

  UpperTriangularReport r2 = upper_triangular_range(2);
  CHECK(r2.values == std::vector<BigInt>{-2, 0, 2});
  CHECK(r2.equal);

  UpperTriangularReport r3 = upper_triangular_range(3);
  CHECK(r3.values == std::vector<BigInt>{-6, -2, 2, 6});
  CHECK(r3.equal);
}

TEST_CASE("construction values lie inside the enumerated range") {
  SubsetCheckReport r14 = construction_subset_check(1, 4);
  CHECK(r14.subset_ok);
  SubsetCheckReport r24 = construction_subset_check(2, 4);
  CHECK(r24.subset_ok);
  CHECK(r24.coverage > 0.0);
  CHECK(r24.coverage <= 1.0);
}

TEST_CASE("monotonicity and padding") {
  MonotonicityReport r14 = monotonicity_check(1, 4);
  CHECK(r14.r_low == 5);
  CHECK(r14.monotone_ok);
  CHECK(r14.padding_ok);

  MonotonicityReport r24 = monotonicity_check(2, 4, 0, 9);
  CHECK(r24.monotone_ok);
  CHECK(r24.padding_ok);
}
