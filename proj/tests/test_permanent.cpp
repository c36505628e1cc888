#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permanent.hpp"
#include "sign_matrix.hpp"
#include "symbolic.hpp"

using namespace permrange;

TEST_CASE("injection sum on pinned cases") {
  CHECK(permanent_injection_sum(SignMatrix::all_plus(2, 2)) == 2);
  CHECK(permanent_injection_sum(parse_matrix("2 2\n++\n+-\n")) == 0);
  // one -1 in the first row of a 3x3, all else +1: 3! - 2*2! = 2
  SignMatrix b = make_block_matrix(make_counts(3, {1, 0, 0}));
  CHECK(permanent_injection_sum(b) == 2);
  CHECK(symbolic::block_permanent_closed_form(make_counts(3, {1, 0, 0})) == 2);
}

TEST_CASE("injection sum budget is enforced") {
  CHECK_THROWS_AS(permanent_injection_sum(SignMatrix::all_plus(8, 8), 100), BudgetError);
}

TEST_CASE("subset-table engine on pinned cases") {
  CHECK(permanent_bitmask_dp(SignMatrix::all_plus(3, 3)) == 6);
  CHECK(permanent_bitmask_dp(SignMatrix::all_plus(2, 4)) == 12);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    SignMatrix m = testing::random_matrix(rng, 4, 6);
    CHECK(permanent_bitmask_dp(m) == testing::per_bruteforce(m));
  }
}

TEST_CASE("ryser engine on pinned cases") {
  CHECK(permanent_ryser(SignMatrix::all_plus(4, 4)) == 24);
  CHECK_THROWS_AS(permanent_ryser(SignMatrix::all_plus(2, 3)), InputError);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    SignMatrix m = testing::random_matrix(rng, 5, 5);
    CHECK(permanent_ryser(m) == permanent_bitmask_dp(m));
  }
}

TEST_CASE("all engines agree with the brute-force walk") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    int64_t n = 1 + static_cast<int64_t>(rng() % 12);
    int64_t k = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(std::min<int64_t>(n, 5)));
    SignMatrix m = testing::random_matrix(rng, k, n);
    BigInt expected = testing::per_bruteforce(m);
    CHECK(permanent_injection_sum(m) == expected);
    CHECK(permanent_bitmask_dp(m) == expected);
    if (k == n) CHECK(permanent_ryser(m) == expected);
    CHECK(permanent_auto(m) == expected);
  }
}

TEST_CASE("row negation negates the permanent") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    SignMatrix m = testing::random_matrix(rng, 3, 5);
    int64_t row = static_cast<int64_t>(rng() % 3);
    CHECK(permanent_auto(m.with_row_negated(row)) == -permanent_auto(m));
  }
}

TEST_CASE("row and column permutations leave the permanent unchanged") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    int64_t k = 3, n = 6;
    SignMatrix m = testing::random_matrix(rng, k, n);
    std::vector<int64_t> rows{0, 1, 2}, cols{0, 1, 2, 3, 4, 5};
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
    for (int64_t i = 0; i < k; ++i)
      for (int64_t j = 0; j < n; ++j)
        if (m.entry(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]) < 0)
          minus[static_cast<size_t>(i)].push_back(j);
    SignMatrix permuted(k, n, std::move(minus));
    CHECK(permanent_auto(permuted) == permanent_auto(m));
  }
}

TEST_CASE("padding with all-plus rows multiplies by a falling factorial") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    int64_t n = 2 + static_cast<int64_t>(rng() % 7);  // up to 8
    int64_t k = 1 + static_cast<int64_t>(rng() % static_cast<uint64_t>(std::min<int64_t>(n, 3)));
    int64_t ell = k + 1 + static_cast<int64_t>(rng() % 2);
    if (ell > std::min<int64_t>(n, 4)) continue;
    SignMatrix a = testing::random_matrix(rng, k, n);
    SignMatrix padded = concat_rows(a, SignMatrix::all_plus(ell - k, n));
    CHECK(permanent_auto(padded) == permanent_auto(a) * falling_factorial(n - k, ell - k));
  }
}

TEST_CASE("minor extraction") {
  CHECK(permanent_minor(SignMatrix::all_plus(3, 3), 0, 0) == 2);
  CHECK(permanent_minor(SignMatrix::all_plus(2, 4), 0, 0) == 3);
  CHECK_THROWS_AS(permanent_minor(SignMatrix::all_plus(1, 3), 0, 0), InputError);
  CHECK_THROWS_AS(permanent_minor(SignMatrix::all_plus(3, 3), 3, 0), InputError);
}

TEST_CASE("laplace expansion equals the permanent along every row") {
  CHECK(laplace_expand(SignMatrix::all_plus(3, 3), 0) == 6);
  CHECK(laplace_expand(SignMatrix::all_plus(2, 4), 0) == 12);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    SignMatrix m = testing::random_matrix(rng, 3, 5);
    BigInt direct = testing::per_bruteforce(m);
    for (int64_t row = 0; row < 3; ++row) CHECK(laplace_expand(m, row) == direct);
  }
}

TEST_CASE("auto dispatch reports the engine") {
  std::string engine;
  permanent_auto(SignMatrix::all_plus(2, 3), 0, &engine);
  CHECK(engine == "injection-sum");
  // (12)_12 is past the injection budget; the 2^12 subset table takes over.
  BigInt value = permanent_auto(SignMatrix::all_plus(12, 12), 0, &engine);
  CHECK(engine == "bitmask-dp");
  CHECK(value == 479001600);  // 12!
  // nothing fits under a tiny global budget
  CHECK_THROWS_AS(permanent_auto(SignMatrix::all_plus(4, 4), 10), BudgetError);
}
