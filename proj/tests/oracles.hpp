// Test-side reference implementations, deliberately independent of the
// library's engines: a literal permutation-walk permanent and a subset-sum
// elementary symmetric function. Slow and obviously correct.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "numeric.hpp"
#include "rational_poly.hpp"
#include "sign_matrix.hpp"

namespace permrange::testing {

inline BigInt per_bruteforce(const SignMatrix& m) {
  const int64_t k = m.rows();
  const int64_t n = m.cols();
  std::vector<uint8_t> used(static_cast<size_t>(n), 0);
  BigInt total = 0;
  auto rec = [&](auto&& self, int64_t row, int64_t sign) -> void {
    if (row == k) {
      total += sign;
      return;
    }
    for (int64_t j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = 1;
      self(self, row + 1, m.entry(row, j) < 0 ? -sign : sign);
      used[static_cast<size_t>(j)] = 0;
    }
  };
  rec(rec, 0, 1);
  return total;
}

inline Rational esym_subsets(int64_t ell, const std::vector<Rational>& values) {
  const int64_t n = static_cast<int64_t>(values.size());
  if (ell == 0) return Rational(1);
  if (ell > n) return Rational(0);
  Rational total = 0;
  std::vector<int64_t> pick(static_cast<size_t>(ell));
  auto rec = [&](auto&& self, int64_t depth, int64_t from) -> void {
    if (depth == ell) {
      Rational prod = 1;
      for (int64_t idx : pick) prod *= values[static_cast<size_t>(idx)];
      total += prod;
      return;
    }
    for (int64_t i = from; i < n; ++i) {
      pick[static_cast<size_t>(depth)] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return total;
}

inline SignMatrix random_matrix(std::mt19937_64& rng, int64_t k, int64_t n) {
  std::vector<std::vector<int64_t>> minus(static_cast<size_t>(k));
  for (int64_t i = 0; i < k; ++i)
    for (int64_t j = 0; j < n; ++j)
      if (rng() & 1) minus[static_cast<size_t>(i)].push_back(j);
  return SignMatrix(k, n, std::move(minus));
}

// Exact polynomial reconstruction from point evaluations (Lagrange over Q);
// an independent route to coefficient vectors.
inline std::vector<Rational> interpolate(const std::vector<int64_t>& xs,
                                         const std::vector<Rational>& ys) {
  const size_t m = xs.size();
  std::vector<Rational> coeffs(m, Rational(0));
  for (size_t i = 0; i < m; ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j), accumulated.
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t] += basis[t] * Rational(-xs[j]);
        next[t + 1] += basis[t];
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[j]);
    }
    for (size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * ys[i] / denom;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace permrange::testing
