#include "symbolic.hpp"

#include <algorithm>
#include <set>

namespace permrange::symbolic {

RationalPoly sym_weight_poly(int64_t ell, int64_t k) {
  if (ell < 0 || ell > k) throw InputError("weight index must satisfy 0 <= ell <= k");
  Rational sign_scale = rational_pow(Rational(-2), ell);
  return falling_factorial_poly(ell, k - ell) * sign_scale;
}

RationalPoly sym_weight_poly_shifted(int64_t ell, int64_t k) {
  if (ell < 0 || ell > k) throw InputError("weight index must satisfy 0 <= ell <= k");
  Rational sign_scale = rational_pow(Rational(-2), ell);
  return falling_factorial_poly(ell + 1, k - ell) * sign_scale;
}

BigInt block_permanent_closed_form(const CountsVector& counts) {
  const int64_t k = counts.size();
  const int64_t n = counts.ambient_cols;
  if (k > n) throw InputError("closed form needs k <= n");
  if (counts.sum() > n) throw InputError("counts sum exceeds ambient n");
  std::vector<BigInt> values(counts.entries.begin(), counts.entries.end());
  std::vector<BigInt> e = elementary_symmetric_all(values);
  BigInt total = 0;
  BigInt pow_m2 = 1;
  for (int64_t ell = 0; ell <= k; ++ell) {
    total += pow_m2 * falling_factorial(n - ell, k - ell) * e[static_cast<size_t>(ell)];
    pow_m2 *= -2;
  }
  return total;
}

void validate_mu(const std::vector<Rational>& mu) {
  if (mu.empty()) throw InputError("mu must be nonempty");
  Rational sum = 0;
  for (const auto& m : mu) {
    if (m <= 0) throw InputError("mu entries must be positive");
    sum += m;
  }
  if (sum != 1) throw InputError("mu entries must sum to 1, got " + to_decimal(sum));
  std::set<Rational> distinct(mu.begin(), mu.end());
  if (distinct.size() != mu.size()) throw InputError("mu entries must be pairwise distinct");
}

std::vector<RationalPoly> minor_polys(int64_t k, const std::vector<Rational>& mu, int64_t n0) {
  validate_mu(mu);
  if (static_cast<int64_t>(mu.size()) != k) throw InputError("mu length must equal k");
  // Each count is the degree-1 polynomial mu_j (n - n0).
  std::vector<RationalPoly> base_counts;
  base_counts.reserve(static_cast<size_t>(k));
  for (int64_t j = 0; j < k; ++j) {
    const Rational& m = mu[static_cast<size_t>(j)];
    base_counts.push_back(RationalPoly(std::vector<Rational>{-m * n0, m}));
  }
  std::vector<RationalPoly> weights;
  for (int64_t ell = 0; ell <= k; ++ell) weights.push_back(sym_weight_poly_shifted(ell, k));

  std::vector<RationalPoly> out;
  out.reserve(static_cast<size_t>(k));
  for (int64_t i = 0; i < k; ++i) {
    std::vector<RationalPoly> counts = base_counts;
    counts[static_cast<size_t>(i)] -= RationalPoly(1);
    std::vector<RationalPoly> e = elementary_symmetric_all(counts);
    RationalPoly p;
    for (int64_t ell = 0; ell <= k; ++ell) p += weights[static_cast<size_t>(ell)] * e[static_cast<size_t>(ell)];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<RationalPoly> scaled_diff_polys(int64_t k, const std::vector<Rational>& mu, int64_t n0) {
  validate_mu(mu);
  if (static_cast<int64_t>(mu.size()) != k) throw InputError("mu length must equal k");
  const RationalPoly shifted_arg(std::vector<Rational>{Rational(-n0), Rational(1)});  // n - n0
  std::vector<RationalPoly> out;
  out.reserve(static_cast<size_t>(k > 0 ? k - 1 : 0));
  for (int64_t i = 2; i <= k; ++i) {
    std::vector<Rational> rest;
    for (int64_t j = 2; j <= k; ++j) {
      if (j == i) continue;
      rest.push_back(mu[static_cast<size_t>(j - 1)]);
    }
    std::vector<Rational> e = elementary_symmetric_all(rest);
    RationalPoly p;
    RationalPoly power = shifted_arg;  // (n - n0)^(ell-1), starting at ell = 2
    for (int64_t ell = 2; ell <= k; ++ell) {
      p += sym_weight_poly_shifted(ell, k) * power * RationalPoly(e[static_cast<size_t>(ell - 2)]);
      power *= shifted_arg;
    }
    out.push_back(std::move(p));
  }
  return out;
}

RationalMatrix diff_coeff_matrix(int64_t k, const std::vector<Rational>& mu, int64_t n0) {
  if (k < 2) throw InputError("coefficient matrix needs k >= 2");
  std::vector<RationalPoly> diffs = scaled_diff_polys(k, mu, n0);
  RationalMatrix m(k - 1, k - 1);
  for (int64_t i = 0; i < k - 1; ++i)
    for (int64_t j = 0; j <= k - 2; ++j) m.at(i, j) = diffs[static_cast<size_t>(i)].coeff(k - j - 1);
  return m;
}

std::vector<Rational> left_factor_vector(int64_t k, const std::vector<Rational>& mu, int64_t ell) {
  if (ell < 2 || ell > k) throw InputError("left factor needs 2 <= ell <= k");
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(k - 1));
  for (int64_t i = 2; i <= k; ++i) {
    std::vector<Rational> rest;
    for (int64_t j = 2; j <= k; ++j) {
      if (j == i) continue;
      rest.push_back(mu[static_cast<size_t>(j - 1)]);
    }
    out.push_back(elementary_symmetric(ell - 2, rest));
  }
  return out;
}

std::vector<Rational> right_factor_vector(int64_t k, int64_t n0, int64_t ell, int64_t a) {
  if (a < 1) throw InputError("right factor needs a >= 1");
  if (ell < 2 || ell > k + 1 - a) throw InputError("right factor needs 2 <= ell <= k+1-a");
  std::vector<Rational> values;
  for (int64_t t = 0; t < ell - 1; ++t) values.push_back(Rational(n0));
  for (int64_t v = ell + a; v <= k; ++v) values.push_back(Rational(v));
  std::vector<Rational> e = elementary_symmetric_all(values);
  std::vector<Rational> out(static_cast<size_t>(k - a));
  Rational sign = 1;
  for (int64_t j = 0; j <= k - a - 1; ++j) {
    out[static_cast<size_t>(j)] = sign * e[static_cast<size_t>(j)];
    sign = -sign;
  }
  return out;
}

RationalMatrix left_factor_stack(int64_t k, const std::vector<Rational>& mu) {
  if (k < 2) throw InputError("factor stack needs k >= 2");
  RationalMatrix m(k - 1, k - 1);
  for (int64_t ell = 2; ell <= k; ++ell) {
    std::vector<Rational> row = left_factor_vector(k, mu, ell);
    for (int64_t i = 0; i < k - 1; ++i) m.at(ell - 2, i) = row[static_cast<size_t>(i)];
  }
  return m;
}

RationalMatrix right_factor_stack(int64_t k, int64_t n0) {
  if (k < 2) throw InputError("factor stack needs k >= 2");
  RationalMatrix m(k - 1, k - 1);
  for (int64_t ell = 2; ell <= k; ++ell) {
    std::vector<Rational> row = right_factor_vector(k, n0, ell, 1);
    for (int64_t j = 0; j < k - 1; ++j) m.at(ell - 2, j) = row[static_cast<size_t>(j)];
  }
  return m;
}

RationalMatrix outer_product_matrix(int64_t k, const std::vector<Rational>& mu, int64_t n0) {
  if (k < 2) throw InputError("outer-product matrix needs k >= 2");
  RationalMatrix m(k - 1, k - 1);
  for (int64_t ell = 2; ell <= k; ++ell) {
    std::vector<Rational> left = left_factor_vector(k, mu, ell);
    std::vector<Rational> right = right_factor_vector(k, n0, ell, 1);
    Rational w = rational_pow(Rational(-2), ell);
    for (int64_t i = 0; i < k - 1; ++i)
      for (int64_t j = 0; j < k - 1; ++j)
        m.at(i, j) += w * left[static_cast<size_t>(i)] * right[static_cast<size_t>(j)];
  }
  return m;
}

RationalPoly shifted_product_expansion(int64_t k, int64_t ell, int64_t n0) {
  if (ell < 2 || ell > k) throw InputError("expansion needs 2 <= ell <= k");
  const RationalPoly shifted_arg(std::vector<Rational>{Rational(-n0), Rational(1)});
  RationalPoly direct = pow_poly(shifted_arg, ell - 1) * falling_factorial_poly(ell + 1, k - ell);

  std::vector<Rational> values;
  for (int64_t t = 0; t < ell - 1; ++t) values.push_back(Rational(n0));
  for (int64_t v = ell + 1; v <= k; ++v) values.push_back(Rational(v));
  std::vector<Rational> e = elementary_symmetric_all(values);
  std::vector<Rational> coeffs(static_cast<size_t>(k), Rational(0));  // n^0..n^(k-1)
  Rational sign = 1;
  for (int64_t j = 0; j <= k - 1; ++j) {
    coeffs[static_cast<size_t>(k - j - 1)] = sign * e[static_cast<size_t>(j)];
    sign = -sign;
  }
  RationalPoly via_sym((std::vector<Rational>(coeffs)));
  if (!(direct == via_sym))
    throw std::logic_error("shifted product expansion mismatch at k=" + std::to_string(k) +
                           " ell=" + std::to_string(ell) + " n0=" + std::to_string(n0));
  return direct;
}

namespace {

bool recursion_holds(int64_t k, int64_t n0) {
  // right(ell+1, a) - right(ell, a) == (ell + a - n0) * (0 prepended to right(ell, a+1))
  for (int64_t a = 1; a <= k - 1; ++a) {
    for (int64_t ell = 2; ell + 1 <= k + 1 - a; ++ell) {
      std::vector<Rational> next = right_factor_vector(k, n0, ell + 1, a);
      std::vector<Rational> cur = right_factor_vector(k, n0, ell, a);
      std::vector<Rational> inner = right_factor_vector(k, n0, ell, a + 1);
      if (next[0] - cur[0] != 0) return false;
      Rational c = Rational(ell + a - n0);
      for (size_t j = 1; j < next.size(); ++j) {
        if (next[j] - cur[j] != c * inner[j - 1]) return false;
      }
    }
  }
  return true;
}

}  // namespace

RankCertificate rank_certificate(int64_t k, const std::vector<Rational>& mu, int64_t n0) {
  validate_mu(mu);
  if (static_cast<int64_t>(mu.size()) != k) throw InputError("mu length must equal k");
  RankCertificate cert;
  cert.k = k;
  cert.n0 = n0;
  cert.required = std::max<int64_t>(k - 2, 0);
  cert.vacuous = k <= 2;

  std::vector<RationalPoly> minors = minor_polys(k, mu, n0);
  cert.rank_minor_polys = rank_over_q(minors);

  if (k >= 2) {
    std::vector<RationalPoly> diffs = scaled_diff_polys(k, mu, n0);
    cert.rank_scaled_diffs = rank_over_q(diffs);

    cert.diff_routes_agree = true;
    for (int64_t i = 2; i <= k; ++i) {
      RationalPoly direct = (minors[0] - minors[static_cast<size_t>(i - 1)]) /
                            (mu[0] - mu[static_cast<size_t>(i - 1)]);
      if (!(direct == diffs[static_cast<size_t>(i - 2)])) cert.diff_routes_agree = false;
    }

    RationalMatrix coeff = diff_coeff_matrix(k, mu, n0);
    cert.rank_coeff_matrix = coeff.rank();
    cert.decomposition_ok = coeff == outer_product_matrix(k, mu, n0);
    cert.left_stack_invertible = left_factor_stack(k, mu).determinant() != 0;
    cert.rank_right_stack = right_factor_stack(k, n0).rank();
    cert.recursion_ok = recursion_holds(k, n0);

    for (int64_t a = 1; a <= k - 1; ++a) {
      RationalMatrix fam(k - a, k - a);
      for (int64_t ell = 2; ell <= k + 1 - a; ++ell) {
        std::vector<Rational> row = right_factor_vector(k, n0, ell, a);
        for (int64_t j = 0; j < k - a; ++j) fam.at(ell - 2, j) = row[static_cast<size_t>(j)];
      }
      SpanDimCase c;
      c.a = a;
      c.dim = fam.rank();
      c.lower_bound = (a <= n0 - 2) ? (k - 1 - a) : (k - a);
      c.ok = c.dim >= c.lower_bound;
      cert.span_dims.push_back(c);
    }
    cert.span_dims_ok = std::all_of(cert.span_dims.begin(), cert.span_dims.end(),
                                    [](const SpanDimCase& c) { return c.ok; });
  } else {
    cert.diff_routes_agree = true;
    cert.decomposition_ok = true;
    cert.recursion_ok = true;
    cert.span_dims_ok = true;
  }

  cert.rank_ok = cert.rank_scaled_diffs >= cert.required;

  // Witness: first lexicographic subset of minors, of size k-2, that is
  // linearly independent.
  RowSpace space(std::max<int64_t>(1, coefficient_matrix(minors).cols()));
  RationalMatrix cm = coefficient_matrix(minors);
  for (int64_t i = 0; i < k && static_cast<int64_t>(cert.witness.size()) < cert.required; ++i) {
    std::vector<Rational> row(static_cast<size_t>(cm.cols()));
    for (int64_t j = 0; j < cm.cols(); ++j) row[static_cast<size_t>(j)] = cm.at(i, j);
    if (space.try_add(std::move(row))) cert.witness.push_back(i + 1);
  }
  cert.witness_ok = static_cast<int64_t>(cert.witness.size()) == cert.required;

  cert.passed = cert.rank_ok && cert.witness_ok && cert.diff_routes_agree &&
                cert.decomposition_ok && cert.recursion_ok && cert.span_dims_ok;
  return cert;
}

DifferencePolyReport difference_poly(const std::vector<int64_t>& x, const std::vector<int64_t>& y,
                                     const std::vector<Rational>& mu, int64_t n0,
                                     const BigInt& scale, int64_t n) {
  if (x.size() != y.size()) throw InputError("lattice points must have equal dimension");
  if (x == y) throw InputError("lattice points must differ");
  const int64_t k = static_cast<int64_t>(x.size());
  std::vector<RationalPoly> minors = minor_polys(k, mu, n0);
  RationalPoly sum;
  for (int64_t i = 0; i < k; ++i) {
    Rational f = Rational(y[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]) * Rational(scale);
    sum += minors[static_cast<size_t>(i)] * f;
  }
  DifferencePolyReport report;
  report.poly = sum;
  report.degree = sum.degree();
  report.coeff_bound_ok = true;
  for (int64_t j = 0; j <= sum.degree(); ++j) {
    Rational c = sum.coeff(j);
    if (denominator(c) != 1)
      throw std::logic_error("difference polynomial has a non-integer coefficient; "
                             "the scale factor does not clear denominators");
    report.betas.push_back(numerator(c));
    if (2 * abs(numerator(c)) > n) report.coeff_bound_ok = false;
  }
  report.value_at_n = sum.eval_int(BigInt(n));
  report.value_nonzero = report.value_at_n != 0;
  return report;
}

}  // namespace permrange::symbolic
