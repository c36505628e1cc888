#include "gap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "parallel.hpp"
#include "permanent.hpp"

namespace permrange::gap {

std::vector<Rational> choose_mu(int64_t k) {
  if (k < 1) throw InputError("k must be at least 1");
  int64_t denom = k * (k + 1) / 2;
  std::vector<Rational> mu;
  mu.reserve(static_cast<size_t>(k));
  for (int64_t i = 1; i <= k; ++i) mu.push_back(Rational(i, denom));
  return mu;
}

int64_t denominator_lcm(const std::vector<Rational>& mu) {
  BigInt l = 1;
  for (const auto& m : mu) l = lcm(l, denominator(m));
  if (l > std::numeric_limits<int64_t>::max())
    throw InputError("denominator lcm does not fit in 64 bits");
  return static_cast<int64_t>(l);
}

DerivedCounts derive_counts(int64_t k, int64_t n, const std::vector<Rational>& mu) {
  symbolic::validate_mu(mu);
  if (static_cast<int64_t>(mu.size()) != k) throw InputError("mu length must equal k");
  int64_t dk = denominator_lcm(mu);
  if (n < dk)
    throw InputError("n too small: the construction needs n >= d_k = " + std::to_string(dk));
  int64_t n0 = n % dk;
  std::vector<int64_t> entries;
  entries.reserve(static_cast<size_t>(k));
  for (const auto& m : mu) {
    Rational c = m * (n - n0);
    if (denominator(c) != 1) throw std::logic_error("count mu_i (n - n0) is not an integer");
    entries.push_back(static_cast<int64_t>(numerator(c)));
  }
  return DerivedCounts{n0, make_counts(n, std::move(entries))};
}

std::vector<BigInt> minor_basis(int64_t k, int64_t n, const CountsVector& counts) {
  if (counts.size() != k) throw InputError("counts length must equal k");
  if (counts.ambient_cols != n) throw InputError("counts ambient size must equal n");
  std::vector<BigInt> basis;
  basis.reserve(static_cast<size_t>(k));
  for (int64_t i = 0; i < k; ++i) {
    if (counts.entries[static_cast<size_t>(i)] < 1)
      throw InputError("minor basis needs every count >= 1; count " + std::to_string(i + 1) +
                       " is zero");
    std::vector<int64_t> entries = counts.entries;
    entries[static_cast<size_t>(i)] -= 1;
    basis.push_back(symbolic::block_permanent_closed_form(make_counts(n - 1, std::move(entries))));
  }
  return basis;
}

BigInt plus_block_minor(int64_t n, const CountsVector& counts) {
  if (counts.plus_columns() < 1) throw InputError("matrix has no all-plus column to remove");
  return symbolic::block_permanent_closed_form(make_counts(n - 1, counts.entries));
}

BigInt GapDescriptor::size() const {
  BigInt s = 1;
  for (int64_t l : limits) s *= l;
  return s;
}

GapValueSet gap_values(const GapDescriptor& descriptor, uint64_t budget, int workers) {
  const std::vector<BigInt>& basis = descriptor.basis;
  const std::vector<int64_t>& limits = descriptor.limits;
  if (basis.size() != limits.size()) throw InputError("basis and limits must have equal length");
  if (basis.empty()) throw InputError("progression needs at least one dimension");
  for (int64_t l : limits)
    if (l < 1) throw InputError("limits must be at least 1");
  const uint64_t cap = budget == 0 ? kBoxBudgetDefault : budget;
  BigInt size = descriptor.size();
  if (size > cap)
    throw BudgetError("progression box has " + size.str() + " points, budget is " +
                      std::to_string(cap));
  const uint64_t total = static_cast<uint64_t>(size);

  std::vector<std::set<BigInt>> partial(static_cast<size_t>(std::max(workers, 1)));
  run_partitioned(total, workers, [&](uint64_t begin, uint64_t end, int slot) {
    std::set<BigInt>& out = partial[static_cast<size_t>(slot)];
    if (begin >= end) return;
    // Decode the flat index in mixed radix, least significant dimension last.
    std::vector<int64_t> point(basis.size());
    uint64_t idx = begin;
    for (size_t d = basis.size(); d-- > 0;) {
      uint64_t radix = static_cast<uint64_t>(limits[d]);
      point[d] = static_cast<int64_t>(idx % radix);
      idx /= radix;
    }
    BigInt value = descriptor.offset;
    for (size_t d = 0; d < basis.size(); ++d) value += basis[d] * point[d];
    for (uint64_t flat = begin; flat < end; ++flat) {
      out.insert(value);
      if (flat + 1 == end) break;
      // Increment the point odometer-style, updating the value in place.
      for (size_t d = basis.size(); d-- > 0;) {
        if (point[d] + 1 < limits[d]) {
          ++point[d];
          value += basis[d];
          break;
        }
        value -= basis[d] * point[d];
        point[d] = 0;
      }
    }
  });

  GapValueSet out;
  out.box_size = size;
  out.points = total;
  std::set<BigInt> merged;
  for (auto& p : partial) merged.merge(p);
  out.values.assign(merged.begin(), merged.end());
  return out;
}

GapValueSet gamma_values(const std::vector<BigInt>& basis, const std::vector<int64_t>& counts,
                         uint64_t budget, int workers) {
  GapDescriptor descriptor;
  descriptor.offset = 0;
  descriptor.basis = basis;
  for (int64_t c : counts) {
    if (c < 0) throw InputError("counts must be nonnegative");
    descriptor.limits.push_back(c + 1);
  }
  return gap_values(descriptor, budget, workers);
}

TransformCheck affine_transform_check(const std::vector<int>& a, const SignMatrix& b,
                                      uint64_t budget) {
  if (static_cast<int64_t>(a.size()) != b.cols())
    throw InputError("sign row width must match the matrix");
  for (int v : a)
    if (v != 1 && v != -1) throw InputError("sign row entries must be +1 or -1");

  TransformCheck check;
  // The indicator row (1 - a)/2 has a 1 exactly where a is -1; expanding the
  // permanent along that row leaves one column minor per such position.
  check.indicator_row_value = 0;
  for (int64_t j = 0; j < b.cols(); ++j) {
    if (a[static_cast<size_t>(j)] < 0)
      check.indicator_row_value += permanent_auto(b.without_column(j), budget);
  }

  std::vector<std::vector<int64_t>> sign_minus(1);
  for (int64_t j = 0; j < b.cols(); ++j)
    if (a[static_cast<size_t>(j)] < 0) sign_minus[0].push_back(j);
  SignMatrix sign_row(1, b.cols(), std::move(sign_minus));
  check.all_plus_row_value = permanent_auto(concat_rows(SignMatrix::all_plus(1, b.cols()), b), budget);
  check.sign_row_value = permanent_auto(concat_rows(sign_row, b), budget);
  check.ok = 2 * check.indicator_row_value == check.all_plus_row_value - check.sign_row_value;
  return check;
}

MkResult compute_mk(int64_t k, const std::vector<Rational>& mu) {
  symbolic::validate_mu(mu);
  if (static_cast<int64_t>(mu.size()) != k) throw InputError("mu length must equal k");
  const int64_t dk = denominator_lcm(mu);
  const BigInt scale = int_pow(BigInt(dk), static_cast<uint64_t>(k));
  MkResult result;
  result.value = 0;
  for (int64_t n0 = 0; n0 < dk; ++n0) {
    BigInt total = 0;
    for (const RationalPoly& p : symbolic::minor_polys(k, mu, n0)) {
      for (int64_t j = 0; j <= p.degree(); ++j) {
        Rational scaled = p.coeff(j) * Rational(scale);
        if (denominator(scaled) != 1)
          throw std::logic_error("d_k^k does not clear a minor-polynomial denominator");
        total += abs(numerator(scaled));
      }
    }
    if (total > result.value) {
      result.value = total;
      result.argmax_n0 = n0;
    }
  }
  result.closed_bound = int_pow(BigInt(16) * int_pow(BigInt(k), 5), static_cast<uint64_t>(k));
  result.within_bound = result.value <= result.closed_bound;
  return result;
}

ConstructionParams constants(int64_t k) {
  ConstructionParams params;
  params.k = k;
  params.mu = choose_mu(k);
  params.d_k = denominator_lcm(params.mu);
  params.scale = int_pow(BigInt(params.d_k), static_cast<uint64_t>(k));
  MkResult mk = compute_mk(k, params.mu);
  params.m_k = mk.value;
  params.m_k_bound = mk.closed_bound;
  params.m_k_within_bound = mk.within_bound;
  params.delta_k = Rational(1, 4 * mk.value);
  for (const auto& m : params.mu) params.delta_k = std::min(params.delta_k, m);
  params.eps_k = rational_pow(params.delta_k, k - 2);
  params.delta_closed_lower = Rational(1, 4 * mk.closed_bound);
  params.delta_within_bound = params.delta_k >= params.delta_closed_lower;
  return params;
}

BoxCertificate proper_subbox(const ConstructionParams& params, int64_t n,
                             const std::vector<BigInt>& basis, const std::vector<int64_t>& witness,
                             const std::vector<int64_t>& counts, int64_t side, uint64_t budget,
                             int workers) {
  if (basis.size() != counts.size()) throw InputError("basis and counts must have equal length");
  BoxCertificate cert;
  cert.eps_bound = params.eps_k * rational_pow(Rational(n), params.k - 2);
  cert.witness = witness;
  for (int64_t idx : witness) {
    if (idx < 1 || idx > static_cast<int64_t>(basis.size()))
      throw InputError("witness index out of range");
  }

  if (side < 0) {
    cert.default_side = true;
    BigInt def = floor_rational(params.delta_k * n);
    if (def < 1) {
      cert.vacuous = true;
      cert.side = 0;
      cert.minimal_n = static_cast<int64_t>(ceil_rational(1 / params.delta_k));
      // The box degenerates to the origin: one point, trivially proper.
      cert.proper = true;
      cert.point_count = 1;
      cert.meets_eps_bound = Rational(1) >= cert.eps_bound;
      return cert;
    }
    cert.side = static_cast<int64_t>(def);
  } else {
    cert.side = side;
  }
  for (int64_t idx : witness) {
    int64_t limit = counts[static_cast<size_t>(idx - 1)];
    if (cert.side > limit)
      throw InputError("side " + std::to_string(cert.side) + " exceeds the box limit " +
                       std::to_string(limit) + " in coordinate " + std::to_string(idx));
  }

  const int64_t dims = static_cast<int64_t>(witness.size());
  BigInt points = int_pow(BigInt(cert.side + 1), static_cast<uint64_t>(dims));
  cert.point_count = points;
  const uint64_t cap = budget == 0 ? kBoxBudgetDefault : budget;
  if (points > cap)
    throw BudgetError("box has " + points.str() + " points, budget is " + std::to_string(cap));
  const uint64_t total = static_cast<uint64_t>(points);

  struct Entry {
    BigInt value;
    uint64_t flat;
  };
  std::vector<std::vector<Entry>> partial(static_cast<size_t>(std::max(workers, 1)));
  run_partitioned(total, workers, [&](uint64_t begin, uint64_t end, int slot) {
    auto& out = partial[static_cast<size_t>(slot)];
    out.reserve(end - begin);
    std::vector<int64_t> point(static_cast<size_t>(dims));
    uint64_t idx = begin;
    const uint64_t radix = static_cast<uint64_t>(cert.side + 1);
    for (size_t d = static_cast<size_t>(dims); d-- > 0;) {
      point[d] = static_cast<int64_t>(idx % radix);
      idx /= radix;
    }
    BigInt value = 0;
    for (size_t d = 0; d < point.size(); ++d)
      value += basis[static_cast<size_t>(witness[d] - 1)] * point[d];
    for (uint64_t flat = begin; flat < end; ++flat) {
      out.push_back(Entry{value, flat});
      if (flat + 1 == end) break;
      for (size_t d = point.size(); d-- > 0;) {
        const BigInt& step = basis[static_cast<size_t>(witness[d] - 1)];
        if (point[d] < cert.side) {
          ++point[d];
          value += step;
          break;
        }
        value -= step * point[d];
        point[d] = 0;
      }
    }
  });

  std::vector<Entry> all;
  all.reserve(total);
  for (auto& p : partial)
    for (auto& e : p) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.flat < b.flat;
  });
  cert.proper = true;
  for (size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i].value == all[i + 1].value) {
      cert.proper = false;
      auto decode = [&](uint64_t flat) {
        std::vector<int64_t> point(static_cast<size_t>(dims));
        const uint64_t radix = static_cast<uint64_t>(cert.side + 1);
        for (size_t d = static_cast<size_t>(dims); d-- > 0;) {
          point[d] = static_cast<int64_t>(flat % radix);
          flat /= radix;
        }
        return point;
      };
      cert.collision = std::make_pair(decode(all[i].flat), decode(all[i + 1].flat));
      cert.collision_value = all[i].value;
      break;
    }
  }
  cert.meets_eps_bound = Rational(cert.point_count) >= cert.eps_bound;
  return cert;
}

std::vector<BigInt> sign_row_value_set(const SignMatrix& b, uint64_t budget) {
  const int64_t n = b.cols();
  if (n > 30) throw BudgetError("sign-row enumeration is capped at n <= 30");
  const uint64_t cap = budget == 0 ? kBoxBudgetDefault : budget;
  if ((uint64_t{1} << n) > cap)
    throw BudgetError("sign-row enumeration needs 2^" + std::to_string(n) +
                      " evaluations, budget is " + std::to_string(cap));
  std::vector<BigInt> minors;
  minors.reserve(static_cast<size_t>(n));
  for (int64_t j = 0; j < n; ++j) minors.push_back(permanent_auto(b.without_column(j), budget));
  std::set<BigInt> values;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    BigInt v = 0;
    for (int64_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1) v -= minors[static_cast<size_t>(j)];
      else v += minors[static_cast<size_t>(j)];
    }
    values.insert(v);
  }
  return std::vector<BigInt>(values.begin(), values.end());
}

LowerBoundReport lower_bound_report(int64_t k, int64_t n, int64_t side, uint64_t budget,
                                    int workers) {
  LowerBoundReport report;
  report.params = constants(k);
  DerivedCounts derived = derive_counts(k, n, report.params.mu);
  report.n = n;
  report.n0 = derived.n0;
  report.counts = derived.counts.entries;
  report.basis = minor_basis(k, n, derived.counts);
  report.certificate = symbolic::rank_certificate(k, report.params.mu, derived.n0);
  report.box = proper_subbox(report.params, n, report.basis, report.certificate.witness,
                             report.counts, side, budget, workers);
  report.certified_distinct = report.box.proper ? report.box.point_count : BigInt(0);
  report.eps_bound = report.box.eps_bound;
  report.meets_bound = Rational(report.certified_distinct) >= report.eps_bound;
  report.transfers_to_square = k + 1 <= n;
  return report;
}

PlugInReport main2_plugin(int64_t n, double eps) {
  if (n < 3) throw InputError("plug-in rule needs n >= 3");
  if (eps <= 0) throw InputError("eps must be positive");
  PlugInReport report;
  report.n = n;
  report.eps = eps;
  double ln = std::log(static_cast<double>(n));
  report.k = static_cast<int64_t>(std::floor(eps * ln / std::log(ln)));
  report.vacuous = report.k < 3;
  report.exponent = report.k - 2;
  if (!report.vacuous) {
    BigInt bound_mk = int_pow(BigInt(16) * int_pow(BigInt(report.k), 5),
                              static_cast<uint64_t>(report.k));
    Rational delta_lower(1, 4 * bound_mk);
    report.eps_k_lower = rational_pow(delta_lower, report.k - 2);
    report.bound = report.eps_k_lower * rational_pow(Rational(n), report.k - 2);
    report.log10_bound = log10_approx(report.bound);
  }
  return report;
}

}  // namespace permrange::gap
