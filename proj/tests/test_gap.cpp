#include <doctest.h>

#include <random>
#include <set>

#include "gap.hpp"
#include "oracles.hpp"
#include "permanent.hpp"

using namespace permrange;
using namespace permrange::gap;

TEST_CASE("standard weights") {
  std::vector<Rational> mu2 = choose_mu(2);
  CHECK(mu2 == std::vector<Rational>{Rational(1, 3), Rational(2, 3)});
  CHECK(denominator_lcm(mu2) == 3);

  std::vector<Rational> mu3 = choose_mu(3);
  CHECK(mu3 == std::vector<Rational>{Rational(1, 6), Rational(1, 3), Rational(1, 2)});
  CHECK(denominator_lcm(mu3) == 6);

  for (int64_t k = 1; k <= 20; ++k) {
    Rational sum = 0;
    for (const auto& m : choose_mu(k)) sum += m;
    REQUIRE(sum == 1);
  }
}

TEST_CASE("derived counts") {
  DerivedCounts d27 = derive_counts(2, 7, choose_mu(2));
  CHECK(d27.n0 == 1);
  CHECK(d27.counts.entries == std::vector<int64_t>{2, 4});

  DerivedCounts d312 = derive_counts(3, 12, choose_mu(3));
  CHECK(d312.n0 == 0);
  CHECK(d312.counts.entries == std::vector<int64_t>{2, 4, 6});

  CHECK_THROWS_AS(derive_counts(2, 2, choose_mu(2)), InputError);

  // counts are positive integers summing to n - n0 whenever n >= d_k
  for (int64_t k = 1; k <= 5; ++k) {
    std::vector<Rational> mu = choose_mu(k);
    int64_t dk = denominator_lcm(mu);
    for (int64_t n = dk; n <= dk + 25; ++n) {
      DerivedCounts d = derive_counts(k, n, mu);
      int64_t sum = 0;
      for (int64_t c : d.counts.entries) {
        REQUIRE(c >= 1);
        sum += c;
      }
      REQUIRE(sum == n - d.n0);
    }
  }
}

TEST_CASE("minor basis values") {
  std::vector<BigInt> b24 = minor_basis(2, 4, make_counts(4, {1, 1}));
  CHECK(b24 == std::vector<BigInt>{2, 2});

  // single row: ambient 4 with one minus left, permanent 4 - 2 = 2
  std::vector<BigInt> b15 = minor_basis(1, 5, make_counts(5, {2}));
  CHECK(b15 == std::vector<BigInt>{2});

  CHECK_THROWS_AS(minor_basis(2, 4, make_counts(4, {0, 2})), InputError);
}

TEST_CASE("minor basis agrees with engine minors of the stacked matrix") {
  for (int64_t k = 1; k <= 3; ++k) {
    std::vector<Rational> mu = choose_mu(k);
    int64_t dk = denominator_lcm(mu);
    for (int64_t n = std::max(dk, k + 1); n <= 10; ++n) {
      DerivedCounts d = derive_counts(k, n, mu);
      SignMatrix b = make_block_matrix(d.counts);
      SignMatrix stacked = concat_rows(SignMatrix::all_plus(1, n), b);
      std::vector<BigInt> basis = minor_basis(k, n, d.counts);
      // removing a column from block i realizes basis[i]
      int64_t col = d.n0;
      for (int64_t i = 0; i < k; ++i) {
        REQUIRE(permanent_minor(stacked, 0, col) == basis[static_cast<size_t>(i)]);
        col += d.counts.entries[static_cast<size_t>(i)];
      }
      if (d.n0 > 0)
        REQUIRE(permanent_minor(stacked, 0, 0) == plus_block_minor(n, d.counts));
    }
  }
}

TEST_CASE("progression value sets") {
  GapValueSet g = gamma_values({BigInt(2), BigInt(2)}, {1, 1});
  CHECK(g.values == std::vector<BigInt>{0, 2, 4});
  CHECK(g.box_size == 4);

  GapValueSet line = gamma_values({BigInt(1)}, {6});
  CHECK(line.values.size() == 7);
  CHECK(line.values.front() == 0);
  CHECK(line.values.back() == 6);

  // cardinality never exceeds the box size; permuting dimensions is neutral
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    size_t dims = 1 + rng() % 3;
    std::vector<BigInt> basis;
    std::vector<int64_t> limits;
    for (size_t d = 0; d < dims; ++d) {
      basis.push_back(BigInt(static_cast<int64_t>(rng() % 9) - 4));
      limits.push_back(static_cast<int64_t>(rng() % 4));
    }
    GapValueSet a = gamma_values(basis, limits);
    REQUIRE(BigInt(a.values.size()) <= a.box_size);
    std::vector<size_t> perm(dims);
    for (size_t d = 0; d < dims; ++d) perm[d] = d;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<BigInt> basis_p;
    std::vector<int64_t> limits_p;
    for (size_t d : perm) {
      basis_p.push_back(basis[d]);
      limits_p.push_back(limits[d]);
    }
    REQUIRE(gamma_values(basis_p, limits_p).values == a.values);
  }
}

TEST_CASE("progression descriptors: offset, size, properness") {
  GapDescriptor g{BigInt(5), {BigInt(10), BigInt(1)}, {3, 4}};
  CHECK(g.size() == 12);
  GapValueSet values = gap_values(g);
  CHECK(values.proper());  // steps 10 and 1 with limits 3, 4 cannot collide
  CHECK(values.values.front() == 5);
  CHECK(values.values.back() == 5 + 2 * 10 + 3);

  // step 2 against step 4 collides: 2*2 + 0 = 0 + 4*1
  GapDescriptor collide{BigInt(0), {BigInt(2), BigInt(4)}, {3, 3}};
  CHECK(!gap_values(collide).proper());

  CHECK_THROWS_AS(gap_values(GapDescriptor{BigInt(0), {BigInt(1)}, {0}}), InputError);
}

TEST_CASE("progression enumeration is worker-count independent") {
  std::vector<BigInt> basis{BigInt(7), BigInt(-3), BigInt(11)};
  std::vector<int64_t> limits{5, 6, 4};
  GapValueSet one = gamma_values(basis, limits, 0, 1);
  GapValueSet four = gamma_values(basis, limits, 0, 4);
  CHECK(one.values == four.values);
}

TEST_CASE("affine transform identity") {
  SignMatrix b = make_block_matrix(derive_counts(2, 6, choose_mu(2)).counts);

  std::vector<int> all_plus(6, 1);
  TransformCheck plus = affine_transform_check(all_plus, b);
  CHECK(plus.ok);
  CHECK(plus.indicator_row_value == 0);  // zero row kills every term

  std::vector<int> all_minus(6, -1);
  TransformCheck minus = affine_transform_check(all_minus, b);
  CHECK(minus.ok);
  CHECK(minus.sign_row_value == -minus.all_plus_row_value);  // row negation

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> a(6);
    for (auto& v : a) v = (rng() & 1) ? -1 : 1;
    REQUIRE(affine_transform_check(a, b).ok);
  }
}

TEST_CASE("scaled coefficient maxima") {
  CHECK(compute_mk(1, choose_mu(1)).value == 2);
  MkResult m2 = compute_mk(2, choose_mu(2));
  CHECK(m2.value == 80);
  CHECK(m2.argmax_n0 == 1);
  CHECK(compute_mk(3, choose_mu(3)).value == 14160);
  for (int64_t k = 1; k <= 6; ++k) REQUIRE(compute_mk(k, choose_mu(k)).within_bound);
}

TEST_CASE("constants pipeline") {
  ConstructionParams p3 = constants(3);
  CHECK(p3.d_k == 6);
  CHECK(p3.scale == 216);
  CHECK(p3.delta_k == Rational(1, 4 * 14160));
  CHECK(p3.delta_k < Rational(1, 6));  // strictly below mu_1
  CHECK(p3.eps_k == p3.delta_k);

  ConstructionParams p4 = constants(4);
  CHECK(p4.eps_k == p4.delta_k * p4.delta_k);

  for (int64_t k = 1; k <= 6; ++k) {
    ConstructionParams p = constants(k);
    REQUIRE(p.m_k_within_bound);
    REQUIRE(p.delta_within_bound);
  }
}

TEST_CASE("box certification") {
  ConstructionParams p3 = constants(3);
  DerivedCounts d = derive_counts(3, 300, p3.mu);
  std::vector<BigInt> basis = minor_basis(3, 300, d.counts);

  // explicit side 0: a single point, trivially proper
  BoxCertificate origin = proper_subbox(p3, 300, basis, {1}, d.counts.entries, 0);
  CHECK(origin.proper);
  CHECK(origin.point_count == 1);

  BoxCertificate box = proper_subbox(p3, 300, basis, {1}, d.counts.entries, 20);
  CHECK(box.proper);
  CHECK(box.point_count == 21);
  CHECK(!box.default_side);

  // default side is vacuous at this n; the report points at the threshold
  BoxCertificate vac = proper_subbox(p3, 300, basis, {1}, d.counts.entries, -1);
  CHECK(vac.vacuous);
  CHECK(vac.minimal_n == 56640);  // 1/delta_3
  CHECK(vac.point_count == 1);
  CHECK(vac.meets_eps_bound);  // (delta_3 n)^(k-2) < 1 <= 1

  // an engineered dependent basis trips the collision detector
  BoxCertificate bad = proper_subbox(p3, 300, {BigInt(2), BigInt(4), BigInt(1000)}, {1, 2},
                                     d.counts.entries, 2);
  CHECK(!bad.proper);
  REQUIRE(bad.collision.has_value());
  // both reported points replay to the same value
  BigInt va = 2 * bad.collision->first[0] + 4 * bad.collision->first[1];
  BigInt vb = 2 * bad.collision->second[0] + 4 * bad.collision->second[1];
  CHECK(va == vb);
  CHECK(va == bad.collision_value);

  // side beyond the coordinate limit is rejected
  CHECK_THROWS_AS(proper_subbox(p3, 300, basis, {1}, d.counts.entries, 51), InputError);
}

TEST_CASE("box enumeration is worker-count independent") {
  ConstructionParams p4 = constants(4);
  DerivedCounts d = derive_counts(4, 300, p4.mu);
  std::vector<BigInt> basis = minor_basis(4, 300, d.counts);
  BoxCertificate one = proper_subbox(p4, 300, basis, {1, 2}, d.counts.entries, 12, 0, 1);
  BoxCertificate four = proper_subbox(p4, 300, basis, {1, 2}, d.counts.entries, 12, 0, 4);
  CHECK(one.proper == four.proper);
  CHECK(one.point_count == four.point_count);
}

TEST_CASE("direct sign-row enumeration matches the extended progression") {
  // k = 2, n = 7 has a nonzero residue, so the all-plus block contributes a
  // progression dimension of its own.
  std::vector<Rational> mu = choose_mu(2);
  DerivedCounts d = derive_counts(2, 7, mu);
  SignMatrix b = make_block_matrix(d.counts);

  std::vector<BigInt> direct = sign_row_value_set(b);
  CHECK(direct.size() == 14);

  std::vector<BigInt> basis = minor_basis(2, 7, d.counts);
  CHECK(plus_block_minor(7, d.counts) == 2);
  CHECK(basis == std::vector<BigInt>{-4, 4});

  std::vector<BigInt> ext_basis{plus_block_minor(7, d.counts)};
  ext_basis.insert(ext_basis.end(), basis.begin(), basis.end());
  std::vector<int64_t> ext_limits{d.n0};
  ext_limits.insert(ext_limits.end(), d.counts.entries.begin(), d.counts.entries.end());
  GapValueSet ext = gamma_values(ext_basis, ext_limits);
  CHECK(ext.values.size() == direct.size());

  GapValueSet restricted = gamma_values(basis, d.counts.entries);
  CHECK(restricted.values.size() == 7);

  // the affine map v -> per(j * b) - 2v carries the progression onto the
  // direct value set
  BigInt all_plus = permanent_auto(concat_rows(SignMatrix::all_plus(1, 7), b));
  std::set<BigInt> mapped;
  for (const BigInt& g : ext.values) mapped.insert(all_plus - 2 * g);
  CHECK(std::vector<BigInt>(mapped.begin(), mapped.end()) == direct);
}

TEST_CASE("lower-bound report at a documented side") {
  LowerBoundReport report = lower_bound_report(3, 300, 20);
  CHECK(report.n0 == 0);
  CHECK(report.basis == std::vector<BigInt>{29706, 29106, 68506});
  CHECK(report.certificate.passed);
  CHECK(report.box.proper);
  CHECK(report.certified_distinct == 21);
  CHECK(report.meets_bound);  // 21 >= 300/56640
}

TEST_CASE("plug-in rule arithmetic") {
  PlugInReport small = main2_plugin(1000000, 0.1);
  CHECK(small.k == 0);
  CHECK(small.vacuous);

  PlugInReport big = main2_plugin(1000000000, 1.0);
  CHECK(big.k == 6);
  CHECK(big.exponent == 4);
  CHECK(!big.vacuous);
  CHECK(big.bound > 0);

  CHECK_THROWS_AS(main2_plugin(2, 0.1), InputError);
}
