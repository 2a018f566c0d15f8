#include "frobenius/graded_hilbert.hpp"

#include <gtest/gtest.h>

#include "frobenius/semigroup.hpp"
#include "oracles.hpp"

using namespace frobenius;

TEST(TruncatedSeries, GeometricAndProducts) {
  const auto g = TruncatedSeries::geometric(6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(g[n], 1);

  // (1 - q) * 1/(1 - q) = 1
  auto one_minus_q = TruncatedSeries::from_polynomial(IntPolynomial({1, -1}), 6);
  const auto one = one_minus_q * g;
  EXPECT_EQ(one, TruncatedSeries::from_polynomial(IntPolynomial::constant(1), 6));

  // Division by 1 - q^m equals multiplication by the geometric series.
  auto s = TruncatedSeries::from_polynomial(IntPolynomial({3, 0, -1, 4}), 20);
  auto via_product = s * TruncatedSeries::geometric(3, 20);
  EXPECT_EQ(s.divide_by_one_minus_power(3), via_product);

  EXPECT_THROW(TruncatedSeries(3) + TruncatedSeries(4), DomainError);
  EXPECT_THROW(TruncatedSeries::geometric(0, 3), DomainError);
}

TEST(TruncatedSeries, Format) {
  auto s = TruncatedSeries::from_polynomial(IntPolynomial({1, 0, -2, 5}), 3);
  EXPECT_EQ(to_string(s), "1 + 0*q - 2*q^2 + 5*q^3 + O(q^4)");
  EXPECT_EQ(to_string(TruncatedSeries(0)), "0 + O(q^1)");
}

TEST(PartitionCount, Examples) {
  EXPECT_EQ(partition_count(3, 5, 0), 1u);
  EXPECT_EQ(partition_count(3, 5, 15), 2u);
  for (std::int64_t n = 0; n < 50; ++n) EXPECT_EQ(partition_count(1, 1, n), static_cast<std::uint64_t>(n + 1));
  EXPECT_EQ(partition_count(3, 5, -1), 0u);
  EXPECT_THROW(partition_count(0, 5, 3), DomainError);
}

TEST(PartitionCount, MatchesDoubleLoop) {
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 5}, {4, 6}, {2, 2}, {7, 3}, {1, 9}})
    for (std::int64_t n = 0; n <= 200; ++n) ASSERT_EQ(partition_count(a, b, n), oracle::naive_partitions(a, b, n));
}

TEST(EnumerateBasis, Examples) {
  EXPECT_EQ(enumerate_basis(3, 5, 8), (std::vector<Monomial2>{{1, 1}}));
  EXPECT_TRUE(enumerate_basis(3, 5, 7).empty());
  EXPECT_EQ(enumerate_basis(3, 5, 15), (std::vector<Monomial2>{{0, 3}, {5, 0}}));
  for (std::int64_t n = 0; n < 60; ++n) EXPECT_EQ(enumerate_basis(4, 6, n).size(), partition_count(4, 6, n));
}

TEST(GradedDims, Examples) {
  const auto d = GradedDims::tabulate(3, 5, 20);
  EXPECT_EQ(d.dim_e(15), 2u);
  EXPECT_EQ(d.dim_r(15), 1u);
  EXPECT_EQ(d.dim_k(15), 1u);
  EXPECT_EQ(d.dim_e(7), 0u);
  EXPECT_EQ(d.dim_r(7), 0u);
  EXPECT_EQ(d.dim_k(7), 0u);
  for (auto [a, b] : oracle::coprime_pairs(2, 9)) {
    const auto t = GradedDims::tabulate(a, b, 0);
    EXPECT_EQ(t.dim_e(0), 1u);
    EXPECT_EQ(t.dim_r(0), 1u);
    EXPECT_EQ(t.dim_k(0), 0u);
  }
  EXPECT_THROW(GradedDims::tabulate(4, 6, 10), DomainError);
}

TEST(RankNullity, Examples) {
  EXPECT_TRUE(rank_nullity_check(3, 5, 45));
  EXPECT_TRUE(rank_nullity_check(2, 3, 18));
  EXPECT_TRUE(rank_nullity_check(2, 7, 42));
  EXPECT_THROW(rank_nullity_check(6, 9, 10), DomainError);
}

TEST(RankNullity, SweepAndInjectivityBelowAb) {
  for (auto [a, b] : oracle::coprime_pairs(2, 20)) {
    ASSERT_TRUE(rank_nullity_check(a, b, 3 * a * b)) << a << "," << b;
    for (std::int64_t n = 0; n < a * b; ++n) ASSERT_LE(partition_count(a, b, n), 1u);
  }
}

TEST(SurjectivityWitness, Examples) {
  EXPECT_EQ(surjectivity_witness(3, 5, 8), (Monomial2{1, 1}));
  EXPECT_EQ(surjectivity_witness(3, 5, 0), (Monomial2{0, 0}));
  EXPECT_THROW(surjectivity_witness(3, 5, 7), DomainError);
  const auto t = SemigroupTable::build(GeneratorSet::validate({4, 9}));
  for (std::int64_t n = 0; n < 100; ++n) {
    if (!t.contains(n)) continue;
    const auto m = surjectivity_witness(4, 9, n);
    EXPECT_EQ(4 * m.i + 9 * m.j, n);
  }
}

TEST(HilbertSeries, ClosedForms) {
  const auto uni = hilbert_series(HilbertKind::univariate, 0, 0, 10).series;
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(uni[n], 1);

  const auto deg = hilbert_series(HilbertKind::full_ring_degree, 0, 0, 30).series;
  for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(deg[n], n + 1);

  const auto frob = hilbert_series(HilbertKind::full_ring_frobenius, 3, 5, 60);
  EXPECT_EQ(frob.closed_form, "1/((1-q^3)(1-q^5))");
  for (std::size_t n = 0; n <= 60; ++n) EXPECT_EQ(frob.series[n], oracle::naive_partitions(3, 5, n));

  const auto kernel = hilbert_series(HilbertKind::kernel, 3, 5, 20);
  EXPECT_EQ(kernel.closed_form, "q^15/((1-q^3)(1-q^5))");
  for (std::size_t n = 0; n <= 20; ++n)
    EXPECT_EQ(kernel.series[n], n < 15 ? 0 : oracle::naive_partitions(3, 5, n - 15)) << n;

  const auto ring = hilbert_series(HilbertKind::semigroup_ring, 3, 5, 10).series;
  const std::vector<int> expected{1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1};
  for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(ring[n], expected[n]);

  EXPECT_THROW(hilbert_series(HilbertKind::kernel, 4, 6, 10), DomainError);
  EXPECT_NO_THROW(hilbert_series(HilbertKind::univariate, 4, 6, 10));
}

TEST(HilbertSeries, KindNames) {
  for (auto k : {HilbertKind::full_ring_degree, HilbertKind::full_ring_frobenius, HilbertKind::semigroup_ring,
                 HilbertKind::kernel, HilbertKind::univariate})
    EXPECT_EQ(parse_hilbert_kind(to_string(k)), k);
  EXPECT_EQ(parse_hilbert_kind("nope"), std::nullopt);
}

TEST(HilbertSeries, PropertiesOverPairs) {
  for (auto [a, b] : oracle::coprime_pairs(2, 15)) {
    const std::size_t order = static_cast<std::size_t>(2 * a * b);
    const auto t = SemigroupTable::build(GeneratorSet::validate({a, b}));
    const auto ring = hilbert_series(HilbertKind::semigroup_ring, a, b, order).series;
    const auto full = hilbert_series(HilbertKind::full_ring_frobenius, a, b, order).series;
    const auto kernel = hilbert_series(HilbertKind::kernel, a, b, order).series;
    for (std::size_t n = 0; n <= order; ++n) {
      ASSERT_EQ(ring[n], t.contains(static_cast<std::int64_t>(n)) ? 1 : 0);
      const auto ab = static_cast<std::size_t>(a * b);
      ASSERT_EQ(kernel[n], n < ab ? Integer(0) : full[n - ab]);
    }
  }
}

TEST(SeriesIdentity, Examples) {
  EXPECT_TRUE(series_identity_check(3, 5, 100));
  EXPECT_TRUE(series_identity_check(2, 3, 50));
  EXPECT_TRUE(series_identity_check(4, 9, 200));
  EXPECT_THROW(series_identity_check(3, 5, 15), DomainError);
  EXPECT_THROW(series_identity_check(4, 6, 100), DomainError);
}

TEST(SeriesIdentity, Sweep) {
  for (auto [a, b] : oracle::coprime_pairs(2, 30))
    ASSERT_TRUE(series_identity_check(a, b, static_cast<std::size_t>(a * b + 10))) << a << "," << b;
}
