#include <gtest/gtest.h>

#include "qseries/oracle.hpp"
#include "qseries/qfunctions.hpp"

namespace qseries {
namespace {

constexpr std::size_t kN = 2000;

TEST(Oracle, PartitionExamples) {
  const auto p = oracle::count_partitions(16);
  std::vector<long> head;
  for (std::size_t n = 0; n < 6; ++n) head.push_back(p[n].get_si());
  EXPECT_EQ(head, (std::vector<long>{1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(p[4], 5);
  EXPECT_EQ(p[9], 30);
  EXPECT_EQ(p[15], 176);
}

TEST(Oracle, PartitionsMatchPentagonalRecurrence) {
  const auto p = oracle::count_partitions(300);
  for (std::size_t n = 1; n < 300; ++n) {
    mpz_class sum = 0;
    for (long k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      sum += sign * p[n - g1];
      const std::size_t g2 = k * (3 * k + 1) / 2;
      if (g2 <= n) sum += sign * p[n - g2];
    }
    ASSERT_EQ(sum, p[n]) << n;
  }
}

TEST(Oracle, RegularExamples) {
  const auto b2 = oracle::count_regular(2, 6);
  std::vector<long> v;
  for (std::size_t n = 0; n < 6; ++n) v.push_back(b2[n].get_si());
  EXPECT_EQ(v, (std::vector<long>{1, 1, 1, 2, 2, 3}));
  EXPECT_EQ(oracle::count_regular(15, 16)[15], 175);
  const auto p = oracle::count_partitions(30);
  const auto b40 = oracle::count_regular(40, 30);
  for (std::size_t n = 0; n < 30; ++n) EXPECT_EQ(b40[n], p[n]);
  EXPECT_THROW(oracle::count_regular(1, 5), SeriesError);
}

TEST(Oracle, BipartitionExamples) {
  const auto b = oracle::count_bipartitions(2, 15, 9);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], 2);
  EXPECT_EQ(b[2], 4);
  EXPECT_EQ(b[8] % 5, 0);
  EXPECT_THROW(oracle::count_bipartitions(1, 15, 5), SeriesError);
}

TEST(Oracle, LatticeExamples) {
  const auto a = oracle::lattice_a(8);
  std::vector<long> v;
  for (std::size_t n = 0; n < 8; ++n) v.push_back(a[n].get_si());
  EXPECT_EQ(v, (std::vector<long>{1, 6, 0, 6, 6, 0, 0, 12}));
}

TEST(Oracle, NaiveProductsAgreeWithConstructors) {
  EXPECT_EQ(oracle::naive_euler(1, 13), euler_f(1, 13));
  EXPECT_EQ(oracle::bilateral_theta(2, 5, 8), ramanujan_theta({2, 5}, 8));
}

TEST(OracleEquivalence, PartitionsToTwoThousand) {
  const auto p = oracle::count_partitions(kN);
  const auto s = pk_series(-1, kN);
  for (std::size_t n = 0; n < kN; ++n) ASSERT_EQ(s.coeff(n), p[n]) << n;
}

class RegularEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RegularEquivalence, ToTwoThousand) {
  const std::size_t l = GetParam();
  const auto b = oracle::count_regular(l, kN);
  const auto s = regular_series(l, kN);
  for (std::size_t n = 0; n < kN; ++n) ASSERT_EQ(s.coeff(n), b[n]) << n;
}

INSTANTIATE_TEST_SUITE_P(Levels, RegularEquivalence,
                         ::testing::Values(2, 3, 5, 7, 11, 15, 17, 27, 243));

class BipartitionEquivalence
    : public ::testing::TestWithParam<std::pair<std::size_t, std::size_t>> {};

TEST_P(BipartitionEquivalence, ToTwoThousand) {
  const auto [s, t] = GetParam();
  const auto b = oracle::count_bipartitions(s, t, kN);
  const auto series = bipartition_series(s, t, kN);
  for (std::size_t n = 0; n < kN; ++n) ASSERT_EQ(series.coeff(n), b[n]) << n;
}

INSTANTIATE_TEST_SUITE_P(
    Families, BipartitionEquivalence,
    ::testing::Values(std::pair<std::size_t, std::size_t>{2, 15},
                      std::pair<std::size_t, std::size_t>{7, 11},
                      std::pair<std::size_t, std::size_t>{27, 11},
                      std::pair<std::size_t, std::size_t>{243, 17}));

}  // namespace
}  // namespace qseries
