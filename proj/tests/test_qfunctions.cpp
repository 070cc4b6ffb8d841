#include <gtest/gtest.h>

#include "qseries/oracle.hpp"
#include "qseries/qexpr.hpp"
#include "qseries/qfunctions.hpp"
#include "support.hpp"

namespace qseries {
namespace {

using testing::as_longs;

const auto Z = CoefficientRing::integers();

Series eval(const char* text, std::size_t order,
            CoefficientRing ring = CoefficientRing::integers()) {
  return qexpr::evaluate(qexpr::parse(text), {order, ring});
}

TEST(EulerF, PentagonalPrefix) {
  EXPECT_EQ(as_longs(euler_f(1, 13)),
            (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
  EXPECT_EQ(as_longs(euler_f(2, 5)), (std::vector<long>{1, 0, -1, 0, -1}));
  EXPECT_EQ(as_longs(euler_f(1, 1)), (std::vector<long>{1}));
}

TEST(EulerF, MatchesNaiveProduct) {
  for (std::size_t k = 1; k <= 50; ++k) {
    for (std::size_t n : {1u, 2u, 7u, 50u, 123u, 500u}) {
      ASSERT_EQ(euler_f(k, n), oracle::naive_euler(k, n))
          << "k=" << k << " N=" << n;
    }
  }
}

TEST(EulerF, IsSubstitutedF1) {
  for (std::size_t k : {2u, 3u, 7u, 49u}) {
    const std::size_t n = 300;
    EXPECT_EQ(euler_f(k, n),
              substitute_power(euler_f(1, (n + k - 1) / k), k, n));
  }
}

TEST(EulerF, ModularRing) {
  const auto m = CoefficientRing::modulo(7);
  EXPECT_EQ(euler_f(3, 200, m), reduce_mod(euler_f(3, 200), 7));
}

TEST(PkSeries, Examples) {
  EXPECT_EQ(as_longs(pk_series(-1, 10)),
            (std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30}));
  EXPECT_EQ(pk_series(5, 4).coeff(3), 10);
  EXPECT_EQ(pk_series(9, 5).coeff(4), -90);
  EXPECT_THROW(pk_series(0, 5), SeriesError);
}

TEST(RamanujanTheta, Examples) {
  EXPECT_EQ(as_longs(ramanujan_theta({1, 6}, 8)),
            (std::vector<long>{1, -1, 0, 0, 0, 0, -1, 0}));
  const auto t34 = ramanujan_theta({3, 4}, 8);
  EXPECT_EQ(as_longs(t34), (std::vector<long>{1, 0, 0, -1, -1, 0, 0, 0}));
  EXPECT_EQ(ramanujan_theta({2, 5}, 8), oracle::bilateral_theta(2, 5, 8));
}

TEST(RamanujanTheta, OneTwoIsEulerProduct) {
  for (std::size_t n : {1u, 5u, 100u, 1000u}) {
    EXPECT_EQ(ramanujan_theta({1, 2}, n), euler_f(1, n));
    EXPECT_EQ(ramanujan_theta({2, 1}, n), euler_f(1, n));
  }
}

TEST(RamanujanTheta, MatchesBilateralOracle) {
  for (std::size_t a = 1; a <= 7; ++a) {
    for (std::size_t b = 1; b <= 7; ++b) {
      ASSERT_EQ(ramanujan_theta({a, b}, 400), oracle::bilateral_theta(a, b, 400))
          << a << "," << b;
    }
  }
}

TEST(SepticQuotients, UnitConstantTerms) {
  const auto abc = septic_abc(50);
  EXPECT_EQ(abc.A.coeff(0), 1);
  EXPECT_EQ(abc.B.coeff(0), 1);
  EXPECT_EQ(abc.C.coeff(0), 1);
  EXPECT_EQ(abc.A * euler_f(2, 50), ramanujan_theta({3, 4}, 50));
  EXPECT_EQ(abc.B * euler_f(2, 50), ramanujan_theta({2, 5}, 50));
  EXPECT_EQ(abc.C * euler_f(2, 50), ramanujan_theta({1, 6}, 50));
}

TEST(SepticQuotients, ThreeQIdentity) {
  const std::size_t n = 200;
  const auto lhs = eval("B^5/(A*C^4) - A^5/(B^4*C) - q^3*C^5/(A^4*B)", n);
  EXPECT_EQ(lhs, Series::monomial(Z, n, 1, 3));
}

TEST(SepticQuotients, SeventhPowers) {
  const std::size_t n = 200;
  EXPECT_EQ(eval("B^7/C^7 - q*A^7/B^7 + q^5*C^7/A^7", n),
            eval("14*q*f1^4/f7^4 + f1^8/f7^8 + 57*q^2", n));
}

TEST(SepticQuotients, SevenDissectionOfF1) {
  const std::size_t n = 300;
  EXPECT_EQ(
      euler_f(1, n),
      eval("f49*(B(q^7)/C(q^7) - q*A(q^7)/B(q^7) - q^2 + q^5*C(q^7)/A(q^7))",
           n));
}

TEST(BorweinA, Examples) {
  EXPECT_EQ(as_longs(borwein_a(1, 8)),
            (std::vector<long>{1, 6, 0, 6, 6, 0, 0, 12}));
  EXPECT_EQ(borwein_a(3, 90), substitute_power(borwein_a(1, 30), 3));
}

TEST(BorweinA, MatchesLatticeOracle) {
  const auto lattice = oracle::lattice_a(600);
  const auto a = borwein_a(1, 600);
  for (std::size_t n = 0; n < 600; ++n) ASSERT_EQ(a.coeff(n), lattice[n]) << n;
}

TEST(BorweinA, DivisorFormula) {
  const auto formula = oracle::cubic_divisor_formula(200);
  const auto a = borwein_a(1, 200);
  for (std::size_t n = 0; n < 200; ++n) ASSERT_EQ(a.coeff(n), formula[n]) << n;
}

TEST(BorweinA, CubicIdentities) {
  const std::size_t n = 400;
  EXPECT_EQ(borwein_a(1, n), eval("a(q^3) + 6*q*f9^3/f3", n));
  EXPECT_EQ(power(euler_f(1, n), 3), eval("f3*a(q^3) - 3*q*f9^3", n));
}

TEST(RegularSeries, Examples) {
  EXPECT_EQ(as_longs(regular_series(2, 6)),
            (std::vector<long>{1, 1, 1, 2, 2, 3}));
  const auto b7 = regular_series(7, 300);
  for (std::size_t i = 0; i < 300; ++i) EXPECT_GE(b7.coeff(i), 0);
  EXPECT_EQ(regular_series(50, 40), invert(euler_f(1, 40)));
  EXPECT_THROW(regular_series(1, 10), SeriesError);
}

TEST(BipartitionSeries, SmallValuesMatchEnumeration) {
  // B_{2,15}(1) = 2 from (1, {}) and ({}, 1); B_{2,15}(2) = 4.
  EXPECT_EQ(as_longs(bipartition_series(2, 15, 3)),
            (std::vector<long>{1, 2, 4}));
  const auto oracle_values = oracle::count_bipartitions(2, 15, 3);
  for (std::size_t n = 0; n < 3; ++n) {
    EXPECT_EQ(bipartition_series(2, 15, 3).coeff(n), oracle_values[n]);
  }
}

TEST(BipartitionSeries, KnownCongruenceAtEight) {
  const auto b = bipartition_series(2, 15, 9);
  EXPECT_EQ(b.coeff(8) % 5, 0);
  EXPECT_EQ(bipartition_series(2, 15, 9, CoefficientRing::modulo(5)).coeff(8),
            0);
}

TEST(BipartitionSeries, IsConvolutionOfRegularSeries) {
  for (auto [s, t] : {std::pair{2, 15}, {7, 11}, {27, 11}, {243, 17}}) {
    EXPECT_EQ(bipartition_series(s, t, 400),
              regular_series(s, 400) * regular_series(t, 400));
  }
}

TEST(BipartitionSeries, ModularMatchesExact) {
  const auto m = CoefficientRing::modulo(11);
  EXPECT_EQ(bipartition_series(7, 11, 500, m),
            reduce_mod(bipartition_series(7, 11, 500), 11));
}

}  // namespace
}  // namespace qseries
