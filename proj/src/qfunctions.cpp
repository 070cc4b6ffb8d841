#include "qseries/qfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseries {

namespace {

// Smallest integer j >= 0 with j*j >= x, plus the +2 margin used for all
// enumeration bounds in this file.
std::size_t root_bound(double x) {
  auto j = static_cast<std::size_t>(std::ceil(std::sqrt(std::max(x, 0.0))));
  while (static_cast<double>(j) * static_cast<double>(j) < x) ++j;
  return j + 2;
}

void check_boundary(bool ok, const char* what) {
  if (!ok) {
    throw std::logic_error(std::string(what) +
                           ": enumeration bound does not cover the order");
  }
}

}  // namespace

Series euler_f(std::size_t k, std::size_t order, CoefficientRing ring) {
  if (k == 0) throw SeriesError("euler_f: k must be positive");
  if (order == 0) throw SeriesError("series order must be positive");
  std::vector<mpz_class> c(order, 0);
  c[0] = 1;
  // k*j(3j-1)/2 >= k*j^2 for j >= 1.
  const std::size_t j_max =
      root_bound(static_cast<double>(order) / static_cast<double>(k));
  auto pentagonal = [k](std::size_t j, bool negative) {
    return negative ? k * (j * (3 * j + 1) / 2) : k * (j * (3 * j - 1) / 2);
  };
  check_boundary(pentagonal(j_max, false) >= order, "euler_f");
  for (std::size_t j = 1; j < j_max; ++j) {
    const int sign = (j % 2 == 0) ? 1 : -1;
    for (bool negative : {false, true}) {
      const std::size_t e = pentagonal(j, negative);
      if (e < order) c[e] += sign;
    }
  }
  return Series::from_coefficients(ring, std::move(c));
}

Series pk_series(long k, std::size_t order, CoefficientRing ring) {
  if (k == 0) throw SeriesError("pk_series: k must be nonzero");
  return power(euler_f(1, order, ring), k);
}

Series ramanujan_theta(ThetaSpec spec, std::size_t order,
                       CoefficientRing ring) {
  if (spec.a == 0 || spec.b == 0) {
    throw SeriesError("ramanujan_theta: exponents must be positive");
  }
  if (order == 0) throw SeriesError("series order must be positive");
  const auto a = static_cast<long long>(spec.a);
  const auto b = static_cast<long long>(spec.b);
  auto exponent = [&](long long n) {
    return a * n * (n + 1) / 2 + b * n * (n - 1) / 2;
  };
  // exponent(n) >= min(a,b) n^2 / 2
  const auto n_max = static_cast<long long>(root_bound(
      2.0 * static_cast<double>(order) /
      static_cast<double>(std::min(spec.a, spec.b))));
  const auto N = static_cast<long long>(order);
  check_boundary(exponent(n_max) >= N && exponent(-n_max) >= N,
                 "ramanujan_theta");

  std::vector<mpz_class> c(order, 0);
  for (long long n = -n_max; n <= n_max; ++n) {
    const long long e = exponent(n);
    if (e < N) c[static_cast<std::size_t>(e)] += (n % 2 == 0) ? 1 : -1;
  }
  return Series::from_coefficients(ring, std::move(c));
}

SepticQuotients septic_abc(std::size_t order, CoefficientRing ring) {
  const Series f2 = euler_f(2, order, ring);
  return SepticQuotients{
      divide(ramanujan_theta({3, 4}, order, ring), f2),
      divide(ramanujan_theta({2, 5}, order, ring), f2),
      divide(ramanujan_theta({1, 6}, order, ring), f2),
  };
}

Series borwein_a(std::size_t k, std::size_t order, CoefficientRing ring) {
  if (k == 0) throw SeriesError("borwein_a: k must be positive");
  if (order == 0) throw SeriesError("series order must be positive");
  // m^2 + mn + n^2 >= (3/4) max(|m|,|n|)^2
  const auto M = static_cast<long long>(root_bound(
      4.0 * static_cast<double>(order) / (3.0 * static_cast<double>(k))));
  const auto K = static_cast<long long>(k);
  const auto N = static_cast<long long>(order);
  check_boundary(K * ((3 * M * M + 3) / 4) >= N, "borwein_a");

  std::vector<mpz_class> c(order, 0);
  for (long long m = -M; m <= M; ++m) {
    for (long long n = -M; n <= M; ++n) {
      const long long e = K * (m * m + m * n + n * n);
      if (e < N) c[static_cast<std::size_t>(e)] += 1;
    }
  }
  return Series::from_coefficients(ring, std::move(c));
}

Series regular_series(std::size_t l, std::size_t order, CoefficientRing ring) {
  if (l < 2) throw SeriesError("regular_series: l must exceed 1");
  return divide(euler_f(l, order, ring), euler_f(1, order, ring));
}

Series bipartition_series(std::size_t s, std::size_t t, std::size_t order,
                          CoefficientRing ring) {
  if (s < 2 || t < 2) {
    throw SeriesError("bipartition_series: s and t must exceed 1");
  }
  const Series f1 = euler_f(1, order, ring);
  // Divides twice by the sparse f_1, O(N^1.5) overall.
  Series num = mul(euler_f(s, order, ring), euler_f(t, order, ring));
  return divide(divide(num, f1), f1);
}

}  // namespace qseries
