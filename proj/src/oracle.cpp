#include "qseries/oracle.hpp"

namespace qseries::oracle {

namespace {

CountTable restricted_partitions(std::size_t N, std::size_t excluded_modulus) {
  CountTable t{std::vector<mpz_class>(N, 0)};
  if (N == 0) return t;
  t.values[0] = 1;
  for (std::size_t part = 1; part < N; ++part) {
    if (excluded_modulus != 0 && part % excluded_modulus == 0) continue;
    for (std::size_t n = part; n < N; ++n) t.values[n] += t.values[n - part];
  }
  return t;
}

}  // namespace

CountTable count_partitions(std::size_t N) {
  return restricted_partitions(N, 0);
}

CountTable count_regular(std::size_t l, std::size_t N) {
  if (l <= 1) throw SeriesError("count_regular: l must exceed 1");
  return restricted_partitions(N, l);
}

CountTable count_bipartitions(std::size_t s, std::size_t t, std::size_t N) {
  if (s <= 1 || t <= 1) {
    throw SeriesError("count_bipartitions: s and t must exceed 1");
  }
  const CountTable bs = count_regular(s, N);
  const CountTable bt = count_regular(t, N);
  CountTable out{std::vector<mpz_class>(N, 0)};
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_addmul(out.values[n].get_mpz_t(), bs.values[k].get_mpz_t(),
                 bt.values[n - k].get_mpz_t());
    }
  }
  return out;
}

Series naive_euler(std::size_t k, std::size_t N) {
  if (k == 0) throw SeriesError("naive_euler: k must be positive");
  std::vector<mpz_class> c(N, 0);
  if (N == 0) throw SeriesError("series order must be positive");
  c[0] = 1;
  for (std::size_t step = k; step < N; step += k) {
    // multiply in place by (1 - q^step)
    for (std::size_t n = N; n-- > step;) c[n] -= c[n - step];
  }
  return Series::from_coefficients(CoefficientRing::integers(), std::move(c));
}

CountTable lattice_a(std::size_t N) {
  CountTable t{std::vector<mpz_class>(N, 0)};
  // m^2 + mn + n^2 >= max(|m|,|n|)^2 * 3/4, so |m|,|n| <= 2 sqrt(N) suffices.
  long long bound = 1;
  while (bound * bound < 4 * static_cast<long long>(N)) ++bound;
  for (long long m = -bound; m <= bound; ++m) {
    for (long long n = -bound; n <= bound; ++n) {
      const long long e = m * m + m * n + n * n;
      if (e < static_cast<long long>(N)) t.values[static_cast<std::size_t>(e)] += 1;
    }
  }
  return t;
}

Series bilateral_theta(std::size_t a, std::size_t b, std::size_t N) {
  if (N == 0) throw SeriesError("series order must be positive");
  std::vector<mpz_class> c(N, 0);
  const auto A = static_cast<long long>(a);
  const auto B = static_cast<long long>(b);
  const auto limit = static_cast<long long>(N) + 2;
  for (long long n = -limit; n <= limit; ++n) {
    const long long e = A * n * (n + 1) / 2 + B * n * (n - 1) / 2;
    if (e >= 0 && e < static_cast<long long>(N)) {
      c[static_cast<std::size_t>(e)] += (n % 2 == 0) ? 1 : -1;
    }
  }
  return Series::from_coefficients(CoefficientRing::integers(), std::move(c));
}

CountTable cubic_divisor_formula(std::size_t N) {
  CountTable t{std::vector<mpz_class>(N, 0)};
  if (N == 0) return t;
  t.values[0] = 1;
  for (std::size_t n = 1; n < N; ++n) {
    long diff = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      if (d % 3 == 1) ++diff;
      if (d % 3 == 2) --diff;
    }
    t.values[n] = 6 * diff;
  }
  return t;
}

}  // namespace qseries::oracle
