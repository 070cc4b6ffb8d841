#pragma once

// Brute-force counterparts of the series constructors.  Nothing here uses
// series multiplication or inversion: counts are built by adding counts, so a
// defect in the series kernels cannot hide behind a matching defect here.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "qseries/series.hpp"

namespace qseries::oracle {

/// values[n] for n in [0, N).
struct CountTable {
  std::vector<mpz_class> values;

  std::size_t size() const { return values.size(); }
  const mpz_class& operator[](std::size_t n) const { return values[n]; }
};

/// p(0..N-1) by the coin-change recurrence over parts 1..N-1.
CountTable count_partitions(std::size_t N);

/// b_l(0..N-1): partitions with no part divisible by l.
CountTable count_regular(std::size_t l, std::size_t N);

/// B_{s,t}(n) = sum_k b_s(k) b_t(n-k).
CountTable count_bipartitions(std::size_t s, std::size_t t, std::size_t N);

/// Literal product prod_{mk < N} (1 - q^{mk}).
Series naive_euler(std::size_t k, std::size_t N);

/// Number of (m, n) in Z^2 with m^2 + mn + n^2 = j, for j < N.
CountTable lattice_a(std::size_t N);

/// Bilateral sum of (-1)^n q^{a n(n+1)/2 + b n(n-1)/2} over a wide n range.
Series bilateral_theta(std::size_t a, std::size_t b, std::size_t N);

/// 6 (d_{1,3}(n) - d_{2,3}(n)) for n >= 1 and 1 at n = 0, where d_{r,3}(n)
/// counts divisors of n congruent to r mod 3.
CountTable cubic_divisor_formula(std::size_t N);

}  // namespace qseries::oracle
