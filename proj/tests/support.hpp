#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qseries/series.hpp"

namespace qseries::testing {

inline Series series_of(std::initializer_list<long> coeffs,
                        CoefficientRing ring = CoefficientRing::integers()) {
  std::vector<mpz_class> v;
  for (long c : coeffs) v.emplace_back(c);
  return Series::from_coefficients(ring, std::move(v));
}

inline std::vector<long> as_longs(const Series& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(c.get_si());
  return out;
}

/// Random series with coefficients in [-bound, bound]; the constant term is
/// forced to `c0` when nonzero.
inline Series random_series(std::mt19937_64& rng, std::size_t order,
                            CoefficientRing ring = CoefficientRing::integers(),
                            long bound = 20, long c0 = 0) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<mpz_class> v(order);
  for (auto& c : v) c = dist(rng);
  if (c0 != 0) v[0] = c0;
  return Series::from_coefficients(ring, std::move(v));
}

}  // namespace qseries::testing
