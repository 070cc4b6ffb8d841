#pragma once

// Named q-series: Euler products, Ramanujan theta functions, the septic
// quotients A, B, C, the cubic theta a(q), and partition generating
// functions.
//
// Convention: f(-q^k) in the classical literature is (q^k;q^k)_inf and is
// built with euler_f(k), never through ThetaSpec.

#include <cstddef>

#include "qseries/series.hpp"

namespace qseries {

/// f_k = prod_{m>=1} (1 - q^{mk}), expanded by the pentagonal number theorem.
Series euler_f(std::size_t k, std::size_t order,
               CoefficientRing ring = CoefficientRing::integers());

/// f_1^k for nonzero k; k = -1 gives the partition numbers.
Series pk_series(long k, std::size_t order,
                 CoefficientRing ring = CoefficientRing::integers());

/// Exponent pair (a, b) of the two-variable theta f(-q^a, -q^b).
struct ThetaSpec {
  std::size_t a = 1;
  std::size_t b = 1;

  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

/// sum_{n in Z} (-1)^n q^{a n(n+1)/2 + b n(n-1)/2}
Series ramanujan_theta(ThetaSpec spec, std::size_t order,
                       CoefficientRing ring = CoefficientRing::integers());

struct SepticQuotients {
  Series A;  // f(-q^3,-q^4) / f(-q^2)
  Series B;  // f(-q^2,-q^5) / f(-q^2)
  Series C;  // f(-q,-q^6)   / f(-q^2)
};

SepticQuotients septic_abc(std::size_t order,
                           CoefficientRing ring = CoefficientRing::integers());

/// a(q^k) where a(q) = sum_{m,n in Z} q^{m^2 + mn + n^2}.
Series borwein_a(std::size_t k, std::size_t order,
                 CoefficientRing ring = CoefficientRing::integers());

/// f_l / f_1: l-regular partitions.
Series regular_series(std::size_t l, std::size_t order,
                      CoefficientRing ring = CoefficientRing::integers());

/// f_s f_t / f_1^2: (s,t)-regular bipartitions B_{s,t}(n).
Series bipartition_series(std::size_t s, std::size_t t, std::size_t order,
                          CoefficientRing ring = CoefficientRing::integers());

}  // namespace qseries
