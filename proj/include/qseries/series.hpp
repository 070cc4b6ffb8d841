#pragma once

// Truncated formal power series in one variable q, over the integers or
// over Z/m.  A series of order N is known modulo q^N; every binary operation
// returns a series whose order is the minimum of its operands' orders (less
// any valuation consumed by a division), so the order of a result is always
// an honest statement of how far it is known.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace qseries {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient ring: exact integers (modulus 0) or residues modulo m >= 2.
class CoefficientRing {
 public:
  /// Largest supported modulus; residue products must fit in 64 bits.
  static constexpr std::uint64_t kMaxModulus = 0xFFFFFFFFull;

  constexpr CoefficientRing() = default;

  static constexpr CoefficientRing integers() { return CoefficientRing{}; }
  static CoefficientRing modulo(std::uint64_t m);

  constexpr std::uint64_t modulus() const { return modulus_; }
  constexpr bool is_exact() const { return modulus_ == 0; }

  std::string name() const;

  friend constexpr bool operator==(CoefficientRing, CoefficientRing) = default;

 private:
  std::uint64_t modulus_ = 0;
};

class Series {
 public:
  using Integers = std::vector<mpz_class>;
  using Residues = std::vector<std::uint64_t>;

  static Series zero(CoefficientRing ring, std::size_t order);
  static Series one(CoefficientRing ring, std::size_t order);
  /// c * q^exponent, truncated to `order`.
  static Series monomial(CoefficientRing ring, std::size_t order,
                         std::size_t exponent, const mpz_class& c = 1);
  /// Coefficients are reduced into [0, m) when the ring is modular.
  static Series from_coefficients(CoefficientRing ring,
                                  std::vector<mpz_class> coeffs);
  static Series from_residues(CoefficientRing ring, Residues residues);

  CoefficientRing ring() const { return ring_; }
  std::size_t order() const { return order_; }

  mpz_class coeff(std::size_t n) const;
  bool coeff_is_zero(std::size_t n) const;
  std::vector<mpz_class> coefficients() const;

  /// Index of the first nonzero coefficient, if any is known.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }
  std::size_t nonzero_count() const;

  /// Direct access to the underlying storage; exactly one is non-null.
  const Integers* integers() const { return std::get_if<Integers>(&data_); }
  const Residues* residues() const { return std::get_if<Residues>(&data_); }

  /// Copy of this series with one coefficient changed by `delta`.
  Series with_adjusted(std::size_t n, const mpz_class& delta) const;

  /// "1 - q - q^2 + ... + O(q^N)"
  std::string to_string(std::size_t max_terms = 12) const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  Series(CoefficientRing ring, std::size_t order,
         std::variant<Integers, Residues> data)
      : ring_(ring), order_(order), data_(std::move(data)) {}

  CoefficientRing ring_;
  std::size_t order_ = 0;
  std::variant<Integers, Residues> data_;

  friend struct SeriesAccess;
};

/// First index below min(a.order, b.order) at which a and b differ.
std::optional<std::size_t> first_mismatch(const Series& a, const Series& b);

Series add(const Series& a, const Series& b);
Series subtract(const Series& a, const Series& b);
Series negate(const Series& a);
Series mul(const Series& a, const Series& b);
Series scalar_mul(const Series& a, const mpz_class& c);

/// Multiplicative inverse; the constant term must be a unit of the ring.
Series invert(const Series& a);

/// a / b.  With v the valuation of b, b/q^v must have a unit constant term
/// and a must vanish below q^v; the result order drops by v.
Series divide(const Series& a, const Series& b);

/// a^e for any integer e; negative e requires a unit constant term.
Series power(const Series& a, long e);

/// Binary exponentiation over mul/invert.  Kept separately as the reference
/// route that the recurrence used by power() is tested against.
Series power_by_squaring(const Series& a, long e);

/// Coefficients p*n + r of a, reindexed by n.
Series extract(const Series& a, std::size_t p, std::size_t r);

/// a(q^k).  The natural order is a.order * k; `cap` truncates further.
Series substitute_power(const Series& a, std::size_t k,
                        std::optional<std::size_t> cap = std::nullopt);

/// q^t * a.  The natural order is a.order + t; `cap` truncates further.
Series shift(const Series& a, std::size_t t,
             std::optional<std::size_t> cap = std::nullopt);

Series truncate(const Series& a, std::size_t order);

/// Maps an exact series into Z/m.  Identity on a series already mod m.
Series reduce_mod(const Series& a, std::uint64_t m);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) {
  return subtract(a, b);
}
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) {
  return divide(a, b);
}

}  // namespace qseries
