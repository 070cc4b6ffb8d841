#include "qseries/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qseries {

CoefficientRing CoefficientRing::modulo(std::uint64_t m) {
  if (m < 2 || m > kMaxModulus) {
    throw SeriesError("modulus must lie in [2, 2^32), got " +
                      std::to_string(m));
  }
  CoefficientRing ring;
  ring.modulus_ = m;
  return ring;
}

std::string CoefficientRing::name() const {
  return is_exact() ? std::string("Z") : "Z/" + std::to_string(modulus_);
}

struct SeriesAccess {
  static Series make(CoefficientRing ring, std::size_t order,
                     std::variant<Series::Integers, Series::Residues> data) {
    return Series(ring, order, std::move(data));
  }
  template <class Vec>
  static const Vec& get(const Series& s) {
    return std::get<Vec>(s.data_);
  }
};

namespace {

struct ExactArith {
  using Value = mpz_class;
  using Vec = Series::Integers;

  static bool is_zero(const Value& x) { return sgn(x) == 0; }
  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value from(const mpz_class& x) const { return x; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value neg(const Value& a) const { return -a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  void mac(Value& acc, const Value& a, const Value& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void msub(Value& acc, const Value& a, const Value& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  std::optional<Value> inverse(const Value& u) const {
    if (u == 1 || u == -1) return u;
    return std::nullopt;
  }
};

struct ModArith {
  using Value = std::uint64_t;
  using Vec = Series::Residues;

  std::uint64_t m;

  static bool is_zero(Value x) { return x == 0; }
  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value from(const mpz_class& x) const {
    return mpz_fdiv_ui(x.get_mpz_t(), m);
  }
  Value add(Value a, Value b) const {
    Value s = a + b;
    return s >= m ? s - m : s;
  }
  Value sub(Value a, Value b) const { return a >= b ? a - b : a + m - b; }
  Value neg(Value a) const { return a == 0 ? 0 : m - a; }
  Value mul(Value a, Value b) const { return (a * b) % m; }
  void mac(Value& acc, Value a, Value b) const { acc = (acc + a * b) % m; }
  void msub(Value& acc, Value a, Value b) const {
    acc = (acc + (m - a) * b) % m;
  }
  std::optional<Value> inverse(Value u) const {
    mpz_class inv;
    mpz_class uu(static_cast<unsigned long>(u));
    mpz_class mm(static_cast<unsigned long>(m));
    if (mpz_invert(inv.get_mpz_t(), uu.get_mpz_t(), mm.get_mpz_t()) == 0) {
      return std::nullopt;
    }
    return inv.get_ui();
  }
};

template <class F>
decltype(auto) with_arith(CoefficientRing ring, F&& f) {
  if (ring.is_exact()) return f(ExactArith{});
  return f(ModArith{ring.modulus()});
}

template <class Arith>
const typename Arith::Vec& data_of(const Series& s) {
  return SeriesAccess::get<typename Arith::Vec>(s);
}

template <class Arith>
Series make(CoefficientRing ring, typename Arith::Vec v) {
  const std::size_t order = v.size();
  return SeriesAccess::make(ring, order, std::move(v));
}

void require_same_ring(const Series& a, const Series& b, const char* op) {
  if (a.ring() != b.ring()) {
    throw SeriesError(std::string(op) + ": ring mismatch (" + a.ring().name() +
                      " vs " + b.ring().name() + ")");
  }
}

template <class Vec>
std::vector<std::size_t> nonzero_indices(const Vec& v, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(v[i] == 0)) idx.push_back(i);
  }
  return idx;
}

template <class Arith>
typename Arith::Vec mul_kernel(const Arith& ar, const typename Arith::Vec& a,
                               const typename Arith::Vec& b, std::size_t n) {
  auto nz_a = nonzero_indices(a, n);
  auto nz_b = nonzero_indices(b, n);
  const bool a_sparser = nz_a.size() <= nz_b.size();
  const auto& sparse = a_sparser ? a : b;
  const auto& dense = a_sparser ? b : a;
  const auto& nz = a_sparser ? nz_a : nz_b;

  typename Arith::Vec out(n, ar.zero());
  for (std::size_t i : nz) {
    const auto& s = sparse[i];
    for (std::size_t j = 0; i + j < n; ++j) {
      if (Arith::is_zero(dense[j])) continue;
      ar.mac(out[i + j], s, dense[j]);
    }
  }
  return out;
}

// c = num / den where den[0] is a unit with inverse `unit_inv`.
template <class Arith>
typename Arith::Vec divide_kernel(const Arith& ar,
                                  const typename Arith::Vec& num,
                                  const typename Arith::Vec& den,
                                  std::size_t n,
                                  const typename Arith::Value& unit_inv) {
  std::vector<std::size_t> nz;
  for (std::size_t k = 1; k < n; ++k) {
    if (!Arith::is_zero(den[k])) nz.push_back(k);
  }
  typename Arith::Vec out(n, ar.zero());
  for (std::size_t i = 0; i < n; ++i) {
    auto acc = num[i];
    for (std::size_t k : nz) {
      if (k > i) break;
      if (Arith::is_zero(out[i - k])) continue;
      ar.msub(acc, den[k], out[i - k]);
    }
    out[i] = ar.mul(acc, unit_inv);
  }
  return out;
}

// Euler/J.C.P. Miller recurrence for b = a^e over the integers, with
// a[0] != 0:  n a_0 b_n = sum_{k=1}^{n} ((e+1)k - n) a_k b_{n-k}.
Series::Integers power_recurrence(const Series::Integers& a, std::size_t n,
                                  long e) {
  Series::Integers b(n, 0);
  const mpz_class& a0 = a[0];
  if (e >= 0) {
    mpz_pow_ui(b[0].get_mpz_t(), a0.get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    // a0 = +-1 here
    b[0] = (a0 == 1 || (-e) % 2 == 0) ? mpz_class(1) : mpz_class(-1);
  }
  std::vector<std::size_t> nz;
  for (std::size_t k = 1; k < n; ++k) {
    if (sgn(a[k]) != 0) nz.push_back(k);
  }
  mpz_class sum, term, denom;
  for (std::size_t i = 1; i < n; ++i) {
    sum = 0;
    for (std::size_t k : nz) {
      if (k > i) break;
      const auto& prev = b[i - k];
      if (sgn(prev) == 0) continue;
      const long factor = (e + 1) * static_cast<long>(k) - static_cast<long>(i);
      if (factor == 0) continue;
      mpz_mul(term.get_mpz_t(), a[k].get_mpz_t(), prev.get_mpz_t());
      mpz_mul_si(term.get_mpz_t(), term.get_mpz_t(), factor);
      sum += term;
    }
    denom = a0 * static_cast<unsigned long>(i);
    mpz_divexact(b[i].get_mpz_t(), sum.get_mpz_t(), denom.get_mpz_t());
  }
  return b;
}

}  // namespace

Series Series::zero(CoefficientRing ring, std::size_t order) {
  if (order == 0) throw SeriesError("series order must be positive");
  if (ring.is_exact()) return Series(ring, order, Integers(order, 0));
  return Series(ring, order, Residues(order, 0));
}

Series Series::one(CoefficientRing ring, std::size_t order) {
  return monomial(ring, order, 0, 1);
}

Series Series::monomial(CoefficientRing ring, std::size_t order,
                        std::size_t exponent, const mpz_class& c) {
  Series s = zero(ring, order);
  if (exponent < order) {
    if (auto* v = std::get_if<Integers>(&s.data_)) {
      (*v)[exponent] = c;
    } else {
      std::get<Residues>(s.data_)[exponent] =
          ModArith{ring.modulus()}.from(c);
    }
  }
  return s;
}

Series Series::from_coefficients(CoefficientRing ring,
                                 std::vector<mpz_class> coeffs) {
  if (coeffs.empty()) throw SeriesError("series order must be positive");
  const std::size_t order = coeffs.size();
  if (ring.is_exact()) return Series(ring, order, std::move(coeffs));
  ModArith ar{ring.modulus()};
  Residues r(order);
  for (std::size_t i = 0; i < order; ++i) r[i] = ar.from(coeffs[i]);
  return Series(ring, order, std::move(r));
}

Series Series::from_residues(CoefficientRing ring, Residues residues) {
  if (ring.is_exact()) {
    throw SeriesError("from_residues requires a modular ring");
  }
  if (residues.empty()) throw SeriesError("series order must be positive");
  for (auto& x : residues) x %= ring.modulus();
  const std::size_t order = residues.size();
  return Series(ring, order, std::move(residues));
}

mpz_class Series::coeff(std::size_t n) const {
  if (n >= order_) {
    throw SeriesError("coefficient " + std::to_string(n) +
                      " is beyond the truncation order " +
                      std::to_string(order_));
  }
  if (auto* v = integers()) return (*v)[n];
  return mpz_class(static_cast<unsigned long>((*residues())[n]));
}

bool Series::coeff_is_zero(std::size_t n) const {
  if (auto* v = integers()) return sgn((*v)[n]) == 0;
  return (*residues())[n] == 0;
}

std::vector<mpz_class> Series::coefficients() const {
  std::vector<mpz_class> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(coeff(i));
  return out;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < order_; ++i) {
    if (!coeff_is_zero(i)) return i;
  }
  return std::nullopt;
}

std::size_t Series::nonzero_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < order_; ++i) count += coeff_is_zero(i) ? 0 : 1;
  return count;
}

Series Series::with_adjusted(std::size_t n, const mpz_class& delta) const {
  if (n >= order_) throw SeriesError("adjusted index beyond order");
  Series copy = *this;
  if (auto* v = std::get_if<Integers>(&copy.data_)) {
    (*v)[n] += delta;
  } else {
    ModArith ar{ring_.modulus()};
    auto& r = std::get<Residues>(copy.data_);
    r[n] = ar.add(r[n], ar.from(delta));
  }
  return copy;
}

std::string Series::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (std::size_t i = 0; i < order_ && shown < max_terms; ++i) {
    if (coeff_is_zero(i)) continue;
    mpz_class c = coeff(i);
    const bool negative = sgn(c) < 0;
    if (shown == 0) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) c = -c;
    if (i == 0 || c != 1) os << c.get_str();
    if (i > 0) {
      if (c != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << order_ << ")";
  return os.str();
}

bool operator==(const Series& a, const Series& b) {
  return a.ring_ == b.ring_ && a.order_ == b.order_ && a.data_ == b.data_;
}

std::optional<std::size_t> first_mismatch(const Series& a, const Series& b) {
  require_same_ring(a, b, "compare");
  const std::size_t n = std::min(a.order(), b.order());
  return with_arith(a.ring(), [&](auto ar) -> std::optional<std::size_t> {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    const auto& y = data_of<A>(b);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(x[i] == y[i])) return i;
    }
    return std::nullopt;
  });
}

Series add(const Series& a, const Series& b) {
  require_same_ring(a, b, "add");
  const std::size_t n = std::min(a.order(), b.order());
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    const auto& y = data_of<A>(b);
    typename A::Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ar.add(x[i], y[i]);
    return make<A>(a.ring(), std::move(out));
  });
}

Series subtract(const Series& a, const Series& b) {
  require_same_ring(a, b, "subtract");
  const std::size_t n = std::min(a.order(), b.order());
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    const auto& y = data_of<A>(b);
    typename A::Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ar.sub(x[i], y[i]);
    return make<A>(a.ring(), std::move(out));
  });
}

Series negate(const Series& a) {
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    typename A::Vec out = data_of<A>(a);
    for (auto& c : out) c = ar.neg(c);
    return make<A>(a.ring(), std::move(out));
  });
}

Series scalar_mul(const Series& a, const mpz_class& c) {
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto k = ar.from(c);
    typename A::Vec out = data_of<A>(a);
    for (auto& x : out) x = ar.mul(x, k);
    return make<A>(a.ring(), std::move(out));
  });
}

Series mul(const Series& a, const Series& b) {
  require_same_ring(a, b, "mul");
  const std::size_t n = std::min(a.order(), b.order());
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    return make<A>(a.ring(), mul_kernel(ar, data_of<A>(a), data_of<A>(b), n));
  });
}

Series invert(const Series& a) {
  return divide(Series::one(a.ring(), a.order()), a);
}

Series divide(const Series& a, const Series& b) {
  require_same_ring(a, b, "divide");
  const auto v = b.valuation();
  if (!v) {
    throw SeriesError("division by a series that is zero to order " +
                      std::to_string(b.order()));
  }
  const std::size_t n = std::min(a.order(), b.order());
  if (*v >= n) {
    throw SeriesError("division leaves no known coefficients");
  }
  for (std::size_t i = 0; i < *v; ++i) {
    if (!a.coeff_is_zero(i)) {
      throw SeriesError("valuation deficit: numerator has a nonzero q^" +
                        std::to_string(i) + " term but the divisor has "
                        "valuation " + std::to_string(*v));
    }
  }
  const std::size_t out_order = n - *v;
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& num = data_of<A>(a);
    const auto& den = data_of<A>(b);
    typename A::Vec num_s(num.begin() + *v, num.begin() + *v + out_order);
    typename A::Vec den_s(den.begin() + *v, den.begin() + *v + out_order);
    const auto inv = ar.inverse(den_s[0]);
    if (!inv) {
      throw SeriesError("leading coefficient of the divisor is not a unit in " +
                        a.ring().name());
    }
    return make<A>(a.ring(), divide_kernel(ar, num_s, den_s, out_order, *inv));
  });
}

Series power_by_squaring(const Series& a, long e) {
  if (e < 0) return invert(power_by_squaring(a, -e));
  Series result = Series::one(a.ring(), a.order());
  Series base = a;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Series power(const Series& a, long e) {
  if (e == 0) return Series::one(a.ring(), a.order());
  const auto v = a.valuation();
  if (!v) {
    if (e < 0) throw SeriesError("negative power of a zero series");
    return a;
  }
  if (e < 0 && *v > 0) {
    throw SeriesError("negative power of a series with zero constant term");
  }
  if (!a.ring().is_exact()) {
    if (e < 0 && !ModArith{a.ring().modulus()}.inverse(
                      a.residues()->front())) {
      throw SeriesError("negative power of a series whose constant term is "
                        "not a unit in " + a.ring().name());
    }
    return power_by_squaring(a, e);
  }

  const auto& c = *a.integers();
  if (e < 0 && !(c[0] == 1 || c[0] == -1)) {
    throw SeriesError("negative power of a series whose constant term is "
                      "not a unit in Z");
  }
  const std::size_t n = a.order() - *v;
  Series::Integers stripped(c.begin() + *v, c.end());
  Series core = make<ExactArith>(a.ring(), power_recurrence(stripped, n, e));
  if (*v == 0) return core;
  return shift(core, *v * static_cast<std::size_t>(e), a.order());
}

Series extract(const Series& a, std::size_t p, std::size_t r) {
  if (p == 0) throw SeriesError("extract: step must be positive");
  if (r >= p) {
    throw SeriesError("extract: residue " + std::to_string(r) +
                      " not in [0, " + std::to_string(p) + ")");
  }
  if (a.order() <= r) {
    throw SeriesError("extract: series of order " + std::to_string(a.order()) +
                      " has no coefficients in residue class " +
                      std::to_string(r) + " mod " + std::to_string(p));
  }
  const std::size_t n = (a.order() - r + p - 1) / p;
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    typename A::Vec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = x[p * i + r];
    return make<A>(a.ring(), std::move(out));
  });
}

Series substitute_power(const Series& a, std::size_t k,
                        std::optional<std::size_t> cap) {
  if (k == 0) throw SeriesError("substitute_power: exponent must be positive");
  std::size_t n = a.order() * k;
  if (cap) n = std::min(n, *cap);
  if (n == 0) throw SeriesError("series order must be positive");
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    typename A::Vec out(n, ar.zero());
    for (std::size_t i = 0; i * k < n; ++i) out[i * k] = x[i];
    return make<A>(a.ring(), std::move(out));
  });
}

Series shift(const Series& a, std::size_t t, std::optional<std::size_t> cap) {
  std::size_t n = a.order() + t;
  if (cap) n = std::min(n, *cap);
  if (n == 0) throw SeriesError("series order must be positive");
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    typename A::Vec out(n, ar.zero());
    for (std::size_t i = t; i < n; ++i) out[i] = x[i - t];
    return make<A>(a.ring(), std::move(out));
  });
}

Series truncate(const Series& a, std::size_t order) {
  if (order == 0 || order > a.order()) {
    throw SeriesError("truncate: order " + std::to_string(order) +
                      " outside [1, " + std::to_string(a.order()) + "]");
  }
  if (order == a.order()) return a;
  return with_arith(a.ring(), [&](auto ar) {
    using A = decltype(ar);
    const auto& x = data_of<A>(a);
    return make<A>(a.ring(), typename A::Vec(x.begin(), x.begin() + order));
  });
}

Series reduce_mod(const Series& a, std::uint64_t m) {
  const auto target = CoefficientRing::modulo(m);
  if (!a.ring().is_exact()) {
    if (a.ring() == target) return a;
    throw SeriesError("reduce_mod: series is already in " + a.ring().name() +
                      ", cannot reduce to " + target.name());
  }
  ModArith ar{m};
  const auto& x = *a.integers();
  Series::Residues out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ar.from(x[i]);
  const std::size_t order = out.size();
  return SeriesAccess::make(target, order, std::move(out));
}

}  // namespace qseries
