#pragma once

// Truncated dense formal power series over an exact coefficient ring.
//
// A Series of precision N holds the coefficients of q^0..q^N. Products drop
// every exponent above N; nothing wraps around.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "glaisher/integer.hpp"
#include "glaisher/ring.hpp"

namespace glaisher {

template <class R>
struct ring_traits;

template <>
struct ring_traits<Integer> {
  static Integer zero_like(const Integer&) { return Integer(0); }
  static Integer one_like(const Integer&) { return Integer(1); }
  static bool is_zero(const Integer& x) { return glaisher::is_zero(x); }
};

template <>
struct ring_traits<CycInt> {
  static CycInt zero_like(const CycInt& x) { return CycInt::zero(x.modulus()); }
  static CycInt one_like(const CycInt& x) { return CycInt::one(x.modulus()); }
  static bool is_zero(const CycInt& x) { return x.is_zero(); }
};

/// Number of factors in a Pochhammer-type product; nullopt stands for "infinite".
using Count = std::optional<std::int64_t>;
inline constexpr Count kInfinite = std::nullopt;

inline std::string to_string(const Count& count) { return count ? std::to_string(*count) : "inf"; }

/// A coefficient that is not a rational integer, found while mapping Z[zeta_m] -> Z.
class integerness_error : public domain_error {
 public:
  explicit integerness_error(std::size_t exponent)
      : domain_error("coefficient of q^" + std::to_string(exponent) + " is not a rational integer"),
        exponent_(exponent) {}
  [[nodiscard]] std::size_t exponent() const { return exponent_; }

 private:
  std::size_t exponent_;
};

template <class R>
class Series {
 public:
  using value_type = R;

  /// Zero series; `like` supplies the ring (needed for CycInt, whose zero carries m).
  Series(std::size_t precision, const R& like) : coeffs_(precision + 1, ring_traits<R>::zero_like(like)) {}

  explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw domain_error("Series: at least one coefficient is required");
  }

  static Series constant(std::size_t precision, const R& value) {
    Series out(precision, value);
    out.coeffs_[0] = value;
    return out;
  }

  static Series one(std::size_t precision, const R& like) {
    return constant(precision, ring_traits<R>::one_like(like));
  }

  [[nodiscard]] std::size_t precision() const { return coeffs_.size() - 1; }
  [[nodiscard]] const std::vector<R>& coeffs() const { return coeffs_; }

  const R& operator[](std::size_t n) const { return coeffs_[n]; }
  R& operator[](std::size_t n) { return coeffs_[n]; }

  /// Checked coefficient access: exponents above the precision are unknown, not zero.
  [[nodiscard]] const R& coeff(std::size_t n) const {
    if (n > precision()) {
      throw std::out_of_range("coefficient of q^" + std::to_string(n) + " requested from a series of precision " +
                              std::to_string(precision()));
    }
    return coeffs_[n];
  }

  Series& operator+=(const Series& rhs) {
    check_precision(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
  }

  Series& operator-=(const Series& rhs) {
    check_precision(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
  }

  Series& operator*=(const Series& rhs) {
    check_precision(rhs);
    const std::size_t n = precision();
    std::vector<R> out(coeffs_.size(), ring_traits<R>::zero_like(coeffs_[0]));
    for (std::size_t i = 0; i <= n; ++i) {
      if (ring_traits<R>::is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (!ring_traits<R>::is_zero(rhs.coeffs_[j])) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
      }
    }
    coeffs_ = std::move(out);
    return *this;
  }

  template <class S>
  Series& scale(const S& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  /// In place: multiply by (1 - u q^e).
  Series& mul_one_minus(const R& unit, std::size_t e) {
    if (e == 0) throw domain_error("mul_one_minus: exponent must be positive");
    for (std::size_t k = precision(); k >= e; --k) coeffs_[k] -= unit * coeffs_[k - e];
    return *this;
  }

  /// In place: multiply by (1 - q^e).
  Series& mul_one_minus(std::size_t e) {
    if (e == 0) throw domain_error("mul_one_minus: exponent must be positive");
    for (std::size_t k = precision(); k >= e; --k) coeffs_[k] -= coeffs_[k - e];
    return *this;
  }

  /// In place: multiply by 1/(1 - q^e) = 1 + q^e + q^{2e} + ...
  Series& div_one_minus(std::size_t e) {
    if (e == 0) throw domain_error("div_one_minus: exponent must be positive");
    for (std::size_t k = e; k <= precision(); ++k) coeffs_[k] += coeffs_[k - e];
    return *this;
  }

  /// In place: multiply by 1 + q^e + q^{2e} + ... + q^{(terms-1)e}.
  Series& mul_geometric_block(std::size_t e, std::size_t terms) {
    if (e == 0) throw domain_error("mul_geometric_block: exponent must be positive");
    if (terms == 0) throw domain_error("mul_geometric_block: at least one term is required");
    for (std::size_t k = precision() + 1; k-- > e;) {
      for (std::size_t c = 1; c < terms && c * e <= k; ++c) coeffs_[k] += coeffs_[k - c * e];
    }
    return *this;
  }

  /// In place: multiply by q^k.
  Series& shift(std::size_t k) {
    if (k == 0) return *this;
    const auto zero = ring_traits<R>::zero_like(coeffs_[0]);
    for (std::size_t i = precision() + 1; i-- > 0;) coeffs_[i] = i >= k ? coeffs_[i - k] : zero;
    return *this;
  }

  friend Series operator+(Series lhs, const Series& rhs) { return lhs += rhs; }
  friend Series operator-(Series lhs, const Series& rhs) { return lhs -= rhs; }
  friend Series operator*(Series lhs, const Series& rhs) { return lhs *= rhs; }
  friend Series operator-(Series value) {
    for (auto& c : value.coeffs_) c = -c;
    return value;
  }
  friend bool operator==(const Series& lhs, const Series& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Series& s) {
    os << '[';
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) os << (i ? ", " : "") << s.coeffs_[i];
    return os << "] + O(q^" << s.precision() + 1 << ')';
  }

 private:
  void check_precision(const Series& rhs) const {
    if (precision() != rhs.precision()) {
      throw domain_error("series precision mismatch: " + std::to_string(precision()) + " vs " +
                         std::to_string(rhs.precision()));
    }
  }

  std::vector<R> coeffs_;
};

using IntSeries = Series<Integer>;
using CycSeries = Series<CycInt>;

enum class SeriesOp { add, sub, mul };

template <class R>
Series<R> series_arith(const Series<R>& a, const Series<R>& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::sub: return a - b;
    case SeriesOp::mul: return a * b;
  }
  throw domain_error("series_arith: unknown op");
}

template <class R>
const R& coeff(const Series<R>& a, std::size_t n) {
  return a.coeff(n);
}

/// Drops the coefficients above `precision`.
template <class R>
Series<R> truncate(const Series<R>& a, std::size_t precision) {
  if (precision > a.precision()) {
    throw domain_error("truncate: cannot raise precision from " + std::to_string(a.precision()) + " to " +
                       std::to_string(precision));
  }
  return Series<R>(std::vector<R>(a.coeffs().begin(), a.coeffs().begin() + static_cast<std::ptrdiff_t>(precision) + 1));
}

/// A polynomial viewed as a series of the given precision (zero padded or cut).
inline IntSeries from_polynomial(std::vector<Integer> poly, std::size_t precision) {
  poly.resize(precision + 1, Integer(0));
  return IntSeries(std::move(poly));
}

/// Factors 1 - u q^{offset + step*i}, i = 0..count-1.
template <class R>
struct PochSpec {
  R unit;
  std::int64_t offset = 1;
  std::int64_t step = 1;
  Count count = kInfinite;
};

namespace detail {

inline void check_poch_shape(std::int64_t offset, std::int64_t step, const Count& count) {
  if (offset < 1) throw domain_error("pochhammer: offset must be at least 1");
  if (step < 1) throw domain_error("pochhammer: step must be at least 1");
  if (count && *count < 0) throw domain_error("pochhammer: count must be non-negative");
}

// Calls f(exponent) for every factor whose exponent is <= precision. Factors above
// the precision only touch discarded coefficients.
template <class F>
void for_each_factor(std::int64_t offset, std::int64_t step, const Count& count, std::size_t precision, F&& f) {
  const auto limit = static_cast<std::int64_t>(precision);
  for (std::int64_t i = 0; !count || i < *count; ++i) {
    const std::int64_t e = offset + step * i;
    if (e > limit) break;
    f(static_cast<std::size_t>(e));
  }
}

}  // namespace detail

template <class R>
Series<R> pochhammer(const PochSpec<R>& spec, std::size_t precision) {
  detail::check_poch_shape(spec.offset, spec.step, spec.count);
  auto out = Series<R>::one(precision, spec.unit);
  detail::for_each_factor(spec.offset, spec.step, spec.count, precision,
                          [&](std::size_t e) { out.mul_one_minus(spec.unit, e); });
  return out;
}

/// 1 / prod_i (1 - q^{offset + step*i}), expanded as a product of geometric series.
inline IntSeries inv_pochhammer(std::int64_t offset, std::int64_t step, const Count& count, std::size_t precision) {
  detail::check_poch_shape(offset, step, count);
  auto out = IntSeries::one(precision, Integer(0));
  detail::for_each_factor(offset, step, count, precision, [&](std::size_t e) { out.div_one_minus(e); });
  return out;
}

namespace detail {

// Exact division of a polynomial by (1 - q^e); the remainder must vanish.
inline std::vector<Integer> divide_exact_one_minus(const std::vector<Integer>& poly, std::size_t e) {
  if (poly.size() <= e) throw std::logic_error("divide_exact_one_minus: degree below divisor degree");
  std::vector<Integer> quot(poly.size() - e);
  for (std::size_t k = 0; k < quot.size(); ++k) quot[k] = poly[k] + (k >= e ? quot[k - e] : Integer(0));
  for (std::size_t k = quot.size(); k < poly.size(); ++k) {
    const Integer carried = k >= e ? quot[k - e] : Integer(0);
    if (!is_zero(poly[k] + carried)) throw std::logic_error("divide_exact_one_minus: nonzero remainder");
  }
  return quot;
}

}  // namespace detail

/// Gaussian polynomial [a+b choose b]_q = (q)_{a+b} / ((q)_a (q)_b) as an exact polynomial.
inline std::vector<Integer> qbinomial_polynomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) return {Integer(0)};
  std::vector<Integer> poly{Integer(1)};
  for (std::int64_t i = 1; i <= b; ++i) {
    const auto up = static_cast<std::size_t>(a + i);
    poly.resize(poly.size() + up, Integer(0));
    for (std::size_t k = poly.size(); k-- > up;) poly[k] -= poly[k - up];
    poly = detail::divide_exact_one_minus(poly, static_cast<std::size_t>(i));
  }
  return poly;
}

inline IntSeries qbinomial(std::int64_t a, std::int64_t b, std::size_t precision) {
  return from_polynomial(qbinomial_polynomial(a, b), precision);
}

/// Coefficientwise Z[zeta_m] -> Z; throws integerness_error naming the first offending exponent.
inline IntSeries map_ring(const CycSeries& a) {
  std::vector<Integer> out;
  out.reserve(a.precision() + 1);
  for (std::size_t n = 0; n <= a.precision(); ++n) {
    auto value = cyc_as_integer(a[n]);
    if (!value) throw integerness_error(n);
    out.push_back(std::move(*value));
  }
  return IntSeries(std::move(out));
}

}  // namespace glaisher
