#pragma once

// Exact scalar arithmetic: cyclotomic polynomials, the cyclotomic integers
// Z[zeta_m] in the power basis modulo Phi_m, and the character chi_m.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "glaisher/integer.hpp"

namespace glaisher {

/// The m-th cyclotomic polynomial, coefficients in ascending degree.
struct CycPoly {
  int m = 1;
  std::vector<Integer> coeffs;

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CycPoly&, const CycPoly&) = default;
};

namespace detail {

// Dense integer polynomial helpers used only for building Phi_m.
inline std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division by a monic polynomial; throws if the remainder is nonzero.
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree too small");
  std::vector<Integer> quot(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer c = num[k];
    quot[k - dn] = c;
    if (is_zero(c)) continue;
    for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
  }
  for (const auto& r : num) {
    if (!is_zero(r)) throw std::logic_error("poly_div_exact: nonzero remainder");
  }
  return quot;
}

inline std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace detail

/// Phi_m by exact division of x^m - 1 by Phi_d over the proper divisors d of m.
inline CycPoly cyclotomic_polynomial(int m) {
  if (m <= 0) throw domain_error("cyclotomic_polynomial: m must be positive");
  std::vector<Integer> num(static_cast<std::size_t>(m) + 1);
  num.front() = -1;
  num.back() = 1;
  std::vector<Integer> den{Integer(1)};
  for (int d : detail::divisors(m)) {
    if (d == m) break;
    den = detail::poly_mul(den, cyclotomic_polynomial(d).coeffs);
  }
  return CycPoly{m, detail::poly_div_exact(std::move(num), den)};
}

inline int euler_phi(int m) {
  int count = 0;
  for (int k = 1; k <= m; ++k) count += std::gcd(k, m) == 1 ? 1 : 0;
  return count;
}

// Shared, immutable Phi_m instances. Lookups are serialized; the returned objects are read-only.
inline std::shared_ptr<const CycPoly> shared_cyclotomic(int m) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CycPoly>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(m);
  if (it == cache.end()) {
    it = cache.emplace(m, std::make_shared<const CycPoly>(cyclotomic_polynomial(m))).first;
  }
  return it->second;
}

/// Element of Z[zeta_m] stored as phi(m) coordinates in the basis 1, zeta, ..., zeta^{phi(m)-1}.
class CycInt {
 public:
  static CycInt zero(int m) { return CycInt(m); }
  static CycInt one(int m) { return from_integer(m, Integer(1)); }
  static CycInt from_integer(int m, const Integer& value) {
    CycInt out(m);
    out.coords_[0] = value;
    return out;
  }
  /// Reduces an arbitrary-length polynomial in zeta modulo Phi_m.
  static CycInt from_polynomial(int m, std::vector<Integer> poly) {
    CycInt out(m);
    out.assign_reduced(std::move(poly));
    return out;
  }

  [[nodiscard]] int modulus() const { return modulus_->m; }
  [[nodiscard]] const std::vector<Integer>& coords() const { return coords_; }

  CycInt& operator+=(const CycInt& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
    return *this;
  }
  CycInt& operator-=(const CycInt& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
    return *this;
  }
  CycInt& operator*=(const CycInt& rhs) {
    check_same(rhs);
    std::vector<Integer> prod(coords_.size() * 2 - 1);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (glaisher::is_zero(coords_[i])) continue;
      for (std::size_t j = 0; j < rhs.coords_.size(); ++j) {
        if (!glaisher::is_zero(rhs.coords_[j])) prod[i + j] += coords_[i] * rhs.coords_[j];
      }
    }
    assign_reduced(std::move(prod));
    return *this;
  }
  CycInt& operator*=(const Integer& scalar) {
    for (auto& c : coords_) c *= scalar;
    return *this;
  }

  friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
  friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
  friend CycInt operator*(CycInt lhs, const CycInt& rhs) { return lhs *= rhs; }
  friend CycInt operator*(CycInt lhs, const Integer& rhs) { return lhs *= rhs; }
  friend CycInt operator-(CycInt value) {
    for (auto& c : value.coords_) c = -c;
    return value;
  }

  friend bool operator==(const CycInt& lhs, const CycInt& rhs) {
    return lhs.modulus() == rhs.modulus() && lhs.coords_ == rhs.coords_;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return glaisher::is_zero(c); });
  }

  friend std::ostream& operator<<(std::ostream& os, const CycInt& value) {
    os << '(';
    for (std::size_t i = 0; i < value.coords_.size(); ++i) os << (i ? ", " : "") << value.coords_[i];
    return os << ')';
  }

 private:
  explicit CycInt(int m) {
    if (m < 2) throw domain_error("CycInt: m must be at least 2");
    modulus_ = shared_cyclotomic(m);
    coords_.assign(static_cast<std::size_t>(modulus_->degree()), Integer(0));
  }

  void check_same(const CycInt& rhs) const {
    if (modulus() != rhs.modulus()) {
      throw domain_error("CycInt: mismatched moduli " + std::to_string(modulus()) + " and " +
                         std::to_string(rhs.modulus()));
    }
  }

  // Phi_m is monic, so each top coefficient is cleared by subtracting c * x^{k-deg} * Phi_m.
  void assign_reduced(std::vector<Integer> poly) {
    const auto& phi = modulus_->coeffs;
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
      const Integer c = poly[k];
      if (glaisher::is_zero(c)) continue;
      for (std::size_t i = 0; i <= deg; ++i) poly[k - deg + i] -= c * phi[i];
    }
    poly.resize(deg, Integer(0));
    coords_ = std::move(poly);
  }

  std::shared_ptr<const CycPoly> modulus_;
  std::vector<Integer> coords_;
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// zeta_m^e as x^{e mod m} reduced modulo Phi_m.
inline CycInt cyc_root_power(int m, std::int64_t e) {
  if (m < 2) throw domain_error("cyc_root_power: m must be at least 2");
  std::vector<Integer> mono(static_cast<std::size_t>(floor_mod(e, m)) + 1);
  mono.back() = 1;
  return CycInt::from_polynomial(m, std::move(mono));
}

enum class CycOp { add, sub, mul };

inline CycInt cyc_arith(const CycInt& a, const CycInt& b, CycOp op) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
  }
  throw domain_error("cyc_arith: unknown op");
}

inline std::optional<Integer> cyc_as_integer(const CycInt& a) {
  const auto& c = a.coords();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (!is_zero(c[i])) return std::nullopt;
  }
  return c.empty() ? Integer(0) : c.front();
}

/// chi_m(n) = sum_{j=1}^{m-1} zeta_m^{jn}: m-1 when m | n, else -1. Negative n use the mathematical mod.
inline Integer chi(int m, std::int64_t n) {
  if (m < 2) throw domain_error("chi: m must be at least 2");
  return floor_mod(n, m) == 0 ? Integer(m - 1) : Integer(-1);
}

/// The literal root-of-unity sum behind chi, evaluated in Z[zeta_m].
inline CycInt chi_by_roots(int m, std::int64_t n) {
  CycInt sum = CycInt::zero(m);
  for (int j = 1; j < m; ++j) sum += cyc_root_power(m, floor_mod(static_cast<std::int64_t>(j) * n, m));
  return sum;
}

}  // namespace glaisher
