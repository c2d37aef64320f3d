#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta), zeta = exp(i*pi/L).
//
// A Scalar is a polynomial in zeta with rational coefficients, reduced modulo
// the 2L-th cyclotomic polynomial, so equality is coefficient-wise. The values
// -cos(pi/m) needed by the geometric representation live in the real subfield;
// sign() is only meaningful there.

#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

#include "errors.hpp"

namespace coxhurwitz {

/// Coxeter-matrix entry standing for m = infinity.
inline constexpr unsigned infinity = 0;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

namespace detail {

using IntPoly = std::vector<long>;  // coefficients, lowest degree first

// Exact quotient of num by a monic divisor.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    long c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (std::size_t k = 0; k < dd; ++k)
    if (num[k] != 0) throw InternalError("cyclotomic division left a remainder");
  return quot;
}

inline IntPoly cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  memo.emplace(n, p);
  return p;
}

}  // namespace detail

/// The field Q(zeta_{2L}). Instances are interned and live for the whole program.
class CyclotomicField {
public:
  static const CyclotomicField& of(unsigned L) {
    if (L == 0) throw ConfigurationError("cyclotomic level L must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
    std::lock_guard lock(mu);
    auto& slot = fields[L];
    if (!slot) slot.reset(new CyclotomicField(L));
    return *slot;
  }

  unsigned level() const noexcept { return L_; }
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  const detail::IntPoly& modulus() const noexcept { return modulus_; }

  /// Reduced coefficients of zeta^k, k taken modulo 2L.
  const detail::IntPoly& zeta_power(long long k) const {
    long long n = 2 * static_cast<long long>(L_);
    return powers_[static_cast<std::size_t>(((k % n) + n) % n)];
  }

  /// Real part of zeta^k for k < degree().
  double basis_cos(std::size_t k) const { return cos_[k]; }

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
  explicit CyclotomicField(unsigned L) : L_(L), modulus_(detail::cyclotomic_polynomial(2 * L)) {
    const std::size_t d = degree();
    powers_.reserve(2 * L);
    detail::IntPoly cur(d, 0);
    cur[0] = 1;
    for (unsigned k = 0; k < 2 * L; ++k) {
      powers_.push_back(cur);
      // multiply by x and reduce
      long top = cur[d - 1];
      for (std::size_t j = d - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      for (std::size_t j = 0; j < d; ++j) cur[j] -= top * modulus_[j];
    }
    for (std::size_t k = 0; k < d; ++k)
      cos_.push_back(std::cos(static_cast<double>(k) * std::numbers::pi / L));
  }

  unsigned L_;
  detail::IntPoly modulus_;
  std::vector<detail::IntPoly> powers_;
  std::vector<double> cos_;
};

class Scalar {
public:
  explicit Scalar(const CyclotomicField& field) : field_(&field), c_(field.degree()) {}

  static Scalar zero(const CyclotomicField& field) { return Scalar(field); }

  static Scalar rational(const CyclotomicField& field, const mpq_class& q) {
    Scalar s(field);
    s.c_[0] = q;
    s.c_[0].canonicalize();
    return s;
  }

  static Scalar one(const CyclotomicField& field) { return rational(field, 1); }

  static Scalar zeta_power(const CyclotomicField& field, long long k) {
    Scalar s(field);
    const auto& p = field.zeta_power(k);
    for (std::size_t j = 0; j < p.size(); ++j) s.c_[j] = p[j];
    return s;
  }

  /// The exact value -cos(pi/m); m == infinity gives -1.
  static Scalar from_cos(const CyclotomicField& field, unsigned m) {
    if (m == infinity) return rational(field, -1);
    if (m < 2) throw ConfigurationError("Coxeter entry must be >= 2, got " + std::to_string(m));
    if (m == 2) return zero(field);
    if (m == 3) return rational(field, mpq_class(-1, 2));
    if (field.level() % m != 0)
      throw ConfigurationError("entry " + std::to_string(m) + " does not divide L = " +
                               std::to_string(field.level()));
    long long k = field.level() / m;
    Scalar s = zeta_power(field, k) + zeta_power(field, -k);
    for (auto& q : s.c_) q /= -2;
    return s;
  }

  const CyclotomicField& field() const noexcept { return *field_; }
  const std::vector<mpq_class>& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (sgn(q) != 0) return false;
    return true;
  }

  bool is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t j = 1; j < c_.size(); ++j)
      if (sgn(c_[j]) != 0) return false;
    return true;
  }

  /// Image under zeta -> zeta^{-1} (complex conjugation).
  Scalar conjugate() const {
    Scalar r(*field_);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sgn(c_[j]) == 0) continue;
      const auto& p = field_->zeta_power(-static_cast<long long>(j));
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.c_[i] += c_[j] * p[i];
    }
    return r;
  }

  bool is_real() const { return *this == conjugate(); }

  Scalar& operator+=(const Scalar& o) {
    check_same_field(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
  }

  Scalar& operator-=(const Scalar& o) {
    check_same_field(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
  }

  Scalar operator-() const {
    Scalar r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    const std::size_t d = a.c_.size();
    Scalar r(*a.field_);
    if (d == 1) {
      r.c_[0] = a.c_[0] * b.c_[0];
      return r;
    }
    std::vector<mpq_class> prod(2 * d - 1);
    bool any = false;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
        any = true;
      }
    }
    if (!any) return r;
    const auto& phi = a.field_->modulus();
    for (std::size_t k = prod.size(); k-- > d;) {
      if (sgn(prod[k]) == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (phi[j] != 0) prod[k - d + j] -= prod[k] * phi[j];
    }
    for (std::size_t j = 0; j < d; ++j) r.c_[j] = std::move(prod[j]);
    return r;
  }

  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar& operator*=(const mpq_class& q) {
    for (auto& c : c_) c *= q;
    return *this;
  }

  /// Multiplicative inverse; throws ArithmeticError on zero.
  Scalar inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    const std::size_t d = c_.size();
    Scalar r(*field_);
    if (d == 1) {
      r.c_[0] = 1 / c_[0];
      return r;
    }
    // Solve (multiplication-by-this) * x = 1 over Q. Column j holds this * zeta^j.
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1));
    for (std::size_t j = 0; j < d; ++j) {
      Scalar col = *this * zeta_power(*field_, static_cast<long long>(j));
      for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
    }
    a[0][d] = 1;
    for (std::size_t col = 0; col < d; ++col) {
      std::size_t piv = col;
      while (piv < d && sgn(a[piv][col]) == 0) ++piv;
      if (piv == d) throw InternalError("singular multiplication matrix for nonzero scalar");
      std::swap(a[piv], a[col]);
      mpq_class inv = 1 / a[col][col];
      for (std::size_t k = col; k <= d; ++k) a[col][k] *= inv;
      for (std::size_t i = 0; i < d; ++i) {
        if (i == col || sgn(a[i][col]) == 0) continue;
        mpq_class f = a[i][col];
        for (std::size_t k = col; k <= d; ++k) a[i][k] -= f * a[col][k];
      }
    }
    for (std::size_t i = 0; i < d; ++i) r.c_[i] = a[i][d];
    return r;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  /// Floating-point value of the real part.
  double to_double() const {
    double v = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) v += c_[j].get_d() * field_->basis_cos(j);
    return v;
  }

  /// Sign under zeta -> exp(i*pi/L). Requires a real-subfield element.
  Sign sign() const {
    assert(is_real());
    if (is_zero()) return Sign::zero;
    const std::size_t d = c_.size();
    if (d == 1) return sgn(c_[0]) < 0 ? Sign::negative : Sign::positive;

    // Double evaluation with a conservative a-priori error bound.
    double v = 0, mag = 0;
    for (std::size_t j = 0; j < d; ++j) {
      double q = c_[j].get_d();
      v += q * field_->basis_cos(j);
      mag += std::fabs(q);
    }
    double bound = mag * 16.0 * static_cast<double>(d + 4) * 0x1p-52;
    if (std::isfinite(v) && std::isfinite(bound) && std::fabs(v) > bound)
      return v < 0 ? Sign::negative : Sign::positive;

    // The value is certified nonzero, so refining precision terminates.
    for (mpfr_prec_t prec = 128;; prec *= 2) {
      if (auto s = sign_at_precision(prec)) return *s;
      if (prec > (1 << 20)) throw InternalError("sign refinement did not converge");
    }
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ field_->level();
    for (const auto& q : c_) {
      h = h * 1000003u ^ limb_hash(q.get_num_mpz_t());
      h = h * 1000003u ^ limb_hash(q.get_den_mpz_t());
    }
    return h;
  }

  std::string to_string() const {
    if (c_.size() == 1) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (sgn(c_[j]) == 0) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[j].get_str() << ")";
      if (j > 0) os << "z^" << j;
    }
    if (first) os << "0";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
  void check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw ConfigurationError("scalars from different cyclotomic fields");
  }

  static std::size_t limb_hash(mpz_srcptr z) noexcept {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
    if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) * 31u;
    return h;
  }

  std::optional<Sign> sign_at_precision(mpfr_prec_t prec) const;

  const CyclotomicField* field_;
  std::vector<mpq_class> c_;
};

inline std::optional<Sign> Scalar::sign_at_precision(mpfr_prec_t prec) const {
  const std::size_t d = c_.size();
  mpfr_t pi, term, sum, mag, tmp;
  mpfr_inits2(prec, pi, term, sum, mag, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_set_zero(sum, 1);
  mpfr_set_zero(mag, 1);
  for (std::size_t j = 0; j < d; ++j) {
    if (sgn(c_[j]) == 0) continue;
    mpfr_mul_ui(term, pi, static_cast<unsigned long>(j), MPFR_RNDN);
    mpfr_div_ui(term, term, field_->level(), MPFR_RNDN);
    mpfr_cos(term, term, MPFR_RNDN);
    mpfr_set_q(tmp, c_[j].get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, term, tmp, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    mpfr_abs(tmp, tmp, MPFR_RNDU);
    mpfr_mul_ui(tmp, tmp, static_cast<unsigned long>(j + 4), MPFR_RNDU);
    mpfr_add(mag, mag, tmp, MPFR_RNDU);
  }
  // |error| <= mag * (d + 4) * 2^(3 - prec)
  mpfr_mul_ui(mag, mag, static_cast<unsigned long>(d + 4), MPFR_RNDU);
  mpfr_mul_2si(mag, mag, 3 - static_cast<long>(prec), MPFR_RNDU);
  mpfr_abs(tmp, sum, MPFR_RNDN);
  std::optional<Sign> out;
  if (mpfr_cmp(tmp, mag) > 0) out = mpfr_sgn(sum) < 0 ? Sign::negative : Sign::positive;
  mpfr_clears(pi, term, sum, mag, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

/// lcm of the finite off-diagonal entries, collapsed to 1 when every entry is
/// in {2, 3, infinity} since -cos(pi/2) and -cos(pi/3) are rational.
inline unsigned cyclotomic_level(const std::vector<unsigned>& entries) {
  unsigned L = 1;
  bool rational = true;
  for (unsigned m : entries) {
    if (m == infinity) continue;
    L = std::lcm(L, m);
    if (m != 2 && m != 3) rational = false;
  }
  return rational ? 1 : L;
}

}  // namespace coxhurwitz

template <>
struct std::hash<coxhurwitz::Scalar> {
  std::size_t operator()(const coxhurwitz::Scalar& s) const noexcept { return s.hash(); }
};
