#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "prismatic/rat.hpp"

namespace prismatic {

/// Arbitrary-precision binary float.  Every value records the precision it
/// was computed at; binary operations round correctly at the larger of the
/// two operand precisions.
class BigFloat {
 public:
  static constexpr long kDefaultPrec = 256;

  BigFloat() { mpfr_init2(x_, kDefaultPrec); mpfr_set_zero(x_, 1); }
  explicit BigFloat(long prec) {
    if (prec < 2) throw std::invalid_argument("BigFloat: precision < 2");
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
  }
  BigFloat(long value, long prec) : BigFloat(prec) { mpfr_set_si(x_, value, MPFR_RNDN); }
  BigFloat(const Rat& value, long prec) : BigFloat(prec) {
    mpfr_set_q(x_, value.mpq().get_mpq_t(), MPFR_RNDN);
  }
  static BigFloat from_double(double value, long prec) {
    BigFloat r(prec);
    mpfr_set_d(r.x_, value, MPFR_RNDN);
    return r;
  }

  BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, 2); mpfr_swap(x_, o.x_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
  ~BigFloat() { mpfr_clear(x_); }

  long prec() const { return mpfr_get_prec(x_); }
  BigFloat round_to(long prec) const {
    BigFloat r(prec);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
  }

  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_finite() const { return mpfr_number_p(x_) != 0; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw std::domain_error("BigFloat: division by zero");
    return bin(a, b, mpfr_div);
  }
  BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }
  BigFloat& operator+=(const BigFloat& o) { *this = *this + o; return *this; }
  BigFloat& operator-=(const BigFloat& o) { *this = *this - o; return *this; }
  BigFloat& operator*=(const BigFloat& o) { *this = *this * o; return *this; }
  BigFloat& operator/=(const BigFloat& o) { *this = *this / o; return *this; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

  BigFloat abs() const { BigFloat r(prec()); mpfr_abs(r.x_, x_, MPFR_RNDN); return r; }
  BigFloat sqrt() const {
    if (sign() < 0) throw std::domain_error("BigFloat: sqrt of negative");
    BigFloat r(prec()); mpfr_sqrt(r.x_, x_, MPFR_RNDN); return r;
  }
  BigFloat cbrt() const { BigFloat r(prec()); mpfr_cbrt(r.x_, x_, MPFR_RNDN); return r; }
  BigFloat log() const {
    if (sign() <= 0) throw std::domain_error("BigFloat: log of non-positive");
    BigFloat r(prec()); mpfr_log(r.x_, x_, MPFR_RNDN); return r;
  }
  BigFloat pow_si(long e) const { BigFloat r(prec()); mpfr_pow_si(r.x_, x_, e, MPFR_RNDN); return r; }
  BigFloat inverse() const { return BigFloat(1, prec()) / *this; }

  static BigFloat pi(long prec) { BigFloat r(prec); mpfr_const_pi(r.x_, MPFR_RNDN); return r; }
  static BigFloat sqrt_ui(unsigned long v, long prec) {
    BigFloat r(prec); mpfr_sqrt_ui(r.x_, v, MPFR_RNDN); return r;
  }
  /// 2^e as an exact BigFloat.
  static BigFloat pow2(long e, long prec) {
    BigFloat r(prec); mpfr_set_si_2exp(r.x_, 1, e, MPFR_RNDN); return r;
  }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

  /// Shortest-ish decimal rendering with `digits` significant digits.
  std::string str(int digits = 0) const {
    if (digits <= 0) digits = static_cast<int>(static_cast<double>(prec()) * 0.3010) + 2;
    char* out = nullptr;
    int n = mpfr_asprintf(&out, "%.*Rg", digits, x_);
    if (n < 0) throw std::runtime_error("BigFloat: formatting failed");
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  using TernaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(const BigFloat& a, const BigFloat& b, TernaryFn fn) {
    BigFloat r(std::max(a.prec(), b.prec()));
    fn(r.x_, a.x_, b.x_, MPFR_RNDN);
    return r;
  }
  mpfr_t x_;
};

inline BigFloat abs(const BigFloat& x) { return x.abs(); }
inline BigFloat sqrt(const BigFloat& x) { return x.sqrt(); }
inline BigFloat log(const BigFloat& x) { return x.log(); }

}  // namespace prismatic
