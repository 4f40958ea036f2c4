#pragma once

#include <stdexcept>
#include <string>

#include "prismatic/bigfloat.hpp"
#include "prismatic/rat.hpp"

namespace prismatic {

/// Element a + b*sqrt(m) of a real quadratic extension of Q.  The radicand m
/// is a positive non-square integer, normalized to 0 whenever b == 0 so that
/// plain rationals embed canonically.  Values from different extensions must
/// not be mixed; binary operations check this.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rat a, Rat b, const mpz_class& m) : a_(std::move(a)), b_(std::move(b)), m_(m) {
    normalize_();
  }

  /// sqrt(x) for rational x >= 0.  Perfect squares come back rational; other
  /// radicands are reduced by small square factors.
  static QuadExt make_sqrt(const Rat& x);

  const Rat& rational_part() const { return a_; }
  const Rat& radical_part() const { return b_; }
  const mpz_class& radicand() const { return m_; }
  bool is_rational() const { return b_.is_zero(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.is_one(); }

  int sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    int norm_sign = (a_ * a_ - Rat(m_) * b_ * b_).sign();
    return a_.sign() > 0 ? norm_sign : -norm_sign;
  }

  QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const mpz_class& m = merged_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, m);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const mpz_class& m = merged_radicand(x, y);
    return QuadExt(x.a_ * y.a_ + Rat(m) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, m);
  }
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
  QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
  QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
  QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

  QuadExt inverse() const {
    if (is_zero()) throw std::domain_error("QuadExt: inverse of zero");
    Rat n = a_ * a_ - Rat(m_) * b_ * b_;  // field norm, nonzero since m is not a square
    return QuadExt(a_ / n, -b_ / n, m_);
  }

  QuadExt conjugate() const { return QuadExt(a_, -b_, m_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero() != y.b_.is_zero()) return false;
    if (!x.b_.is_zero() && x.m_ != y.m_)
      throw std::logic_error("QuadExt: comparing values from different fields");
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return (x - y).sign() >= 0; }

  QuadExt abs() const { return sign() < 0 ? -*this : *this; }

  BigFloat to_bigfloat(long prec) const {
    BigFloat r(a_, prec);
    if (!b_.is_zero()) {
      BigFloat rad(Rat(m_), prec);
      r = r + BigFloat(b_, prec) * rad.sqrt();
    }
    return r;
  }
  double to_double() const { return to_bigfloat(64).to_double(); }

  std::string str() const {
    if (b_.is_zero()) return a_.str();
    std::string s;
    if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? "+" : "");
    s += b_.str() + "*sqrt(" + m_.get_str() + ")";
    return s;
  }

 private:
  void normalize_() {
    if (b_.is_zero()) { m_ = 0; return; }
    if (m_ <= 0) throw std::domain_error("QuadExt: radicand must be positive");
    if (mpz_perfect_square_p(m_.get_mpz_t())) {
      mpz_class root;
      mpz_sqrt(root.get_mpz_t(), m_.get_mpz_t());
      a_ += b_ * Rat(root);
      b_ = Rat(0);
      m_ = 0;
    }
  }

  static const mpz_class& merged_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero()) return y.m_;
    if (y.b_.is_zero()) return x.m_;
    if (x.m_ != y.m_) throw std::logic_error("QuadExt: mixing different quadratic fields");
    return x.m_;
  }

  Rat a_;
  Rat b_;
  mpz_class m_ = 0;
};

inline QuadExt QuadExt::make_sqrt(const Rat& x) {
  if (x.sign() < 0) throw std::domain_error("QuadExt: sqrt of negative rational");
  if (x.is_zero()) return QuadExt();
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class n = x.num() * x.den();
  mpz_class outside = 1;
  // pull out small square factors
  for (long p = 2; p * p <= 100000000L; p = (p == 2 ? 3 : p + 2)) {
    mpz_class pp = mpz_class(p) * p;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      outside *= p;
    }
    if (n < pp) break;
  }
  Rat coeff(outside, x.den());
  if (n == 1) return QuadExt(coeff);
  return QuadExt(Rat(0), coeff, n);
}

}  // namespace prismatic
