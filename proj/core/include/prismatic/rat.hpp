#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prismatic {

/// Exact arbitrary-precision rational, always in lowest terms with a
/// positive denominator.  Thin value wrapper over GMP's mpq.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d) : q_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpz_class& z) : q_(z) {}
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }

  /// Parses "p", "p/q", or a plain decimal such as "-1.25".
  static Rat parse(const std::string& text);

  const mpq_class& mpq() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_), NoCanon{}); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1) / q_, NoCanon{});
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat pow(long e) const;

  double to_double() const { return q_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

 private:
  struct NoCanon {};
  Rat(mpq_class q, NoCanon) : q_(std::move(q)) {}
  mpq_class q_;
};

inline Rat rat_gcd(const Rat& a, const Rat& b) {
  // gcd of numerators over lcm of denominators; the natural content gcd.
  mpz_class gn, gd;
  mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(gd.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  return Rat(gn, gd);
}

Rat pow(const Rat& base, long e);

}  // namespace prismatic
