#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/bigfloat.hpp"
#include "prismatic/mpoly.hpp"
#include "prismatic/rat.hpp"

namespace prismatic {

/// Dense univariate polynomial over Q; coefficient of x^i at index i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim_(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(Rat v) { return UPoly({std::move(v)}); }
  static UPoly x() { return UPoly({Rat(0), Rat(1)}); }

  /// Converts a one-variable (or effectively one-variable) MPoly.
  static UPoly from_mpoly(const MPoly& p, int var) {
    UPoly r;
    r.c_.assign(static_cast<size_t>(p.degree(var)) + 1, Rat(0));
    for (const auto& [m, coeff] : p.terms()) {
      if (static_cast<int>(m.deg) != m[var])
        throw std::invalid_argument("UPoly::from_mpoly: polynomial is not univariate in the given variable");
      r.c_[m[var]] += coeff;
    }
    r.trim_();
    return r;
  }

  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  const Rat& leading() const {
    if (c_.empty()) throw std::logic_error("UPoly: leading coeff of zero");
    return c_.back();
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  BigFloat eval(const BigFloat& x) const {
    BigFloat acc(0, x.prec());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigFloat(*it, x.prec());
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  UPoly operator-() const {
    std::vector<Rat> d(c_);
    for (auto& v : d) v = -v;
    return UPoly(std::move(d));
  }
  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> d(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return UPoly(std::move(d));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(d));
  }
  friend UPoly operator*(const UPoly& a, const Rat& s) {
    std::vector<Rat> d(a.c_);
    for (auto& v : d) v *= s;
    return UPoly(std::move(d));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean remainder.
  UPoly rem(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: remainder by zero");
    UPoly r = *this;
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Rat q = r.leading() / d.leading();
      int shift = r.degree() - d.degree();
      std::vector<Rat> sub(static_cast<size_t>(shift), Rat(0));
      sub.reserve(sub.size() + d.c_.size());
      for (const auto& v : d.c_) sub.push_back(v * q);
      r = r - UPoly(std::move(sub));
    }
    return r;
  }

  UPoly gcd(const UPoly& o) const {
    UPoly a = *this, b = o;
    while (!b.is_zero()) {
      UPoly r = a.rem(b);
      a = std::move(b);
      b = r.primitive();
    }
    return a.primitive();
  }

  /// Divides by content and makes the leading coefficient positive.
  UPoly primitive() const {
    if (is_zero()) return *this;
    Rat g(0);
    for (const auto& v : c_) g = rat_gcd(g, v);
    if (leading().sign() < 0) g = -g;
    std::vector<Rat> d(c_);
    for (auto& v : d) v /= g;
    return UPoly(std::move(d));
  }

  /// Divides by the positive content only; every coefficient keeps its sign.
  UPoly positive_scaled() const {
    if (is_zero()) return *this;
    Rat g(0);
    for (const auto& v : c_) g = rat_gcd(g, v);
    std::vector<Rat> d(c_);
    for (auto& v : d) v /= g;
    return UPoly(std::move(d));
  }

  /// Divides out (x - root)^m exactly; returns the cofactor and m.
  std::pair<UPoly, int> deflate_at(const Rat& root) const {
    UPoly p = *this;
    int mult = 0;
    while (!p.is_zero() && p.eval(root).is_zero()) {
      // synthetic division by (x - root)
      std::vector<Rat> q(static_cast<size_t>(p.degree()), Rat(0));
      Rat carry(0);
      for (int i = p.degree(); i >= 1; --i) {
        carry = p.c_[static_cast<size_t>(i)] + carry * root;
        q[static_cast<size_t>(i - 1)] = carry;
      }
      p = UPoly(std::move(q));
      ++mult;
    }
    return {p, mult};
  }

  /// Cauchy bound: all real roots lie in (-B, B).
  Rat cauchy_bound() const {
    if (is_zero()) throw std::logic_error("UPoly: root bound of zero");
    Rat maxratio(0);
    for (size_t i = 0; i + 1 < c_.size(); ++i) {
      Rat r = (c_[i] / leading()).abs();
      if (r > maxratio) maxratio = r;
    }
    return Rat(1) + maxratio;
  }

  std::string str() const;

 private:
  void trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Sturm chain of a nonzero univariate polynomial: p, p', then negated
/// Euclidean remainders (positive-content scaling preserves all signs).
class SturmChain {
 public:
  explicit SturmChain(UPoly p) : p_(std::move(p)) {
    if (p_.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
    chain_.push_back(p_);
    UPoly d = p_.derivative();
    if (!d.is_zero()) chain_.push_back(d);
    while (chain_.size() >= 2 && !chain_.back().is_zero()) {
      UPoly r = chain_[chain_.size() - 2].rem(chain_.back());
      if (r.is_zero()) break;
      chain_.push_back((-r).positive_scaled());
    }
  }

  const UPoly& polynomial() const { return p_; }
  const std::vector<UPoly>& chain() const { return chain_; }

  int sign_changes(const Rat& x) const {
    int changes = 0, prev = 0;
    for (const auto& q : chain_) {
      int s = q.eval(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  /// Number of distinct real roots in (lo, hi], assuming p(lo) != 0.
  int count_half_open(const Rat& lo, const Rat& hi) const {
    return sign_changes(lo) - sign_changes(hi);
  }

 private:
  UPoly p_;
  std::vector<UPoly> chain_;
};

struct SturmCountResult {
  int count = 0;
  // Endpoint roots are excised exactly before counting; the excised
  // multiplicities are recorded here.
  int lo_multiplicity = 0;
  int hi_multiplicity = 0;
};

/// Exact count of distinct real roots of `p` in the open interval (lo, hi).
/// Endpoint roots are divided out exactly and reported in the result.
SturmCountResult sturm_count_detail(const UPoly& p, const Rat& lo, const Rat& hi);

inline int sturm_count(const UPoly& p, const Rat& lo, const Rat& hi) {
  return sturm_count_detail(p, lo, hi).count;
}

struct RootInterval {
  Rat lo;
  Rat hi;  // open interval (lo, hi) containing exactly one real root
};

/// Disjoint rational intervals, each containing exactly one real root > 0,
/// jointly covering all positive real roots.  Certified with sturm_count.
std::vector<RootInterval> isolate_positive_roots(const UPoly& p);

struct RefinedRoot {
  BigFloat value;
  BigFloat residual;  // |p(value)|
  Rat enclosure_lo;
  Rat enclosure_hi;
};

/// Refines the unique simple root in `iv` to `prec` bits by bisection
/// followed by Newton polishing.  Throws if the sign change is lost.
RefinedRoot refine_root(const UPoly& p, const RootInterval& iv, long prec);

}  // namespace prismatic
