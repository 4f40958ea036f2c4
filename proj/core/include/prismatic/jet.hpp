#pragma once

#include <utility>

namespace prismatic {

/// First-order jet (dual number) over a field F: value + derivative.
/// Running a computation on jets yields the exact symbolic derivative with
/// respect to the seeded variable.
template <class F>
struct Jet {
  F val;
  F der;

  Jet() = default;
  explicit Jet(F v) : val(std::move(v)), der(val - val) {}
  Jet(F v, F d) : val(std::move(v)), der(std::move(d)) {}

  static Jet variable(F v, F one) { return Jet(std::move(v), std::move(one)); }

  bool is_zero() const { return val.is_zero() && der.is_zero(); }

  Jet operator-() const { return Jet(-val, -der); }
  friend Jet operator+(const Jet& x, const Jet& y) { return Jet(x.val + y.val, x.der + y.der); }
  friend Jet operator-(const Jet& x, const Jet& y) { return Jet(x.val - y.val, x.der - y.der); }
  friend Jet operator*(const Jet& x, const Jet& y) {
    return Jet(x.val * y.val, x.val * y.der + x.der * y.val);
  }
  friend Jet operator/(const Jet& x, const Jet& y) {
    F inv_v = y.val.inverse();
    F q = x.val * inv_v;
    return Jet(q, (x.der - q * y.der) * inv_v);
  }
  Jet& operator+=(const Jet& o) { *this = *this + o; return *this; }
  Jet& operator-=(const Jet& o) { *this = *this - o; return *this; }
  Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
  Jet& operator/=(const Jet& o) { *this = *this / o; return *this; }

  Jet inverse() const {
    F inv_v = val.inverse();
    return Jet(inv_v, -(der * inv_v * inv_v));
  }

  friend bool operator==(const Jet& x, const Jet& y) { return x.val == y.val && x.der == y.der; }
  friend bool operator!=(const Jet& x, const Jet& y) { return !(x == y); }
};

}  // namespace prismatic
