#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "prismatic/bigfloat.hpp"
#include "prismatic/hvec.hpp"

namespace prismatic {

/// A flag: a point on a line, both in homogeneous coordinates.  For exact
/// scalars the incidence p . l = 0 is checked on construction.
template <class T>
struct Flag {
  HVec<T> point;
  HVec<T> line;

  static Flag checked(HVec<T> p, HVec<T> l) {
    if constexpr (scalar_is_exact_v<T>) {
      if (!dot(p, l).is_zero()) throw std::domain_error("Flag: point not on line");
    }
    return Flag{std::move(p), std::move(l)};
  }
};

template <class T>
struct FlagTriple {
  Flag<T> f1, f2, f3;
};

/// Triple product of a flag triple (scale-invariant):
///   chi = (P1.L2)(P2.L3)(P3.L1) / ((P2.L1)(P3.L2)(P1.L3)).
/// Throws if any of the six pairings degenerates.
template <class T>
T triple_product(const FlagTriple<T>& t) {
  const auto& p1 = t.f1.point;
  const auto& p2 = t.f2.point;
  const auto& p3 = t.f3.point;
  const auto& l1 = t.f1.line;
  const auto& l2 = t.f2.line;
  const auto& l3 = t.f3.line;
  T n1 = dot(p1, l2), n2 = dot(p2, l3), n3 = dot(p3, l1);
  T d1 = dot(p2, l1), d2 = dot(p3, l2), d3 = dot(p1, l3);
  for (const T* v : {&n1, &n2, &n3, &d1, &d2, &d3})
    if (v->is_zero()) throw std::domain_error("triple_product: non-transverse flags (zero pairing)");
  return (n1 * n2 * n3) / (d1 * d2 * d3);
}

/// Prism invariant |log(-chi)| of a negative triple.  Invariant under
/// chi <-> 1/chi.
inline double prism_invariant(double chi) {
  if (!(chi < 0)) throw std::domain_error("prism_invariant: not a negative triple");
  return std::fabs(std::log(-chi));
}

inline BigFloat prism_invariant(const BigFloat& chi) {
  if (!(chi.sign() < 0)) throw std::domain_error("prism_invariant: not a negative triple");
  return (-chi).log().abs();
}

inline BigFloat prism_invariant(const Rat& chi, long prec) {
  return prism_invariant(BigFloat(chi, prec));
}

/// Flat metric distance to the origin of the standard ellipsoid E(a,b,c):
/// sqrt(log^2 a + log^2 b + log^2 c), defined for a,b,c > 0 with abc = 1.
inline double flat_distance(double a, double b, double c, double tolerance = 1e-9) {
  if (!(a > 0) || !(b > 0) || !(c > 0))
    throw std::domain_error("flat_distance: arguments must be positive");
  if (std::fabs(a * b * c - 1.0) > tolerance)
    throw std::domain_error("flat_distance: abc must equal 1");
  double la = std::log(a), lb = std::log(b), lc = std::log(c);
  return std::sqrt(la * la + lb * lb + lc * lc);
}

/// The two independent triple invariants t1, t2 attached to a pair of
/// orthogonal flag pairs in normalized position; the other six invariants
/// are their reciprocals.  t1/t2 is a perfect square, so all eight share one
/// sign.
template <class T>
std::pair<T, T> orthogonal_pair_invariants(const T& r, const T& x, const T& y) {
  T one = scalar_one(r);
  T rr = x * x + y * y;                    // x^2 + y^2
  T f_rx = r - x;                          // r - x
  T f_rp = r * rr + x;                     // r(x^2+y^2) + x
  T f_rx1 = r * x + one;                   // rx + 1
  T f_perp = rr - r * x;                   // x^2 + y^2 - rx
  T f_big = rr * rr + rr;                  // (x^2+y^2)^2 + (x^2+y^2)
  for (const T* v : {&f_rx, &f_rx1, &f_perp, &f_big})
    if (v->is_zero())
      throw std::domain_error("orthogonal_pair_invariants: degenerate configuration");
  T t1 = (f_rx * f_rp) / (f_rx1 * f_perp);
  T t2 = ((rr + one) * f_perp * f_rp) / (f_rx * f_rx1 * f_big);
  return {t1, t2};
}

}  // namespace prismatic
