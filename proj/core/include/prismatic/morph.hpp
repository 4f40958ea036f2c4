#pragma once

#include <stdexcept>

#include "prismatic/fixtures.hpp"
#include "prismatic/markedbox.hpp"

namespace prismatic {

/// The rational morphing matrix Sigma_{a,b}; the identity at (a,b) = (1,1).
template <class T>
Mat3<T> morph_matrix(const T& a, const T& b) {
  T zero = scalar_zero(a), one = scalar_one(a), two = scalar_from_long(2, a);
  T b2 = b * b;
  T mid = (one + b2) / (two * a * b);
  T off = (b2 - one) / (two * b);
  T low = a * (one + b2) / (two * b);
  return {{one, zero, zero, zero, mid, off, zero, off, low}};
}

/// Conjugates Sigma_{a,b} into the box's frame (relative to the frame of
/// the standard box at (0,0)) and applies it to all six vertices.
template <class T>
MarkedBox<T> morph_box(const MarkedBox<T>& box, const T& a, const T& b) {
  T zero = scalar_zero(a);
  Mat3<T> w0 = get_matrix(MarkedBox<T>::standard(zero, zero));
  Mat3<T> w1 = get_matrix(box);
  Mat3<T> ww = w0 * w1.inverse();
  Mat3<T> ss = ww.inverse() * morph_matrix(a, b) * ww;
  MarkedBox<T> out;
  for (size_t i = 0; i < 6; ++i) out.v[i] = ss * box.v[i];
  return out;
}

/// The two order-3 generators of the Z/3 * Z/3 symmetry group of the
/// morphed orbit of the standard box at (c,d).
template <class T>
struct GeneratorPair {
  Mat3<T> r1;  // independent of (a,b)
  Mat3<T> r2;
};

template <class T>
GeneratorPair<T> generators(const T& a, const T& b, const T& c, const T& d) {
  if constexpr (scalar_is_exact_v<T>) {
    T zero = scalar_zero(a), one = scalar_one(a);
    if constexpr (requires { a < zero; }) {
      if (!(zero < a) || !(zero < b))
        throw std::domain_error("generators: a, b must be positive");
      if (!(-one < c) || !(c < one) || !(-one < d) || !(d < one))
        throw std::domain_error("generators: c, d must lie in (-1, 1)");
    }
  }
  MarkedBox<T> y0 = MarkedBox<T>::standard(c, d);
  MarkedBox<T> y1 = morph_box(box_i(y0), a, b);
  MarkedBox<T> y2 = morph_box(box_t(y0), a, b);
  Mat3<T> mm1 = get_matrix(y1);
  Mat3<T> mm2 = get_matrix(y2);
  T one = scalar_one(a);
  T pref1 = ((c + one) * (d + one) * (d - one)).inverse();
  GeneratorPair<T> g;
  g.r1 = pref1 * (mm2 * mm1.inverse());

  MarkedBox<T> swapped{{y0.v[2], y0.v[1], y0.v[0], y0.v[5], y0.v[4], y0.v[3]}};
  MarkedBox<T> z2 = morph_box(box_t(y1), a, b);
  Mat3<T> nn1 = get_matrix(swapped);
  Mat3<T> nn2 = get_matrix(z2);
  g.r2 = (d - one) * (nn2 * nn1.inverse());
  return g;
}

/// Closed forms of the generators from the fixture store:
/// r1 = P(c,d) / ((c^2-1)(d^2-1)) and r2 = Q(a,b,c,d) / (4 a^2 b^2).
template <class T>
Mat3<T> r1_closed_form(const FixtureSet& fx, const T& c, const T& d) {
  T one = scalar_one(c);
  T pref = ((c * c - one) * (d * d - one)).inverse();
  std::vector<T> pt{c, d};
  Mat3<T> m;
  for (int i = 0; i < 9; ++i)
    m.a[static_cast<size_t>(i)] =
        fx.r1_num()[static_cast<size_t>(i)].template evaluate<T>(
            pt, [&](const Rat& q) { return scalar_from_rat(q, c); });
  return pref * m;
}

template <class T>
Mat3<T> r2_closed_form(const FixtureSet& fx, const T& a, const T& b, const T& c, const T& d) {
  T four = scalar_from_long(4, a);
  T pref = (four * a * a * b * b).inverse();
  std::vector<T> pt{a, b, c, d};
  Mat3<T> m;
  for (int i = 0; i < 9; ++i)
    m.a[static_cast<size_t>(i)] =
        fx.r2_num()[static_cast<size_t>(i)].template evaluate<T>(
            pt, [&](const Rat& q) { return scalar_from_rat(q, a); });
  return pref * m;
}

/// Good region: the parameter set where the morphed quad nests strictly
/// inside its parent.  Empty for b > 1; the single point a = 1 at b = 1.
template <class T>
std::optional<std::pair<T, T>> good_region_bounds(const T& b) {
  T zero = scalar_zero(b), one = scalar_one(b), two = scalar_from_long(2, b);
  if (!(zero < b)) throw std::domain_error("good_region_bounds: b must be positive");
  if (one < b) return std::nullopt;
  T b2 = b * b;
  T p = one + two * b - b2;  // positive on (0, 1]
  T q = one + b2;
  return std::make_pair(q / p, p / q);
}

template <class T>
bool good_region(const T& a, const T& b) {
  auto bounds = good_region_bounds(b);
  if (!bounds) return false;
  return !(a < bounds->first) && !(bounds->second < a);
}

}  // namespace prismatic
