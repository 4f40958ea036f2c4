#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "prismatic/hvec.hpp"

namespace prismatic {

struct box_degeneracy_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A marked box: six homogeneous vertices in the order
///   [top-edge end, TOP point, top-edge end,
///    bottom-edge end, BOTTOM point, bottom-edge end].
/// Vertices 0,1,2 are collinear (top line) and 3,4,5 are collinear.
template <class T>
struct MarkedBox {
  std::array<HVec<T>, 6> v;

  const HVec<T>& top_point() const { return v[1]; }
  const HVec<T>& bottom_point() const { return v[4]; }

  /// The standard initial box of the morphed-orbit construction, with the
  /// top edge on the line at infinity.
  static MarkedBox standard(const T& c, const T& d) {
    T one = scalar_one(c), zero = scalar_zero(c);
    return {{HVec<T>{-one, one, zero}, HVec<T>{c, one, zero}, HVec<T>{one, one, zero},
             HVec<T>{one, zero, one}, HVec<T>{d, zero, one}, HVec<T>{-one, zero, one}}};
  }

  /// Unit-square normalized box: corners (0,1),(1,1),(1,0),(0,0); top point
  /// (c,1), bottom point (1-d,0).  Convex for c,d in (0,1).
  static MarkedBox unit_square(const T& c, const T& d) {
    T one = scalar_one(c), zero = scalar_zero(c);
    return {{HVec<T>{zero, one, one}, HVec<T>{c, one, one}, HVec<T>{one, one, one},
             HVec<T>{one, zero, one}, HVec<T>{one - d, zero, one}, HVec<T>{zero, zero, one}}};
  }
};

namespace detail {
template <class T>
HVec<T> cr(const MarkedBox<T>& b, int i, int j, int k, int l) {
  HVec<T> p = cross(cross(b.v[static_cast<size_t>(i)], b.v[static_cast<size_t>(j)]),
                    cross(b.v[static_cast<size_t>(k)], b.v[static_cast<size_t>(l)]));
  if constexpr (scalar_is_exact_v<T>) {
    if (p.is_zero_vector()) throw box_degeneracy_error("marked box operation: degenerate cross product");
  }
  return p;
}
}  // namespace detail

/// The three Pappus operations on marked boxes (exact cross-product
/// formulas; indices as in the reference construction).
template <class T>
MarkedBox<T> box_t(const MarkedBox<T>& b) {
  return {{b.v[0], b.v[1], b.v[2], detail::cr(b, 1, 3, 2, 4), detail::cr(b, 0, 3, 2, 5),
           detail::cr(b, 0, 4, 1, 5)}};
}

template <class T>
MarkedBox<T> box_b(const MarkedBox<T>& b) {
  return {{detail::cr(b, 1, 3, 2, 4), detail::cr(b, 0, 3, 2, 5), detail::cr(b, 0, 4, 1, 5),
           b.v[5], b.v[4], b.v[3]}};
}

template <class T>
MarkedBox<T> box_i(const MarkedBox<T>& b) {
  return {{b.v[5], b.v[4], b.v[3], b.v[0], b.v[1], b.v[2]}};
}

template <class T>
bool projective_equal(const MarkedBox<T>& a, const MarkedBox<T>& b) {
  for (size_t i = 0; i < 6; ++i)
    if (!projective_equal(a.v[i], b.v[i])) return false;
  return true;
}

/// Equality as marked boxes: the marked points must match, while each
/// edge-end pair is unordered (the tuple encoding orders them, the box does
/// not; i o i returns the same box with both end pairs reversed).
template <class T>
bool same_marked_box(const MarkedBox<T>& a, const MarkedBox<T>& b) {
  if (!projective_equal(a.v[1], b.v[1]) || !projective_equal(a.v[4], b.v[4])) return false;
  auto pair_eq = [](const HVec<T>& x1, const HVec<T>& x2, const HVec<T>& y1, const HVec<T>& y2) {
    return (projective_equal(x1, y1) && projective_equal(x2, y2)) ||
           (projective_equal(x1, y2) && projective_equal(x2, y1));
  };
  return pair_eq(a.v[0], a.v[2], b.v[0], b.v[2]) && pair_eq(a.v[3], a.v[5], b.v[3], b.v[5]);
}

/// Frame of a quadruple of general-position points: the matrix mapping
/// e1, e2, e3, (1,1,1) to q0, q1, q2, q3.  Columns are scaled copies of
/// q0, q1, q2.
template <class T>
Mat3<T> frame_of_quad(const HVec<T>& q0, const HVec<T>& q1, const HVec<T>& q2,
                      const HVec<T>& q3) {
  Mat3<T> m = Mat3<T>::from_columns(q0, q1, q2);
  T d = m.det();
  if (d.is_zero()) throw std::domain_error("frame_of_quad: corner points not in general position");
  T inv_d = d.inverse();
  HVec<T> s = inv_d * (m.adjugate() * q3);  // solution of m s = q3
  if (s.x.is_zero() || s.y.is_zero() || s.z.is_zero())
    throw std::domain_error("frame_of_quad: fourth point on a side; no valid frame");
  return Mat3<T>::from_columns(s.x * q0, s.y * q1, s.z * q2);
}

/// The frame of a marked box: maps the standard quad onto vertices
/// (v0, v2, v3, v5), per the reference construction.
template <class T>
Mat3<T> get_matrix(const MarkedBox<T>& b) {
  return frame_of_quad(b.v[0], b.v[2], b.v[3], b.v[5]);
}

// ---------------------------------------------------------------------------
// Affine-patch helpers (exact scalars with decidable signs).

template <class T>
std::pair<T, T> affine_point(const HVec<T>& v) {
  if (v.z.is_zero()) throw std::domain_error("affine_point: point at infinity");
  return {v.x / v.z, v.y / v.z};
}

namespace detail {
template <class T>
int orient2d(const std::pair<T, T>& a, const std::pair<T, T>& b, const std::pair<T, T>& c) {
  T cr = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
  return cr.sign();
}
template <class T>
bool strictly_between(const std::pair<T, T>& p, const std::pair<T, T>& a,
                      const std::pair<T, T>& b) {
  T d1 = (p.first - a.first) * (b.first - a.first) + (p.second - a.second) * (b.second - a.second);
  T d2 = (b.first - p.first) * (b.first - a.first) + (b.second - p.second) * (b.second - a.second);
  return d1.sign() > 0 && d2.sign() > 0;
}
}  // namespace detail

namespace detail {
template <class T>
bool corners_cyclic(const MarkedBox<T>& b) {
  std::array<std::pair<T, T>, 4> p{affine_point(b.v[0]), affine_point(b.v[2]),
                                   affine_point(b.v[3]), affine_point(b.v[5])};
  int s0 = orient2d(p[0], p[1], p[2]);
  int s1 = orient2d(p[1], p[2], p[3]);
  int s2 = orient2d(p[2], p[3], p[0]);
  int s3 = orient2d(p[3], p[0], p[1]);
  return s0 != 0 && s0 == s1 && s1 == s2 && s2 == s3;
}
}  // namespace detail

/// Reorders the (unordered) edge-end pairs so the corner slots (0,2,3,5)
/// run cyclically around the quadrilateral.  The i operation hands back the
/// crossed arrangement, for instance.  Empty when no arrangement is convex.
template <class T>
std::optional<MarkedBox<T>> cyclic_arrangement(const MarkedBox<T>& b) {
  for (const auto& vert : b.v)
    if (vert.z.is_zero()) return std::nullopt;
  MarkedBox<T> candidate = b;
  if (detail::corners_cyclic(candidate)) return candidate;
  std::swap(candidate.v[3], candidate.v[5]);  // reverse the bottom pair
  if (detail::corners_cyclic(candidate)) return candidate;
  candidate = b;
  std::swap(candidate.v[0], candidate.v[2]);  // reverse the top pair
  if (detail::corners_cyclic(candidate)) return candidate;
  return std::nullopt;
}

/// Affine-patch convexity of a marked box: some arrangement of the edge-end
/// pairs makes the corners strictly convex in cyclic order, with the top
/// and bottom points strictly inside their edges.
template <class T>
bool is_convex(const MarkedBox<T>& b) {
  auto arr = cyclic_arrangement(b);
  if (!arr) return false;
  std::array<std::pair<T, T>, 6> p;
  for (size_t i = 0; i < 6; ++i) p[i] = affine_point(arr->v[i]);
  // marked points must lie on their edge lines, strictly between the ends
  if (detail::orient2d(p[0], p[1], p[2]) != 0 || detail::orient2d(p[3], p[4], p[5]) != 0)
    return false;
  return detail::strictly_between(p[1], p[0], p[2]) && detail::strictly_between(p[4], p[3], p[5]);
}

/// Max pairwise Euclidean distance between the six affine-patch images.
template <class T>
double affine_diameter(const MarkedBox<T>& b) {
  std::array<std::pair<double, double>, 6> p;
  for (size_t i = 0; i < 6; ++i) {
    if (b.v[i].z.is_zero()) throw std::domain_error("affine_diameter: vertex at infinity");
    auto [x, y] = affine_point(b.v[i]);
    p[i] = {x.to_double(), y.to_double()};
  }
  double best = 0;
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j) {
      double dx = p[i].first - p[j].first, dy = p[i].second - p[j].second;
      best = std::max(best, std::hypot(dx, dy));
    }
  return best;
}

/// Box invariant [(c,d)] with the identification (c,d) ~ (1-c,1-d);
/// the canonical representative is the lexicographic minimum.
template <class T>
struct BoxClass {
  T c, d;
  bool axial = false;

  static BoxClass of(T c_in, T d_in) {
    T one = scalar_one(c_in);
    T c2 = one - c_in, d2 = one - d_in;
    bool keep = (c_in < c2) || (c_in == c2 && (d_in < d2 || d_in == d2));
    BoxClass r;
    r.c = keep ? c_in : c2;
    r.d = keep ? d_in : d2;
    T half = scalar_from_rat(Rat(1, 2), c_in);
    r.axial = (r.c == half) || (r.d == half);
    return r;
  }

  friend bool operator==(const BoxClass& a, const BoxClass& b) {
    return a.c == b.c && a.d == b.d;
  }
};

/// Normalizes the box's quadrilateral onto the unit square with corners
/// (v0,v2,v3,v5) -> (0,1),(1,1),(1,0),(0,0) and reads the marked points:
/// top at (c,1), bottom at (1-d,0).  The frame's two-fold ambiguity is the
/// (c,d) ~ (1-c,1-d) quotient absorbed by BoxClass.
template <class T>
BoxClass<T> box_class(const MarkedBox<T>& bx) {
  auto arranged = cyclic_arrangement(bx);
  if (!arranged || !is_convex(bx)) throw std::domain_error("box_class: box is not convex");
  const MarkedBox<T>& b = *arranged;
  T one = scalar_one(b.v[0].x), zero = scalar_zero(b.v[0].x);
  Mat3<T> target = frame_of_quad<T>({zero, one, one}, {one, one, one}, {one, zero, one},
                                    {zero, zero, one});
  Mat3<T> source = get_matrix(b);
  Mat3<T> n = target * source.inverse();
  HVec<T> top = n * b.v[1];
  HVec<T> bottom = n * b.v[4];
  if (top.z.is_zero() || bottom.z.is_zero())
    throw std::domain_error("box_class: marked point maps to infinity");
  T c = top.x / top.z;
  T d = one - bottom.x / bottom.z;
  return BoxClass<T>::of(std::move(c), std::move(d));
}

}  // namespace prismatic
