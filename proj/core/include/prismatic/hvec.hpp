#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "prismatic/scalars.hpp"

namespace prismatic {

/// Homogeneous coordinates of a point or line of the projective plane.
/// Equality of the underlying projective object is equality up to a nonzero
/// scalar; see projective_equal and canonicalized.
template <class T>
struct HVec {
  T x, y, z;

  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  bool is_zero_vector() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  friend HVec operator+(const HVec& a, const HVec& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend HVec operator-(const HVec& a, const HVec& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend HVec operator*(const T& s, const HVec& a) { return {s * a.x, s * a.y, s * a.z}; }
  HVec operator-() const { return {-x, -y, -z}; }
};

template <class T>
T dot(const HVec<T>& a, const HVec<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
HVec<T> cross(const HVec<T>& a, const HVec<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Exact projective equality: the cross product vanishes and neither vector
/// is zero.
template <class T>
bool projective_equal(const HVec<T>& a, const HVec<T>& b) {
  if (a.is_zero_vector() || b.is_zero_vector()) return false;
  return cross(a, b).is_zero_vector();
}

/// Canonical representative for exact rational coordinates: clear
/// denominators, divide by integer content, make the first nonzero
/// coordinate positive.  Makes projective equality a data comparison.
HVec<Rat> canonicalized(const HVec<Rat>& v);
HVec<QuadExt> canonicalized(const HVec<QuadExt>& v);

template <class T>
struct Mat3 {
  // row-major
  std::array<T, 9> a;

  const T& operator()(int r, int c) const { return a[static_cast<size_t>(3 * r + c)]; }
  T& operator()(int r, int c) { return a[static_cast<size_t>(3 * r + c)]; }

  static Mat3 from_rows(const HVec<T>& r0, const HVec<T>& r1, const HVec<T>& r2) {
    return {{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
  }
  static Mat3 from_columns(const HVec<T>& c0, const HVec<T>& c1, const HVec<T>& c2) {
    return {{c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z}};
  }
  static Mat3 identity(const T& model) {
    T one = scalar_one(model), zero = scalar_zero(model);
    return {{one, zero, zero, zero, one, zero, zero, zero, one}};
  }
  static Mat3 diagonal(const T& d0, const T& d1, const T& d2) {
    T zero = scalar_zero(d0);
    return {{d0, zero, zero, zero, d1, zero, zero, zero, d2}};
  }

  HVec<T> column(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
  HVec<T> row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }

  Mat3 transposed() const {
    Mat3 r = *this;
    std::swap(r(0, 1), r(1, 0));
    std::swap(r(0, 2), r(2, 0));
    std::swap(r(1, 2), r(2, 1));
    return r;
  }

  friend Mat3 operator*(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = m(i, 0) * n(0, j) + m(i, 1) * n(1, j) + m(i, 2) * n(2, j);
    return r;
  }
  friend HVec<T> operator*(const Mat3& m, const HVec<T>& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
  }
  friend Mat3 operator*(const T& s, const Mat3& m) {
    Mat3 r = m;
    for (auto& e : r.a) e = s * e;
    return r;
  }
  friend Mat3 operator+(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (size_t i = 0; i < 9; ++i) r.a[i] = m.a[i] + n.a[i];
    return r;
  }
  friend Mat3 operator-(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (size_t i = 0; i < 9; ++i) r.a[i] = m.a[i] - n.a[i];
    return r;
  }

  T det() const {
    const Mat3& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  T trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

  /// Sum of principal 2x2 minors: the second elementary symmetric function
  /// of the eigenvalues.
  T second_invariant() const {
    const Mat3& m = *this;
    return (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
           (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  }

  /// Adjugate: adj(M) * M = det(M) * I.
  Mat3 adjugate() const {
    const Mat3& m = *this;
    Mat3 r;
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return r;
  }

  Mat3 inverse() const {
    T d = det();
    if (d.is_zero()) throw std::domain_error("Mat3: singular matrix");
    Mat3 adj = adjugate();
    T inv = d.inverse();
    for (auto& e : adj.a) e = inv * e;
    return adj;
  }

  Mat3 inverse_transposed() const { return inverse().transposed(); }

  friend bool operator==(const Mat3& m, const Mat3& n) { return m.a == n.a; }
  friend bool operator!=(const Mat3& m, const Mat3& n) { return !(m == n); }

  bool is_zero() const {
    for (const auto& e : a)
      if (!e.is_zero()) return false;
    return true;
  }
};

/// Projective equality of matrices: m * scalar == n for some nonzero scalar.
template <class T>
bool projective_equal(const Mat3<T>& m, const Mat3<T>& n) {
  int pivot = -1;
  for (int i = 0; i < 9; ++i)
    if (!m.a[static_cast<size_t>(i)].is_zero()) { pivot = i; break; }
  if (pivot < 0) return n.is_zero();
  if (n.a[static_cast<size_t>(pivot)].is_zero()) return false;
  // cross-multiplied entrywise comparison
  const T& mp = m.a[static_cast<size_t>(pivot)];
  const T& np = n.a[static_cast<size_t>(pivot)];
  for (int i = 0; i < 9; ++i)
    if (!(m.a[static_cast<size_t>(i)] * np - n.a[static_cast<size_t>(i)] * mp).is_zero())
      return false;
  return true;
}

/// Point action of a projective transformation.
template <class T>
HVec<T> act_point(const Mat3<T>& m, const HVec<T>& p) {
  return m * p;
}

/// Line action: the inverse-transpose, so incidence is preserved.
template <class T>
HVec<T> act_line(const Mat3<T>& m, const HVec<T>& line) {
  return m.inverse_transposed() * line;
}

/// The matrix M with S o Delta o S^{-1} = Delta o M for the standard
/// polarity Delta: M = (S^{-1})^t S^{-1}, symmetric.
template <class T>
Mat3<T> duality_conjugate(const Mat3<T>& s) {
  Mat3<T> inv = s.inverse();
  return inv.transposed() * inv;
}

}  // namespace prismatic
