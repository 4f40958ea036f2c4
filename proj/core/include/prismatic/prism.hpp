#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "prismatic/fixtures.hpp"
#include "prismatic/flags.hpp"
#include "prismatic/hvec.hpp"
#include "prismatic/jet.hpp"
#include "prismatic/quadext.hpp"

namespace prismatic {

/// Parameters (r, s, t) of a normalized prism configuration.  Generic means
/// t is present with t > 0 or t < -1; the non-generic family (triple
/// invariant -1) has no t.
template <class T>
struct PrismParamsT {
  T r;
  T s;
  std::optional<T> t;

  bool generic() const { return t.has_value(); }

  void validate() const {
    if constexpr (scalar_is_exact_v<T>) {
      T zero = scalar_zero(r);
      if (!(zero < r) || !(zero < s))
        throw std::domain_error("PrismParams: r and s must be positive");
      if (t) {
        T neg1 = scalar_from_long(-1, r);
        if (!(zero < *t) && !(*t < neg1))
          throw std::domain_error("PrismParams: generic t must lie outside [-1, 0]");
      }
    }
  }
};

using PrismParams = PrismParamsT<Rat>;

/// The fully built configuration: normalized flags, the order-3 and order-2
/// generators' matrices, and the key element g^2.
template <class T>
struct PrismSceneT {
  HVec<T> a1, a2, a3;
  HVec<T> b1, b2, b3;
  HVec<T> L1, L2, L3;  // L_k joins a_{k-1} and a_{k+1}
  Mat3<T> M3;
  Mat3<T> S;
  Mat3<T> M2;      // (S^{-1})^t S^{-1}, the elliptic polarity's matrix part
  Mat3<T> M2_inv;  // cached: equals S S^t
  Mat3<T> S_inv;
  Mat3<T> g2;      // (M2^{-1})^t (M3^{-1})^t M2 M3
  T det_S;
  bool generic = true;

  FlagTriple<T> flags() const {
    return {Flag<T>{b1, L2}, Flag<T>{b2, L3}, Flag<T>{b3, L1}};
  }
};

/// Order-3 rotation matrix (needs sqrt(3) in the scalar type).
template <class T>
Mat3<T> rotation_order3(const T& model) {
  T half = scalar_from_rat(Rat(1, 2), model);
  T s32 = scalar_sqrt3(model) * half;
  T zero = scalar_zero(model), one = scalar_one(model);
  return {{-half, -s32, zero, s32, -half, zero, zero, zero, one}};
}

/// Core construction with an explicit order-3 matrix (the elliptic-side
/// analysis conjugates it).
template <class T>
PrismSceneT<T> build_scene_with_m3(const T& r, const T& s, const std::optional<T>& t,
                                   const Mat3<T>& m3) {
  PrismSceneT<T> sc;
  T half = scalar_from_rat(Rat(1, 2), r);
  T one = scalar_one(r), zero = scalar_zero(r);
  T s32 = scalar_sqrt3(r) * half;
  sc.a1 = {one, zero, one};
  sc.a2 = {-half, s32, one};
  sc.a3 = {-half, -s32, one};
  sc.M3 = m3;
  T two = scalar_from_long(2, r);
  if (t) {
    sc.generic = true;
    const T& tv = *t;
    T w = one + tv;
    auto blend = [&](const HVec<T>& ak, const HVec<T>& prev) {
      return HVec<T>{w * ak.x - tv * prev.x, w * ak.y - tv * prev.y, w * ak.z - tv * prev.z};
    };
    sc.b1 = blend(sc.a1, sc.a3);
    sc.b2 = blend(sc.a2, sc.a1);
    sc.b3 = blend(sc.a3, sc.a2);
    sc.L1 = cross(sc.a2, sc.a3);
    sc.L2 = cross(sc.a3, sc.a1);
    sc.L3 = cross(sc.a1, sc.a2);
    sc.S = Mat3<T>::from_columns(two * r * sc.b1, two * s * sc.b2, sc.a1);
  } else {
    sc.generic = false;
    sc.b1 = sc.a1;
    sc.b2 = sc.a2;
    sc.b3 = sc.a3;
    HVec<T> origin{zero, zero, one};
    sc.L2 = cross(origin, sc.b1);
    sc.L3 = cross(origin, sc.b2);
    sc.L1 = cross(origin, sc.b3);
    sc.S = Mat3<T>::from_columns(two * r * sc.b1, two * s * sc.b2, origin);
  }
  sc.det_S = sc.S.det();
  if (sc.det_S.is_zero()) throw std::domain_error("build_scene: singular S");
  sc.S_inv = sc.S.inverse();
  sc.M2 = sc.S_inv.transposed() * sc.S_inv;
  sc.M2_inv = sc.S * sc.S.transposed();
  sc.g2 = sc.M2_inv.transposed() * sc.M3.inverse().transposed() * sc.M2 * sc.M3;
  return sc;
}

template <class T>
PrismSceneT<T> build_scene(const PrismParamsT<T>& p) {
  p.validate();
  return build_scene_with_m3(p.r, p.s, p.t, rotation_order3(p.r));
}

/// Triple product of the scene's flag triple: -t^3/(1+t)^3 in the generic
/// normalization; exactly -1 in the non-generic one.
template <class T>
T first_invariant(const PrismSceneT<T>& sc) {
  return triple_product(sc.flags());
}

/// The eigenvalue of g^2 attached to the fixed flag (b1, L2).
template <class T>
T lambda_formula(const PrismParamsT<T>& p) {
  T ratio = (p.r * p.r) / (p.s * p.s);
  if (!p.t) return -ratio;
  const T& t = *p.t;
  return -(ratio * t) / (scalar_one(p.r) + t);
}

enum class PrismClass { Attracting, Repelling, Neutral };

inline const char* to_string(PrismClass c) {
  switch (c) {
    case PrismClass::Attracting: return "attracting";
    case PrismClass::Repelling: return "repelling";
    case PrismClass::Neutral: return "neutral";
  }
  return "?";
}

template <class T>
struct EigenReport {
  T lambda;
  PrismClass classification;
  T trace;  // 1 + lambda + 1/lambda
};

template <class T>
PrismClass classify_lambda(const T& lambda) {
  T one = scalar_one(lambda), neg_one = scalar_from_long(-1, lambda);
  if (lambda == neg_one) return PrismClass::Neutral;
  T mag = lambda < scalar_zero(lambda) ? -lambda : lambda;
  return mag > one ? PrismClass::Attracting : PrismClass::Repelling;
}

/// Eigenvalue law of g^2: eigenvalues {1, lambda, 1/lambda}.  Verifies the
/// characteristic-polynomial identity on the actual matrix before reporting.
template <class T>
EigenReport<T> lambda_of(const PrismParamsT<T>& p) {
  p.validate();
  PrismSceneT<T> sc = build_scene(p);
  T lambda = lambda_formula(p);
  T expected = scalar_one(p.r) + lambda + lambda.inverse();
  if constexpr (scalar_is_exact_v<T>) {
    if (sc.g2.trace() != expected || sc.g2.second_invariant() != expected ||
        sc.g2.det() != scalar_one(p.r))
      throw std::logic_error("lambda_of: characteristic polynomial deviates from (x-1)(x-lambda)(x-1/lambda)");
  }
  return {lambda, classify_lambda(lambda), expected};
}

/// mu(t) = sqrt((1+t)/t): r = mu s is exactly the parabolic (Pappus) locus.
QuadExt pappus_mu(const Rat& t);

template <class T>
struct PartnerReport {
  FlagTriple<T> partner_flags;  // (b'_k, L'_{k+1})
  T tau_prime;                  // raw triple product of the partner triple
  bool swap_verified = false;   // elliptic polarity exchanges f'_1 and f'_2
  T lambda_partner;             // 1/lambda: the partner flag's eigenvalue
};

/// First nonzero column of the adjugate of (m - mu I): an exact eigenvector
/// for the eigenvalue mu when mu is a simple root.
template <class T>
HVec<T> eigenvector_adjugate(const Mat3<T>& m, const T& mu) {
  Mat3<T> shifted = m - Mat3<T>::diagonal(mu, mu, mu);
  Mat3<T> adj = shifted.adjugate();
  for (int c = 0; c < 3; ++c) {
    HVec<T> col = adj.column(c);
    if (!col.is_zero_vector()) return col;
  }
  throw std::domain_error("eigenvector_adjugate: adjugate vanished (non-simple eigenvalue?)");
}

/// The second prism description: the flag triple attached to the 1/lambda
/// eigenvalue of g^2, its raw triple invariant, and the polarity swap check.
template <class T>
PartnerReport<T> partner(const PrismParamsT<T>& p) {
  p.validate();
  T lambda = lambda_formula(p);
  if (lambda == scalar_from_long(-1, p.r))
    throw std::domain_error("partner undefined on Pappus locus");
  PrismSceneT<T> sc = build_scene(p);
  T inv_lambda = lambda.inverse();

  HVec<T> bp1 = eigenvector_adjugate(sc.g2, inv_lambda);
  Mat3<T> g2_inv_t = sc.g2.inverse().transposed();
  HVec<T> lp2 = eigenvector_adjugate(g2_inv_t, inv_lambda);

  // The orbit under M3 (lines also map by M3 since (M3^{-1})^t = M3).
  HVec<T> bp2 = sc.M3 * bp1, bp3 = sc.M3 * bp2;
  HVec<T> lp3 = sc.M3 * lp2, lp1 = sc.M3 * lp3;

  PartnerReport<T> rep;
  rep.partner_flags = {Flag<T>{bp1, lp2}, Flag<T>{bp2, lp3}, Flag<T>{bp3, lp1}};
  rep.tau_prime = triple_product(rep.partner_flags);
  rep.lambda_partner = inv_lambda;
  // Delta o M2 maps the point b'_1 to the line M2 b'_1 and the line L'_2 to
  // the point M2^{-1} L'_2; exchanging f'_1 = (b'_1, L'_2) with
  // f'_2 = (b'_2, L'_3) means:
  rep.swap_verified = projective_equal(sc.M2 * bp1, lp3) &&
                      projective_equal(sc.M2_inv * lp2, bp2);
  return rep;
}

/// tau' from the closed-form certificate polynomials:
/// generic -(1+t)^3 A^3/(t^3 B^3); non-generic -N^3/D^3.
Rat tau_prime_closed(const PrismParams& p, const FixtureSet& fx);

// --- parametrization symmetries -------------------------------------------

/// iota_1(r,s,t) = (r0^2/r, s0^2/s, t); an involution.  The fixed point
/// (r0, s0) is supplied by the caller.
template <class T>
PrismParamsT<T> iota1(const PrismParamsT<T>& p, const T& r0, const T& s0) {
  return {r0 * r0 / p.r, s0 * s0 / p.s, p.t};
}

/// Duality involution iota_2(r,s,t) = (s0^2/s, r0^2/r, -1-t); swaps the
/// t > 0 and t < -1 ranges.
template <class T>
PrismParamsT<T> iota2(const PrismParamsT<T>& p, const T& r0, const T& s0) {
  std::optional<T> t;
  if (p.t) t = scalar_from_long(-1, p.r) - *p.t;
  return {s0 * s0 / p.s, r0 * r0 / p.r, t};
}

/// The generic closed form of the trace derivative along the elliptic-side
/// deformation, as a function of (s, t) on the parabolic locus r = mu(t) s.
template <class T>
T elliptic_derivative_closed_form(const T& s, const T& t) {
  T one = scalar_one(s);
  auto k = [&](long v) { return scalar_from_long(v, s); };
  T s2 = s * s, t2 = t * t;
  T a = k(3) * t2 + k(3) * t + one;
  T b = k(2) * t * t2 + k(3) * t2 + k(3) * t + one;
  T num = (k(2) * t + one) * (k(16) * s2 * s2 * a * a + k(8) * s2 * t * b + t2);
  T den = k(8) * s2 * t * t2 * (t + one) * (t + one);
  return num / den;
}

/// d(trace g^2(u))/du at u = 0 for the conjugated order-3 generator
/// M3(u) = diag(1+u,1,1) M3 diag(1+u,1,1)^{-1}, computed with dual numbers.
/// Works at any parameters; the closed forms apply on the parabolic locus.
template <class T>
T elliptic_derivative_via_jets(const PrismParamsT<T>& p) {
  using J = Jet<T>;
  T one = scalar_one(p.r);
  J jone(one);
  J u = J::variable(scalar_zero(p.r), one);
  Mat3<J> tau = Mat3<J>::diagonal(jone + u, jone, jone);
  Mat3<J> m3 = rotation_order3(jone);
  Mat3<J> m3u = tau * m3 * tau.inverse();
  std::optional<J> t;
  if (p.t) t = J(*p.t);
  auto sc = build_scene_with_m3<J>(J(p.r), J(p.s), t, m3u);
  return sc.g2.trace().der;
}

/// The elliptic-side derivative on the parabolic locus: the closed form
/// for generic parameters (r = mu(t) s), 2 + 18 s^2 for non-generic (r = s).
template <class T>
T elliptic_derivative(const PrismParamsT<T>& p) {
  p.validate();
  if (!(lambda_formula(p) == scalar_from_long(-1, p.r)))
    throw std::domain_error("elliptic_derivative: parameters are off the parabolic locus");
  if (p.t) return elliptic_derivative_closed_form(p.s, *p.t);
  T s2 = p.s * p.s;
  return scalar_from_long(2, p.r) + scalar_from_long(18, p.r) * s2;
}

enum class TranslationMode { Orthogonal, Medial };

template <class T>
struct TranslationReport {
  Mat3<T> J;
  std::vector<T> eigenvalues;  // {1, d^2, d^2} orthogonal; {d^2, 1/d^2, 1} medial
  double distance;             // sqrt(2/3) log d, resp. sqrt(2) log d
};

/// The translation J = (I1^{-1})^t I0 comparing the polarities at (r,s) and
/// at (rd, sd) (orthogonal) or (rd, s/d) (medial).  Verifies the predicted
/// eigenstructure exactly on the stated eigenvectors.
template <class T>
TranslationReport<T> translation_J(const PrismParamsT<T>& p, const T& d, TranslationMode mode) {
  p.validate();
  if (!(scalar_zero(d) < d)) throw std::domain_error("translation_J: d must be positive");
  PrismSceneT<T> sc0 = build_scene(p);
  PrismParamsT<T> q = p;
  q.r = p.r * d;
  q.s = mode == TranslationMode::Orthogonal ? p.s * d : p.s / d;
  PrismSceneT<T> sc1 = build_scene(q);
  Mat3<T> J = sc1.M2_inv.transposed() * sc0.M2;  // (I1^{-1})^t = I1^{-1}, symmetric
  T d2 = d * d;
  T one = scalar_one(d);
  auto check_eigen = [&](const HVec<T>& v, const T& mu) {
    if constexpr (scalar_is_exact_v<T>) {
      HVec<T> image = J * v;
      HVec<T> scaled{mu * v.x, mu * v.y, mu * v.z};
      if (!(image - scaled).is_zero_vector())
        throw std::logic_error("translation_J: predicted eigenstructure failed");
    }
  };
  TranslationReport<T> rep;
  rep.J = J;
  double abs_log_d = std::numeric_limits<double>::quiet_NaN();
  if constexpr (requires { d.to_double(); }) abs_log_d = std::fabs(std::log(d.to_double()));
  if (mode == TranslationMode::Orthogonal) {
    check_eigen(sc0.b1, d2);
    check_eigen(sc0.b2, d2);
    rep.eigenvalues = {one, d2, d2};
    rep.distance = std::sqrt(2.0 / 3.0) * abs_log_d;
  } else {
    check_eigen(sc0.b1, d2);
    check_eigen(sc0.b2, one / d2);
    check_eigen(sc0.a1, one);
    rep.eigenvalues = {d2, one / d2, one};
    rep.distance = std::sqrt(2.0) * abs_log_d;
  }
  return rep;
}

}  // namespace prismatic
