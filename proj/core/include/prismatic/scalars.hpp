#pragma once

#include <stdexcept>

#include "prismatic/bigfloat.hpp"
#include "prismatic/fraction.hpp"
#include "prismatic/jet.hpp"
#include "prismatic/mpoly.hpp"
#include "prismatic/quadext.hpp"
#include "prismatic/rat.hpp"

namespace prismatic {

// Factories that build scalars "like" a model value, so that context
// (float precision, variable lists, radicands) propagates through generic
// geometric code without global state.

inline Rat scalar_from_rat(const Rat& v, const Rat&) { return v; }
inline QuadExt scalar_from_rat(const Rat& v, const QuadExt&) { return QuadExt(v); }
inline BigFloat scalar_from_rat(const Rat& v, const BigFloat& model) {
  return BigFloat(v, model.prec());
}
template <class K>
MPolyT<K> scalar_from_rat(const Rat& v, const MPolyT<K>& model) {
  return MPolyT<K>::constant(model.vars(), K(v));
}
template <class K>
FracT<K> scalar_from_rat(const Rat& v, const FracT<K>& model) {
  if constexpr (std::is_same_v<K, Rat>) {
    return FracT<K>(MPolyT<K>::constant(model.vars(), v));
  } else {
    return FracT<K>(MPolyT<K>::constant(model.vars(), K(v)));
  }
}
template <class F>
Jet<F> scalar_from_rat(const Rat& v, const Jet<F>& model) {
  return Jet<F>(scalar_from_rat(v, model.val));
}

template <class T>
T scalar_from_long(long v, const T& model) {
  return scalar_from_rat(Rat(v), model);
}
template <class T>
T scalar_zero(const T& model) { return scalar_from_long(0, model); }
template <class T>
T scalar_one(const T& model) { return scalar_from_long(1, model); }

inline QuadExt scalar_sqrt3(const QuadExt&) { return QuadExt(Rat(0), Rat(1), 3); }
inline BigFloat scalar_sqrt3(const BigFloat& model) {
  return BigFloat(3, model.prec()).sqrt();
}
inline Rat scalar_sqrt3(const Rat&) {
  throw std::domain_error("sqrt(3) is not rational; use QuadExt scalars");
}
template <class K>
FracT<K> scalar_sqrt3(const FracT<K>& model) {
  if constexpr (std::is_same_v<K, QuadExt>) {
    return FracT<K>(MPolyT<K>::constant(model.vars(), QuadExt(Rat(0), Rat(1), 3)));
  } else {
    throw std::domain_error("sqrt(3) requires QuadExt coefficients");
  }
}
template <class F>
Jet<F> scalar_sqrt3(const Jet<F>& model) { return Jet<F>(scalar_sqrt3(model.val)); }

// Exactness marker: exact scalars support decidable zero tests, so generic
// code may use them for degeneracy detection.
template <class T>
inline constexpr bool scalar_is_exact_v = true;
template <>
inline constexpr bool scalar_is_exact_v<BigFloat> = false;
template <class F>
inline constexpr bool scalar_is_exact_v<Jet<F>> = scalar_is_exact_v<F>;

}  // namespace prismatic
