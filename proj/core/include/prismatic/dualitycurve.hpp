#pragma once

#include <optional>

#include "prismatic/fixtures.hpp"
#include "prismatic/morph.hpp"
#include "prismatic/upoly.hpp"

namespace prismatic {

/// psi evaluated at exact rationals.
Rat psi_value(const FixtureSet& fx, const Rat& a, const Rat& b, const Rat& c, const Rat& d);

/// psi(a, b0, c0, d0) as a univariate polynomial in a.
UPoly psi_in_a(const FixtureSet& fx, const Rat& b, const Rat& c, const Rat& d);

struct CurvePoint {
  BigFloat a;
  Rat segment_lo, segment_hi;  // the foliating horizontal segment
  int certified_roots = 1;     // sturm count of psi on the segment
  bool degenerate_symmetric = false;  // (c,d) = (0,0): psi vanishes identically
  BigFloat residual;
};

/// The unique intersection of the duality curve with the foliating segment
/// at height b: the root of a -> psi(a,b,c,d) inside the good region,
/// uniqueness certified by a Sturm count.  At the symmetric point
/// (c,d) = (0,0) the curve is the vertical line a = 1.
CurvePoint duality_curve_point(const FixtureSet& fx, const Rat& b, const Rat& c, const Rat& d,
                               long prec = 128);

}  // namespace prismatic
