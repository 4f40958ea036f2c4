#include "prismatic/dualitycurve.hpp"

#include <sstream>

namespace prismatic {

Rat psi_value(const FixtureSet& fx, const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return fx.psi().evaluate({a, b, c, d});
}

UPoly psi_in_a(const FixtureSet& fx, const Rat& b, const Rat& c, const Rat& d) {
  MPoly partial = fx.psi().evaluate_partial({{1, b}, {2, c}, {3, d}});
  return UPoly::from_mpoly(partial, 0);
}

CurvePoint duality_curve_point(const FixtureSet& fx, const Rat& b, const Rat& c, const Rat& d,
                               long prec) {
  if (!(Rat(0) < b) || !(b < Rat(1)))
    throw std::domain_error("duality_curve_point: b must lie in (0,1)");
  for (const Rat* v : {&c, &d})
    if (!(Rat(-1) < *v) || !(*v < Rat(1)))
      throw std::domain_error("duality_curve_point: (c,d) must lie in (-1,1)^2");
  auto bounds = good_region_bounds(b);
  CurvePoint out;
  out.segment_lo = bounds->first;
  out.segment_hi = bounds->second;

  UPoly q = psi_in_a(fx, b, c, d);
  if (q.is_zero()) {
    if (!c.is_zero() || !d.is_zero())
      throw std::logic_error("duality_curve_point: psi vanished identically off the symmetric point");
    out.degenerate_symmetric = true;
    out.a = BigFloat(1, prec);
    out.residual = BigFloat(0, prec);
    return out;
  }

  int roots = sturm_count(q, out.segment_lo, out.segment_hi);
  out.certified_roots = roots;
  if (roots != 1) {
    std::ostringstream os;
    os << "duality_curve_point: expected exactly one root on the foliating segment, found "
       << roots << " at b=" << b.str() << " c=" << c.str() << " d=" << d.str();
    throw std::domain_error(os.str());
  }
  RefinedRoot root = refine_root(q, {out.segment_lo, out.segment_hi}, prec);
  out.a = root.value;
  out.residual = root.residual;
  return out;
}

}  // namespace prismatic
