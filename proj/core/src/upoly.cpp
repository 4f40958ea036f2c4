#include "prismatic/upoly.hpp"

#include <sstream>

namespace prismatic {

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& v = c_[static_cast<size_t>(i)];
    if (v.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v.str() << ")";
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

SturmCountResult sturm_count_detail(const UPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: lo must be < hi");
  SturmCountResult res;
  UPoly q = p;
  if (q.eval(lo).is_zero()) {
    auto [cof, mult] = q.deflate_at(lo);
    q = cof;
    res.lo_multiplicity = mult;
  }
  if (!q.is_zero() && q.eval(hi).is_zero()) {
    auto [cof, mult] = q.deflate_at(hi);
    q = cof;
    res.hi_multiplicity = mult;
  }
  if (q.is_zero() || q.degree() == 0) return res;
  SturmChain chain(q);
  // Roots of q in (lo, hi] = (lo, hi) since q(hi) != 0.
  res.count = chain.count_half_open(lo, hi);
  return res;
}

std::vector<RootInterval> isolate_positive_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("isolate_positive_roots: zero polynomial");
  UPoly q = p;
  if (q.eval(Rat(0)).is_zero()) q = q.deflate_at(Rat(0)).first;
  if (q.is_zero() || q.degree() == 0) return {};
  Rat bound = q.cauchy_bound();
  SturmChain chain(q);

  std::vector<RootInterval> out;
  struct Seg { Rat lo, hi; int count; };
  auto count_open = [&](const Rat& lo, const Rat& hi) {
    // q(lo), q(hi) may vanish at subdivision points; fall back to the
    // deflating counter in that case.
    if (q.eval(lo).is_zero() || q.eval(hi).is_zero()) return sturm_count(q, lo, hi);
    return chain.count_half_open(lo, hi);
  };
  std::vector<Seg> work{{Rat(0), bound, count_open(Rat(0), bound)}};
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1 && !q.eval(s.hi).is_zero()) {
      out.push_back({s.lo, s.hi});
      continue;
    }
    Rat mid = (s.lo + s.hi) / Rat(2);
    // nudge off a root of q so the two halves split cleanly
    while (q.eval(mid).is_zero()) mid = (s.lo + mid) / Rat(2);
    work.push_back({mid, s.hi, count_open(mid, s.hi)});
    work.push_back({s.lo, mid, count_open(s.lo, mid)});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

RefinedRoot refine_root(const UPoly& p, const RootInterval& iv, long prec) {
  if (sturm_count(p, iv.lo, iv.hi) != 1)
    throw std::domain_error("refine_root: interval does not isolate exactly one root");
  // endpoint roots do not belong to the open interval; divide them out so
  // the interior root shows a sign change
  UPoly q = p;
  if (q.eval(iv.lo).is_zero()) q = q.deflate_at(iv.lo).first;
  if (q.eval(iv.hi).is_zero()) q = q.deflate_at(iv.hi).first;
  Rat lo = iv.lo, hi = iv.hi;
  int slo = q.eval(lo).sign();
  int shi = q.eval(hi).sign();
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::domain_error("refine_root: no sign change over the isolating interval (multiple root?)");

  // Rational bisection down to ~prec/2 bits, then Newton in floats.
  long half_bits = prec / 2 + 8;
  for (long it = 0; it < half_bits; ++it) {
    Rat mid = (lo + hi) / Rat(2);
    int sm = q.eval(mid).sign();
    if (sm == 0) {
      // exact rational root
      BigFloat v(mid, prec);
      return {v, BigFloat(0, prec), mid, mid};
    }
    if (sm == slo) lo = mid; else hi = mid;
  }

  long work_prec = prec + 32;
  BigFloat x((lo + hi) / Rat(2), work_prec);
  UPoly dq = q.derivative();
  BigFloat flo(lo, work_prec), fhi(hi, work_prec);
  for (int it = 0; it < 64; ++it) {
    BigFloat fx = q.eval(x);
    if (fx.is_zero()) break;
    BigFloat dfx = dq.eval(x);
    if (dfx.is_zero()) break;
    BigFloat nx = x - fx / dfx;
    if (nx < flo || nx > fhi) break;  // stay inside the certified bracket
    if ((nx - x).abs() <= x.abs() * BigFloat::pow2(-(prec + 16), work_prec)) { x = nx; break; }
    x = nx;
  }
  BigFloat value = x.round_to(prec);
  BigFloat residual = p.eval(x.round_to(work_prec)).abs().round_to(prec);
  return {value, residual, lo, hi};
}

}  // namespace prismatic
