#include "prismatic/hvec.hpp"

namespace prismatic {

namespace {

mpz_class lcm3(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t());
  return r;
}

}  // namespace

HVec<Rat> canonicalized(const HVec<Rat>& v) {
  if (v.is_zero_vector()) throw std::domain_error("HVec: zero vector has no canonical form");
  mpz_class scale = lcm3(v.x.den(), v.y.den(), v.z.den());
  mpz_class nx = v.x.num() * (scale / v.x.den());
  mpz_class ny = v.y.num() * (scale / v.y.den());
  mpz_class nz = v.z.num() * (scale / v.z.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nz.get_mpz_t());
  nx /= g;
  ny /= g;
  nz /= g;
  int lead = sgn(nx) != 0 ? sgn(nx) : (sgn(ny) != 0 ? sgn(ny) : sgn(nz));
  if (lead < 0) { nx = -nx; ny = -ny; nz = -nz; }
  return {Rat(nx), Rat(ny), Rat(nz)};
}

HVec<QuadExt> canonicalized(const HVec<QuadExt>& v) {
  if (v.is_zero_vector()) throw std::domain_error("HVec: zero vector has no canonical form");
  // Collect the six rational components, clear denominators, divide by the
  // common integer content, then fix the sign of the first nonzero
  // coordinate (exact sign in the quadratic field).
  const QuadExt* comps[3] = {&v.x, &v.y, &v.z};
  mpz_class scale = 1;
  for (const auto* c : comps) {
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), c->rational_part().den().get_mpz_t(),
            c->radical_part().den().get_mpz_t());
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
  }
  mpz_class g = 0;
  Rat s(scale);
  for (const auto* c : comps) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Rat(c->rational_part() * s).num().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Rat(c->radical_part() * s).num().get_mpz_t());
  }
  Rat factor = s / Rat(g);
  HVec<QuadExt> out{v.x * QuadExt(factor), v.y * QuadExt(factor), v.z * QuadExt(factor)};
  int lead = !out.x.is_zero() ? out.x.sign() : (!out.y.is_zero() ? out.y.sign() : out.z.sign());
  if (lead < 0) out = -out;
  return out;
}

}  // namespace prismatic
