#include "prismatic/prism.hpp"

namespace prismatic {

QuadExt pappus_mu(const Rat& t) {
  if (t.is_zero()) throw std::domain_error("pappus_mu: t = 0");
  Rat ratio = (Rat(1) + t) / t;
  if (ratio.sign() <= 0) throw std::domain_error("pappus_mu: (1+t)/t must be positive");
  return QuadExt::make_sqrt(ratio);
}

Rat tau_prime_closed(const PrismParams& p, const FixtureSet& fx) {
  p.validate();
  if (p.generic()) {
    const Rat& t = *p.t;
    std::vector<Rat> pt{p.r, p.s, t};
    Rat a = fx.monster_a().evaluate(pt);
    Rat b = fx.monster_b().evaluate(pt);
    if (b.is_zero()) throw std::domain_error("tau_prime_closed: denominator vanished");
    Rat w = Rat(1) + t;
    return -(w * w * w * a * a * a) / (t * t * t * b * b * b);
  }
  std::vector<Rat> pt{p.r, p.s};
  Rat n = fx.nongeneric_n().evaluate(pt);
  Rat d = fx.nongeneric_d().evaluate(pt);
  if (d.is_zero()) throw std::domain_error("tau_prime_closed: denominator vanished");
  return -(n * n * n) / (d * d * d);
}

}  // namespace prismatic
