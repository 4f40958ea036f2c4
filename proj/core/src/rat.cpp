#include "prismatic/rat.hpp"

namespace prismatic {

Rat Rat::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rat::parse: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    if (d == 0) throw std::domain_error("Rat::parse: zero denominator");
    return Rat(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rat(mpz_class(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  mpz_class n(digits), d(1);
  for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
  return Rat(n, d);
}

Rat Rat::pow(long e) const {
  if (e == 0) return Rat(1);
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::string Rat::str() const {
  std::string s = num().get_str();
  if (!is_integer()) s += "/" + den().get_str();
  return s;
}

Rat pow(const Rat& base, long e) { return base.pow(e); }

}  // namespace prismatic
