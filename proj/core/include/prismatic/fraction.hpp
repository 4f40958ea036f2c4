#pragma once

#include <stdexcept>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "prismatic/mpoly.hpp"

namespace prismatic {

namespace detail {

/// Leading coefficient of p viewed as univariate in v (a v-free polynomial).
template <class K>
MPolyT<K> lead_coeff_in(const MPolyT<K>& p, int v) {
  auto cs = p.coeffs_in(v);
  return cs.back();
}

/// Pseudo-remainder of a by b in the variable v, up to a v-free factor.
/// Sufficient for a PRS that re-normalizes by content at every step.
template <class K>
MPolyT<K> prem_loose(const MPolyT<K>& a, const MPolyT<K>& b, int v) {
  const int db = b.degree(v);
  MPolyT<K> lb = lead_coeff_in(b, v);
  MPolyT<K> r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    int dr = r.degree(v);
    MPolyT<K> lr = lead_coeff_in(r, v);
    MPolyT<K> shift = MPolyT<K>::var(r.vars(), v, dr - db);
    r = lb * r - lr * shift * b;
  }
  return r;
}

/// Largest absolute numerator over the (integer) coefficients.
inline mpz_class poly_height(const MPolyT<Rat>& p) {
  mpz_class h = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c.num());
    if (a > h) h = a;
  }
  return h;
}

/// Heuristic gcd for integer-coefficient polynomials: evaluate one variable
/// at a large integer, recurse, reconstruct the digits in that base, then
/// verify divisibility exactly.  (The verification makes it sound; on
/// failure the caller falls back to the pseudo-remainder sequence.)
inline std::optional<MPolyT<Rat>> gcdheu_z(const MPolyT<Rat>& p, const MPolyT<Rat>& q,
                                           int depth = 0) {
  using P = MPolyT<Rat>;
  if (depth > 8) return std::nullopt;
  int v = -1;
  for (int i = 0; i < p.nvars(); ++i)
    if (p.degree(i) > 0 || q.degree(i) > 0) { v = i; break; }
  if (v < 0) {
    // base case: the integer gcd carries the reconstruction payload
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), p.constant_value().num().get_mpz_t(),
            q.constant_value().num().get_mpz_t());
    return P::constant(p.vars(), Rat(g));
  }

  mpz_class hp = poly_height(p), hq = poly_height(q);
  mpz_class xi = 2 * (hp < hq ? hp : hq) + 29;
  const int max_digits = std::min(p.degree(v), q.degree(v)) + 1;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Rat xi_r{xi};
    P pe = p.evaluate_partial({{v, xi_r}});
    P qe = q.evaluate_partial({{v, xi_r}});
    if (!pe.is_zero() && !qe.is_zero()) {
      auto gamma = gcdheu_z(pe, qe, depth + 1);
      if (gamma) {
        // digits of gamma in base xi are the coefficients of g along v
        P g = P::zero(p.vars());
        P rest = *gamma;
        bool ok = true;
        for (int i = 0; i < max_digits && !rest.is_zero(); ++i) {
          P digit = P::zero(p.vars());
          for (const auto& [m, c] : rest.terms()) {
            if (!c.is_integer()) { ok = false; break; }
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), c.num().get_mpz_t(), xi.get_mpz_t());
            if (2 * r > xi) r -= xi;  // balanced representative
            if (r != 0) digit.add_term(m, Rat(r));
          }
          if (!ok) break;
          g += digit * P::var(p.vars(), v, 1).pow(i);
          P next = rest - digit;
          P scaled = P::zero(p.vars());
          for (const auto& [m, c] : next.terms()) {
            mpz_class quot = c.num() / xi;  // exact by construction
            if (quot * xi != c.num()) { ok = false; break; }
            scaled.add_term(m, Rat(quot));
          }
          if (!ok) break;
          rest = scaled;
        }
        if (ok && rest.is_zero() && !g.is_zero()) {
          g = primitive_part(g).first;
          if (p.divided_by(g) && q.divided_by(g)) return g;
        }
      }
    }
    xi = xi * xi / 2 + 29;
  }
  return std::nullopt;
}

}  // namespace detail

/// Multivariate gcd over a coefficient field: heuristic integer-evaluation
/// gcd with exact verification where applicable, recursive primitive PRS
/// otherwise.  The result is normalized with leading coefficient 1.
template <class K>
MPolyT<K> mpoly_gcd(const MPolyT<K>& a, const MPolyT<K>& b) {
  a.check_vars(b);
  auto monic = [](const MPolyT<K>& p) {
    return p.is_zero() ? p : p / p.leading_coeff();
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MPolyT<K>::constant(a.vars(), K(1));

  if constexpr (std::is_same_v<K, Rat>) {
    auto heur = detail::gcdheu_z(primitive_part(a).first, primitive_part(b).first);
    if (heur) return monic(*heur);
  }

  int v = -1;
  for (int i = a.nvars() - 1; i >= 0; --i)
    if (a.degree(i) > 0 || b.degree(i) > 0) { v = i; break; }
  if (v < 0) return MPolyT<K>::constant(a.vars(), K(1));

  auto content_in = [&](const MPolyT<K>& p) {
    auto cs = p.coeffs_in(v);
    MPolyT<K> g = MPolyT<K>::zero(p.vars());
    for (const auto& c : cs) {
      if (c.is_zero()) continue;
      g = mpoly_gcd(g, c);
      if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
  };

  if (a.degree(v) == 0 || b.degree(v) == 0) {
    // One side is v-free; the gcd is v-free and divides the other's content.
    const MPolyT<K>& vfree = a.degree(v) == 0 ? a : b;
    const MPolyT<K>& other = a.degree(v) == 0 ? b : a;
    return mpoly_gcd(vfree, content_in(other));
  }

  MPolyT<K> ca = content_in(a), cb = content_in(b);
  auto ppa = a.divided_by(ca), ppb = b.divided_by(cb);
  if (!ppa || !ppb) throw std::logic_error("mpoly_gcd: content division failed");
  MPolyT<K> g_cont = mpoly_gcd(ca, cb);

  MPolyT<K> p = *ppa, q = *ppb;
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  while (true) {
    MPolyT<K> r = detail::prem_loose(p, q, v);
    if (r.is_zero()) break;
    auto cr = content_in(r);
    auto red = r.divided_by(cr);
    if (!red) throw std::logic_error("mpoly_gcd: primitive-part division failed");
    p = std::move(q);
    q = std::move(*red);
    if (q.degree(v) == 0) return monic(g_cont);  // coprime in v
  }
  // q is the primitive gcd of the primitive parts.
  auto cq = content_in(q);
  auto qq = q.divided_by(cq);
  if (!qq) throw std::logic_error("mpoly_gcd: final normalization failed");
  return monic(g_cont * *qq);
}

/// Field of fractions of MPolyT<K>: exact rational functions.  Reduced by
/// multivariate gcd with the denominator's leading coefficient fixed to 1.
template <class K>
class FracT {
 public:
  using Poly = MPolyT<K>;

  FracT() : num_(), den_(Poly::constant(num_.vars(), K(1))) {}
  explicit FracT(Poly num)
      : num_(std::move(num)), den_(Poly::constant(num_.vars(), K(1))) {}
  FracT(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("FracT: zero denominator");
    reduce_();
  }

  static FracT from_long(const VarList& vars, long v) {
    return FracT(Poly::constant(vars, K(v)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  FracT operator-() const { return FracT(-num_, den_, NoReduce{}); }
  friend FracT operator+(const FracT& x, const FracT& y) {
    return FracT(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend FracT operator-(const FracT& x, const FracT& y) {
    return FracT(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend FracT operator*(const FracT& x, const FracT& y) {
    return FracT(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend FracT operator/(const FracT& x, const FracT& y) {
    if (y.is_zero()) throw std::domain_error("FracT: division by zero");
    return FracT(x.num_ * y.den_, x.den_ * y.num_);
  }
  FracT& operator+=(const FracT& o) { *this = *this + o; return *this; }
  FracT& operator-=(const FracT& o) { *this = *this - o; return *this; }
  FracT& operator*=(const FracT& o) { *this = *this * o; return *this; }
  FracT& operator/=(const FracT& o) { *this = *this / o; return *this; }

  FracT inverse() const {
    if (is_zero()) throw std::domain_error("FracT: inverse of zero");
    return FracT(den_, num_);
  }

  /// Exact equality via cross-multiplication (no gcd required).
  friend bool operator==(const FracT& x, const FracT& y) {
    return x.num_ * y.den_ == y.num_ * x.den_;
  }
  friend bool operator!=(const FracT& x, const FracT& y) { return !(x == y); }

  std::string str() const {
    if (is_polynomial()) {
      K c = den_.constant_value();
      return c.is_one() ? num_.str() : (num_ / c).str();
    }
    return "(" + num_.str() + ") / (" + den_.str() + ")";
  }

 private:
  struct NoReduce {};
  FracT(Poly num, Poly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce_() {
    if (num_.is_zero()) {
      den_ = Poly::constant(num_.vars(), K(1));
      return;
    }
    if (!den_.is_constant()) {
      cancel_common_monomial_();
    }
    if (!den_.is_constant()) {
      Poly g = mpoly_gcd(num_, den_);
      if (!g.is_constant()) {
        auto n = num_.divided_by(g);
        auto d = den_.divided_by(g);
        if (!n || !d) throw std::logic_error("FracT: gcd does not divide");
        num_ = std::move(*n);
        den_ = std::move(*d);
      }
    }
    const K lc = den_.leading_coeff();
    if (!lc.is_one()) {
      num_ = num_ / lc;
      den_ = den_ / lc;
    }
  }

  // dividing out the common monomial factor is cheap and frequent
  void cancel_common_monomial_() {
    auto min_exps = [](const Poly& p) {
      std::array<uint16_t, Mono::kMaxVars> e;
      e.fill(std::numeric_limits<uint16_t>::max());
      for (const auto& [m, c] : p.terms())
        for (int i = 0; i < p.nvars(); ++i) e[static_cast<size_t>(i)] = std::min(e[static_cast<size_t>(i)], m.e[static_cast<size_t>(i)]);
      return e;
    };
    auto en = min_exps(num_), ed = min_exps(den_);
    Mono common = Mono::unit(num_.nvars());
    bool any = false;
    for (int i = 0; i < num_.nvars(); ++i) {
      uint16_t m = std::min(en[static_cast<size_t>(i)], ed[static_cast<size_t>(i)]);
      if (m > 0 && m != std::numeric_limits<uint16_t>::max()) {
        common.set(i, m);
        any = true;
      }
    }
    if (!any) return;
    Poly divisor = Poly::zero(num_.vars());
    divisor.add_term(common, K(1));
    num_ = *num_.divided_by(divisor);
    den_ = *den_.divided_by(divisor);
  }

  Poly num_;
  Poly den_;
};

using Frac = FracT<Rat>;

}  // namespace prismatic
