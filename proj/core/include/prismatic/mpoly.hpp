#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/rat.hpp"

namespace prismatic {

/// Exponent vector for up to `kMaxVars` variables, with cached total degree.
struct Mono {
  static constexpr int kMaxVars = 8;
  std::array<uint16_t, kMaxVars> e{};
  uint8_t n = 0;
  uint32_t deg = 0;

  static Mono unit(int nvars) {
    Mono m;
    m.n = static_cast<uint8_t>(nvars);
    return m;
  }
  uint16_t operator[](int i) const { return e[static_cast<size_t>(i)]; }
  void set(int i, uint16_t v) {
    deg += v;
    deg -= e[static_cast<size_t>(i)];
    e[static_cast<size_t>(i)] = v;
  }
  bool divides(const Mono& o) const {
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  Mono operator*(const Mono& o) const {
    Mono r = *this;
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<uint16_t>(r.e[i] + o.e[i]);
    r.deg += o.deg;
    return r;
  }
  Mono operator/(const Mono& o) const {
    Mono r = *this;
    for (int i = 0; i < n; ++i) {
      if (r.e[i] < o.e[i]) throw std::logic_error("Mono: inexact division");
      r.e[i] = static_cast<uint16_t>(r.e[i] - o.e[i]);
    }
    r.deg -= o.deg;
    return r;
  }
  friend bool operator==(const Mono& x, const Mono& y) { return x.n == y.n && x.e == y.e; }
};

/// Graded-lexicographic order, descending (leading term sorts first).
struct MonoGradedLexDesc {
  bool operator()(const Mono& x, const Mono& y) const {
    if (x.deg != y.deg) return x.deg > y.deg;
    for (int i = 0; i < x.n; ++i)
      if (x.e[i] != y.e[i]) return x.e[i] > y.e[i];
    return false;
  }
};

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
  if (names.size() > Mono::kMaxVars) throw std::invalid_argument("too many variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const VarList& a, const VarList& b) {
  return a == b || *a == *b;
}

/// Sparse multivariate polynomial over an exact coefficient field K, kept in
/// canonical form: no zero coefficients, terms ordered graded-lex over an
/// explicit variable list.  Variable lists are never inferred; binary
/// operations require identical lists.
template <class K>
class MPolyT {
 public:
  using Terms = std::map<Mono, K, MonoGradedLexDesc>;

  MPolyT() : vars_(make_vars({})) {}
  explicit MPolyT(VarList vars) : vars_(std::move(vars)) {}

  static MPolyT zero(const VarList& vars) { return MPolyT(vars); }
  static MPolyT constant(const VarList& vars, K c) {
    MPolyT p(vars);
    if (!c.is_zero()) p.terms_.emplace(Mono::unit(p.nvars()), std::move(c));
    return p;
  }
  static MPolyT var(const VarList& vars, int index, int power = 1) {
    MPolyT p(vars);
    if (index < 0 || index >= p.nvars()) throw std::out_of_range("MPolyT::var index");
    Mono m = Mono::unit(p.nvars());
    m.set(index, static_cast<uint16_t>(power));
    p.terms_.emplace(m, K(1));
    return p;
  }
  static MPolyT term(const VarList& vars, K c, const std::vector<int>& exps) {
    MPolyT p(vars);
    if (static_cast<int>(exps.size()) != p.nvars())
      throw std::invalid_argument("MPolyT::term: exponent count mismatch");
    if (c.is_zero()) return p;
    Mono m = Mono::unit(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) m.set(i, static_cast<uint16_t>(exps[static_cast<size_t>(i)]));
    p.terms_.emplace(m, std::move(c));
    return p;
  }

  const VarList& vars() const { return vars_; }
  int nvars() const { return static_cast<int>(vars_->size()); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.deg == 0); }
  std::size_t term_count() const { return terms_.size(); }

  K constant_value() const {
    if (terms_.empty()) return K(0);
    if (!is_constant()) throw std::logic_error("MPolyT: not a constant");
    return terms_.begin()->second;
  }

  int var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if ((*vars_)[static_cast<size_t>(i)] == name) return i;
    throw std::invalid_argument("MPolyT: unknown variable " + name);
  }

  int degree(int v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
    return d;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.deg));
    return d;
  }

  const K& leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("MPolyT: leading term of zero");
    return terms_.begin()->second;
  }
  const Mono& leading_mono() const {
    if (terms_.empty()) throw std::logic_error("MPolyT: leading term of zero");
    return terms_.begin()->first;
  }

  void add_term(const Mono& m, const K& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  MPolyT operator-() const {
    MPolyT r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MPolyT operator+(const MPolyT& a, const MPolyT& b) {
    a.check_vars(b);
    MPolyT r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend MPolyT operator-(const MPolyT& a, const MPolyT& b) {
    a.check_vars(b);
    MPolyT r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }
  friend MPolyT operator*(const MPolyT& a, const MPolyT& b) {
    a.check_vars(b);
    MPolyT r(a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MPolyT& operator+=(const MPolyT& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPolyT& operator-=(const MPolyT& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPolyT& operator*=(const MPolyT& o) { *this = *this * o; return *this; }

  /// *this += p * q without materializing the product.
  MPolyT& add_product(const MPolyT& p, const MPolyT& q) {
    p.check_vars(q);
    check_vars(p);
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) add_term(mp * mq, cp * cq);
    return *this;
  }

  friend MPolyT operator*(const MPolyT& a, const K& s) {
    MPolyT r(a.vars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend MPolyT operator*(const K& s, const MPolyT& a) { return a * s; }
  friend MPolyT operator/(const MPolyT& a, const K& s) {
    if (s.is_zero()) throw std::domain_error("MPolyT: division by zero scalar");
    MPolyT r(a.vars_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c / s);
    return r;
  }

  friend bool operator==(const MPolyT& a, const MPolyT& b) {
    a.check_vars(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPolyT& a, const MPolyT& b) { return !(a == b); }

  MPolyT pow(int e) const {
    if (e < 0) throw std::domain_error("MPolyT: negative power");
    MPolyT r = constant(vars_, K(1));
    MPolyT base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = (e >>= 1) ? base * base : base;
    }
    return r;
  }

  MPolyT derivative(int v) const {
    MPolyT r(vars_);
    for (const auto& [m, c] : terms_) {
      if (m[v] == 0) continue;
      Mono d = m;
      d.set(v, static_cast<uint16_t>(m[v] - 1));
      r.add_term(d, c * K(static_cast<long>(m[v])));
    }
    return r;
  }

  /// Coefficients of this polynomial viewed as univariate in `v`; entry [i]
  /// is the coefficient of v^i, carried on the full variable list.
  std::vector<MPolyT> coeffs_in(int v) const {
    std::vector<MPolyT> out(static_cast<size_t>(degree(v)) + 1, MPolyT(vars_));
    for (const auto& [m, c] : terms_) {
      Mono red = m;
      red.set(v, 0);
      out[m[v]].add_term(red, c);
    }
    return out;
  }

  /// Full evaluation at scalars of any field T reachable from K via `conv`.
  template <class T, class Conv>
  T evaluate(const std::vector<T>& point, Conv conv) const {
    if (static_cast<int>(point.size()) != nvars())
      throw std::invalid_argument("MPolyT::evaluate: point size mismatch");
    // powers per variable, filled lazily from exponent 1 up
    std::vector<std::vector<T>> pows(static_cast<size_t>(nvars()));
    for (int v = 0; v < nvars(); ++v) {
      int d = degree(v);
      auto& pv = pows[static_cast<size_t>(v)];
      if (d == 0) continue;
      pv.reserve(static_cast<size_t>(d));
      pv.push_back(point[static_cast<size_t>(v)]);
      for (int i = 2; i <= d; ++i) pv.push_back(pv.back() * point[static_cast<size_t>(v)]);
    }
    T acc = conv(K(0));
    for (const auto& [m, c] : terms_) {
      T t = conv(c);
      for (int v = 0; v < nvars(); ++v)
        if (m[v] > 0) t = t * pows[static_cast<size_t>(v)][static_cast<size_t>(m[v]) - 1];
      acc = acc + t;
    }
    return acc;
  }

  K evaluate(const std::vector<K>& point) const {
    return evaluate<K>(point, [](const K& c) { return c; });
  }

  /// Substitutes exact values for a subset of variables (by index); the
  /// result stays on the same variable list.
  MPolyT evaluate_partial(const std::vector<std::pair<int, K>>& values) const {
    MPolyT r(vars_);
    for (const auto& [m, c] : terms_) {
      K coeff = c;
      Mono red = m;
      for (const auto& [v, val] : values) {
        for (int i = 0; i < m[v]; ++i) coeff *= val;
        red.set(v, 0);
      }
      r.add_term(red, coeff);
    }
    return r;
  }

  /// p(var := num/den) cleared of denominators: returns (q, k) with
  /// q = den^k * p(var := num/den) and k = degree of p in var.  Exact.
  std::pair<MPolyT, int> substitute(int v, const MPolyT& num, const MPolyT& den) const {
    check_vars(num);
    check_vars(den);
    if (den.is_zero()) throw std::domain_error("MPolyT::substitute: zero denominator");
    int k = degree(v);
    std::vector<MPolyT> cs = coeffs_in(v);
    // Horner in num/den, cleared: q = sum c_i num^i den^(k-i)
    MPolyT q(vars_);
    std::vector<MPolyT> num_pow{constant(vars_, K(1))}, den_pow{constant(vars_, K(1))};
    for (int i = 1; i <= k; ++i) {
      num_pow.push_back(num_pow.back() * num);
      den_pow.push_back(den_pow.back() * den);
    }
    for (int i = 0; i <= k; ++i)
      q += cs[static_cast<size_t>(i)] * num_pow[static_cast<size_t>(i)] *
           den_pow[static_cast<size_t>(k - i)];
    return {q, k};
  }

  /// Exact division; nullopt when the division is not exact.
  std::optional<MPolyT> divided_by(const MPolyT& d) const {
    check_vars(d);
    if (d.is_zero()) throw std::domain_error("MPolyT: division by zero polynomial");
    MPolyT rem = *this;
    MPolyT quot(vars_);
    const Mono& dl = d.leading_mono();
    const K& dc = d.leading_coeff();
    while (!rem.is_zero()) {
      const Mono& rl = rem.leading_mono();
      if (!dl.divides(rl)) return std::nullopt;
      Mono qm = rl / dl;
      K qc = rem.leading_coeff() / dc;
      quot.add_term(qm, qc);
      for (const auto& [m, c] : d.terms_) rem.add_term(qm * m, -(qc * c));
    }
    return quot;
  }

  std::string str() const;

  void check_vars(const MPolyT& o) const {
    if (!same_vars(vars_, o.vars_))
      throw std::logic_error("MPolyT: variable lists differ");
  }

 private:
  VarList vars_;
  Terms terms_;
};

using MPoly = MPolyT<Rat>;

template <class K>
std::string MPolyT<K>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int v = 0; v < nvars(); ++v) {
      if (m[v] == 0) continue;
      os << "*" << (*vars_)[static_cast<size_t>(v)];
      if (m[v] > 1) os << "^" << static_cast<int>(m[v]);
    }
  }
  return os.str();
}

/// Rational content (Rat coefficients only): gcd of numerators over lcm of
/// denominators, signed positive.
inline Rat content(const MPoly& p) {
  Rat g(0);
  for (const auto& [m, c] : p.terms()) g = rat_gcd(g, c);
  return g.abs();
}

/// Primitive part with the leading coefficient normalized positive.
/// Returns {primitive, scale} with p == scale * primitive.
inline std::pair<MPoly, Rat> primitive_part(const MPoly& p) {
  if (p.is_zero()) return {p, Rat(1)};
  Rat c = content(p);
  if (p.leading_coeff().sign() < 0) c = -c;
  return {p / c, c};
}

/// Re-expresses `p` on the variable list `target` (a superset, matched by
/// name).  Used to compare fixtures declared over differently-sized lists.
template <class K>
MPolyT<K> lift_to(const MPolyT<K>& p, const VarList& target) {
  std::vector<int> where(static_cast<size_t>(p.nvars()), -1);
  for (int i = 0; i < p.nvars(); ++i) {
    const std::string& name = (*p.vars())[static_cast<size_t>(i)];
    for (size_t j = 0; j < target->size(); ++j)
      if ((*target)[j] == name) where[static_cast<size_t>(i)] = static_cast<int>(j);
    if (where[static_cast<size_t>(i)] < 0)
      throw std::invalid_argument("lift_to: variable " + name + " missing from target list");
  }
  MPolyT<K> r(target);
  for (const auto& [m, c] : p.terms()) {
    Mono t = Mono::unit(static_cast<int>(target->size()));
    for (int i = 0; i < p.nvars(); ++i) t.set(where[static_cast<size_t>(i)], m[i]);
    r.add_term(t, c);
  }
  return r;
}

}  // namespace prismatic
