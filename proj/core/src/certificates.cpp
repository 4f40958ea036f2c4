#include "prismatic/certificates.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "prismatic/dualitycurve.hpp"
#include "prismatic/jet.hpp"
#include "prismatic/morph.hpp"
#include "prismatic/prism.hpp"
#include "prismatic/resultant.hpp"
#include "prismatic/sampling.hpp"

namespace prismatic {

Suite parse_suite(const std::string& name) {
  if (name == "core") return Suite::Core;
  if (name == "blv") return Suite::Blv;
  if (name == "monster") return Suite::Monster;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite: " + name + " (expected core|blv|monster|all)");
}

namespace certs {
namespace {

using KQ = QuadExt;
using PQ = MPolyT<KQ>;   // polynomials over Q(sqrt 3)
using FQ = FracT<KQ>;    // rational functions over Q(sqrt 3)
using FR = FracT<Rat>;   // rational functions over Q

constexpr uint64_t kCertSeed = 0x5ca1ab1e;

CertificateResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  CertificateResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  try {
    auto [pass, detail] = body();
    r.pass = pass;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

PQ pconst(const VarList& v, const Rat& q) { return PQ::constant(v, KQ(q)); }
PQ psqrt3(const VarList& v) { return PQ::constant(v, KQ(Rat(0), Rat(1), 3)); }

/// The symbolic scene over Q(sqrt3)[vars]: S, delta = det S, and the
/// fraction-free polynomial part P with g^2 = P / delta^2 (valid because
/// (M2^{-1})^t = S S^t and (M3^{-1})^t = M3).
struct PolyScene {
  VarList vars;
  Mat3<PQ> S, M3;
  Mat3<PQ> P;
  PQ delta;
  HVec<PQ> a1, b1, b2, b3, L1, L2, L3;
};

Mat3<PQ> poly_m3(const VarList& v) {
  PQ half = pconst(v, Rat(1, 2));
  PQ s32 = psqrt3(v) * half;
  PQ zero = PQ::zero(v), one = pconst(v, Rat(1));
  return {{-half, -s32, zero, s32, -half, zero, zero, zero, one}};
}

PolyScene poly_scene(const VarList& v, const PQ& r, const PQ& s, const PQ* t) {
  PolyScene sc;
  sc.vars = v;
  PQ half = pconst(v, Rat(1, 2));
  PQ one = pconst(v, Rat(1)), zero = PQ::zero(v), two = pconst(v, Rat(2));
  PQ s32 = psqrt3(v) * half;
  sc.a1 = {one, zero, one};
  HVec<PQ> a2{-half, s32, one}, a3{-half, -s32, one};
  if (t) {
    PQ w = one + *t;
    auto blend = [&](const HVec<PQ>& ak, const HVec<PQ>& prev) {
      return HVec<PQ>{w * ak.x - *t * prev.x, w * ak.y - *t * prev.y, w * ak.z - *t * prev.z};
    };
    sc.b1 = blend(sc.a1, a3);
    sc.b2 = blend(a2, sc.a1);
    sc.b3 = blend(a3, a2);
    sc.L1 = cross(a2, a3);
    sc.L2 = cross(a3, sc.a1);
    sc.L3 = cross(sc.a1, a2);
    sc.S = Mat3<PQ>::from_columns(two * r * sc.b1, two * s * sc.b2, sc.a1);
  } else {
    sc.b1 = sc.a1;
    sc.b2 = a2;
    sc.b3 = a3;
    HVec<PQ> origin{zero, zero, one};
    sc.L2 = cross(origin, sc.b1);
    sc.L3 = cross(origin, sc.b2);
    sc.L1 = cross(origin, sc.b3);
    sc.S = Mat3<PQ>::from_columns(two * r * sc.b1, two * s * sc.b2, origin);
  }
  sc.M3 = poly_m3(v);
  sc.delta = sc.S.det();
  Mat3<PQ> adj = sc.S.adjugate();
  sc.P = (sc.S * sc.S.transposed()) * sc.M3 * (adj.transposed() * adj) * sc.M3;
  return sc;
}

}  // namespace

CertificateResult eigenvalue_law_symbolic() {
  return timed("eigenvalue-law-symbolic", []() -> std::pair<bool, std::string> {
    // generic: lambda = -(r^2/s^2) t/(1+t)
    VarList v = make_vars({"r", "s", "t"});
    PQ r = PQ::var(v, 0), s = PQ::var(v, 1), t = PQ::var(v, 2);
    PQ one = pconst(v, Rat(1));
    PolyScene sc = poly_scene(v, r, s, &t);
    PQ w = r * r * s * s * t * (one + t);              // common denominator of 1 + l + 1/l
    PQ n = w - r.pow(4) * t * t - s.pow(4) * (one + t).pow(2);
    PQ d2 = sc.delta * sc.delta;
    bool generic_ok = sc.P.trace() * w == d2 * n &&
                      sc.P.second_invariant() * w == d2 * d2 * n &&
                      sc.P.det() == d2 * d2 * d2;
    // non-generic: lambda = -r^2/s^2
    VarList v2 = make_vars({"r", "s"});
    PQ r2 = PQ::var(v2, 0), s2 = PQ::var(v2, 1);
    PolyScene sc2 = poly_scene(v2, r2, s2, nullptr);
    PQ w2 = r2 * r2 * s2 * s2;
    PQ n2 = w2 - r2.pow(4) - s2.pow(4);
    PQ e2 = sc2.delta * sc2.delta;
    bool nongeneric_ok = sc2.P.trace() * w2 == e2 * n2 &&
                         sc2.P.second_invariant() * w2 == e2 * e2 * n2 &&
                         sc2.P.det() == e2 * e2 * e2;
    std::string detail = std::string("charpoly(g^2) = (x-1)(x-l)(x-1/l): generic l=-(r^2/s^2)t/(1+t) ") +
                         (generic_ok ? "ok" : "FAIL") + "; non-generic l=-r^2/s^2 " +
                         (nongeneric_ok ? "ok" : "FAIL");
    return {generic_ok && nongeneric_ok, detail};
  });
}

CertificateResult det_s_symbolic() {
  return timed("det-S-symbolic", []() -> std::pair<bool, std::string> {
    VarList v = make_vars({"r", "s", "t"});
    PQ r = PQ::var(v, 0), s = PQ::var(v, 1), t = PQ::var(v, 2);
    PQ one = pconst(v, Rat(1));
    PolyScene sc = poly_scene(v, r, s, &t);
    bool generic_ok = sc.delta == pconst(v, Rat(6)) * psqrt3(v) * r * s * t * (one + t);
    VarList v2 = make_vars({"r", "s"});
    PQ r2 = PQ::var(v2, 0), s2 = PQ::var(v2, 1);
    PolyScene sc2 = poly_scene(v2, r2, s2, nullptr);
    bool ng_ok = sc2.delta == pconst(v2, Rat(2)) * psqrt3(v2) * r2 * s2;
    return {generic_ok && ng_ok,
            std::string("det S = 6 sqrt(3) r s t (1+t) ") + (generic_ok ? "ok" : "FAIL") +
                "; non-generic det S = 2 sqrt(3) r s " + (ng_ok ? "ok" : "FAIL")};
  });
}

CertificateResult first_invariant_symbolic() {
  return timed("first-invariant-symbolic", []() -> std::pair<bool, std::string> {
    VarList v = make_vars({"t"});
    PQ t = PQ::var(v, 0);
    PQ one = pconst(v, Rat(1));
    PolyScene sc = poly_scene(v, one, one, &t);  // r, s do not enter the flags
    PQ num = dot(sc.b1, sc.L3) * dot(sc.b2, sc.L1) * dot(sc.b3, sc.L2);
    PQ den = dot(sc.b1, sc.L1) * dot(sc.b2, sc.L2) * dot(sc.b3, sc.L3);
    bool generic_ok = num * (one + t).pow(3) == -(t.pow(3)) * den;
    VarList v0 = make_vars({"t"});
    PolyScene ng = poly_scene(v0, pconst(v0, Rat(1)), pconst(v0, Rat(1)), nullptr);
    PQ num0 = dot(ng.b1, ng.L3) * dot(ng.b2, ng.L1) * dot(ng.b3, ng.L2);
    PQ den0 = dot(ng.b1, ng.L1) * dot(ng.b2, ng.L2) * dot(ng.b3, ng.L3);
    bool ng_ok = num0 == -den0;
    return {generic_ok && ng_ok,
            std::string("chi = -t^3/(1+t)^3 ") + (generic_ok ? "ok" : "FAIL") +
                "; non-generic chi = -1 " + (ng_ok ? "ok" : "FAIL")};
  });
}

CertificateResult partner_values_111(const FixtureSet& fx) {
  return timed("partner-values-111", [&]() -> std::pair<bool, std::string> {
    PrismParamsT<QuadExt> p{QuadExt(1), QuadExt(1), QuadExt(Rat(1))};
    auto sc = build_scene(p);
    QuadExt chi = first_invariant(sc);
    bool chi_ok = chi == QuadExt(Rat(-1, 8));
    auto part = partner(p);
    Rat expect = -(Rat(9825, 5602).pow(3));
    bool tau_ok = part.tau_prime == QuadExt(expect);
    bool closed_ok = tau_prime_closed({Rat(1), Rat(1), Rat(1)}, fx) == expect;
    // prism invariants 3 log 2 and 3 log(9825/5602) at 256 bits
    BigFloat xi1 = prism_invariant(Rat(-1, 8), 256);
    BigFloat xi2 = prism_invariant(expect, 256);
    BigFloat target1 = BigFloat(3, 256) * BigFloat(2, 256).log();
    BigFloat target2 = BigFloat(3, 256) * BigFloat(Rat(9825, 5602), 256).log();
    BigFloat tol = BigFloat::pow2(-40, 256);  // 1e-12
    bool inv_ok = (xi1 - target1).abs() < tol && (xi2 - target2).abs() < tol;
    bool flip_ok = classify_lambda(lambda_formula(p)) == PrismClass::Repelling &&
                   classify_lambda(part.lambda_partner) == PrismClass::Attracting;
    bool pass = chi_ok && tau_ok && closed_ok && inv_ok && part.swap_verified && flip_ok;
    std::ostringstream os;
    os << "chi(1,1,1) = -1/8 " << (chi_ok ? "ok" : "FAIL")
       << "; tau' = -(9825/5602)^3 " << (tau_ok && closed_ok ? "ok" : "FAIL")
       << "; invariants 3log2, 3log(9825/5602) to 1e-12 " << (inv_ok ? "ok" : "FAIL")
       << "; swap " << (part.swap_verified ? "ok" : "FAIL")
       << "; attracting/repelling flip " << (flip_ok ? "ok" : "FAIL");
    return {pass, os.str()};
  });
}

CertificateResult partner_swap_symbolic() {
  return timed("partner-swap-symbolic", []() -> std::pair<bool, std::string> {
    VarList v = make_vars({"r", "s", "t"});
    PQ r = PQ::var(v, 0), s = PQ::var(v, 1), t = PQ::var(v, 2);
    PQ one = pconst(v, Rat(1));
    PolyScene sc = poly_scene(v, r, s, &t);
    // g^2 = P/delta^2; eigenvector of g^2 at 1/lambda solves (P - c1 I)v = 0
    // with c1 = delta^2/lambda; the line eigenvector solves row-wise with
    // c3 = delta^2 * lambda.
    PQ c1 = -(pconst(v, Rat(108)) * s.pow(4) * t * (one + t).pow(3));
    PQ c3 = -(pconst(v, Rat(108)) * r.pow(4) * t.pow(3) * (one + t));
    Mat3<PQ> B1 = sc.P - Mat3<PQ>::diagonal(c1, c1, c1);
    Mat3<PQ> B3 = sc.P - Mat3<PQ>::diagonal(c3, c3, c3);
    Mat3<PQ> adj1 = B1.adjugate();
    Mat3<PQ> adj3 = B3.adjugate();
    HVec<PQ> bp1;
    bool found = false;
    for (int c = 0; c < 3 && !found; ++c) {
      bp1 = adj1.column(c);
      found = !bp1.is_zero_vector();
    }
    if (!found) return {false, "adjugate column vanished for b'_1"};
    HVec<PQ> lp2;
    found = false;
    for (int rw = 0; rw < 3 && !found; ++rw) {
      lp2 = adj3.row(rw);
      found = !lp2.is_zero_vector();
    }
    if (!found) return {false, "adjugate row vanished for L'_2"};
    // eigen equations (sanity of the extraction)
    bool eig_ok = (B1 * bp1).is_zero_vector() && (B3.transposed() * lp2).is_zero_vector();
    HVec<PQ> bp2 = sc.M3 * bp1;
    HVec<PQ> lp3 = sc.M3 * lp2;
    // incidence of the partner flags
    bool inc_ok = dot(bp1, lp2).is_zero() && dot(bp2, lp3).is_zero();
    // Delta o M2 sends b'_1 to the line (A^t A) b'_1 and L'_2 to the point
    // (S S^t) L'_2; the swap means these are L'_3 and b'_2.
    Mat3<PQ> adjS = sc.S.adjugate();
    HVec<PQ> image_line = (adjS.transposed() * adjS) * bp1;
    HVec<PQ> image_point = (sc.S * sc.S.transposed()) * lp2;
    bool swap_ok = cross(image_line, lp3).is_zero_vector() &&
                   cross(image_point, bp2).is_zero_vector();
    std::ostringstream os;
    os << "eigenvector extraction " << (eig_ok ? "ok" : "FAIL")
       << "; partner flag incidence " << (inc_ok ? "ok" : "FAIL")
       << "; polarity swaps f'_1 <-> f'_2 " << (swap_ok ? "ok" : "FAIL");
    return {eig_ok && inc_ok && swap_ok, os.str()};
  });
}

CertificateResult elliptic_derivative_symbolic() {
  return timed("elliptic-derivative-symbolic", []() -> std::pair<bool, std::string> {
    // Rational parametrization of the parabolic locus: t = 1/(m^2-1),
    // r = m s (m plays the role of mu = sqrt((1+t)/t)).
    using F = FQ;
    using J = Jet<F>;
    VarList v = make_vars({"s", "m"});
    auto fvar = [&](int i) { return F(PQ::var(v, i)); };
    F sv = fvar(0), mv = fvar(1);
    F one{pconst(v, Rat(1))};
    F t = one / (mv * mv - one);
    F r = mv * sv;
    J u = J::variable(F{PQ::zero(v)}, one);
    J jone(one);
    Mat3<J> tau = Mat3<J>::diagonal(jone + u, jone, jone);
    Mat3<J> m3 = rotation_order3(jone);
    Mat3<J> m3u = tau * m3 * tau.inverse();
    auto scj = build_scene_with_m3<J>(J(r), J(sv), std::optional<J>(J(t)), m3u);
    F dphi = scj.g2.trace().der;
    auto sq = [&](const F& x) { return x * x; };
    auto kf = [&](long k) { return F{pconst(v, Rat(k))}; };
    F A = kf(3) * sq(t) + kf(3) * t + one;
    F Bv = kf(2) * t * sq(t) + kf(3) * sq(t) + kf(3) * t + one;
    F num = (kf(2) * t + one) * (kf(16) * sq(sq(sv)) * sq(A) + kf(8) * sq(sv) * t * Bv + sq(t));
    F den = kf(8) * sq(sv) * t * sq(t) * sq(t + one);
    bool generic_ok = dphi == num / den;

    // non-generic locus r = s: derivative is 2 + 18 s^2
    VarList v1 = make_vars({"s"});
    using F1 = FQ;
    F1 s1{PQ::var(v1, 0)};
    F1 one1{pconst(v1, Rat(1))};
    Jet<F1> u1 = Jet<F1>::variable(F1{PQ::zero(v1)}, one1);
    Jet<F1> jone1(one1);
    Mat3<Jet<F1>> tau1 = Mat3<Jet<F1>>::diagonal(jone1 + u1, jone1, jone1);
    Mat3<Jet<F1>> m31 = rotation_order3(jone1);
    Mat3<Jet<F1>> m3u1 = tau1 * m31 * tau1.inverse();
    auto scn = build_scene_with_m3<Jet<F1>>(Jet<F1>(s1), Jet<F1>(s1), std::nullopt, m3u1);
    F1 dphi1 = scn.g2.trace().der;
    bool ng_ok = dphi1 == F1{pconst(v1, Rat(2))} + F1{pconst(v1, Rat(18))} * s1 * s1;

    // t -> infinity limit of the closed form: 4 + 36 s^2
    VarList v2 = make_vars({"s", "t"});
    MPoly s2 = MPoly::var(v2, 0), t2 = MPoly::var(v2, 1);
    MPoly one2 = MPoly::constant(v2, Rat(1));
    MPoly A2 = MPoly::constant(v2, Rat(3)) * t2 * t2 + MPoly::constant(v2, Rat(3)) * t2 + one2;
    MPoly B2 = MPoly::constant(v2, Rat(2)) * t2.pow(3) + MPoly::constant(v2, Rat(3)) * t2 * t2 +
               MPoly::constant(v2, Rat(3)) * t2 + one2;
    MPoly num2 = (MPoly::constant(v2, Rat(2)) * t2 + one2) *
                 (MPoly::constant(v2, Rat(16)) * s2.pow(4) * A2 * A2 +
                  MPoly::constant(v2, Rat(8)) * s2 * s2 * t2 * B2 + t2 * t2);
    MPoly den2 = MPoly::constant(v2, Rat(8)) * s2 * s2 * t2.pow(3) * (t2 + one2).pow(2);
    auto num_lead = num2.coeffs_in(1).back();
    auto den_lead = den2.coeffs_in(1).back();
    MPoly limit_target = MPoly::constant(v2, Rat(4)) + MPoly::constant(v2, Rat(36)) * s2 * s2;
    bool limit_ok = num2.degree(1) == den2.degree(1) && num_lead == limit_target * den_lead;

    std::ostringstream os;
    os << "generic d(trace)/du matches the closed form " << (generic_ok ? "ok" : "FAIL")
       << "; non-generic = 2+18s^2 " << (ng_ok ? "ok" : "FAIL")
       << "; t->inf limit = 4+36s^2 " << (limit_ok ? "ok" : "FAIL");
    return {generic_ok && ng_ok && limit_ok, os.str()};
  });
}

CertificateResult translation_structures_symbolic() {
  return timed("translation-structures-symbolic", []() -> std::pair<bool, std::string> {
    VarList v = make_vars({"r", "s", "t", "d"});
    PQ r = PQ::var(v, 0), s = PQ::var(v, 1), t = PQ::var(v, 2), d = PQ::var(v, 3);
    PQ one = pconst(v, Rat(1));
    PolyScene base = poly_scene(v, r, s, &t);
    Mat3<PQ> adj0 = base.S.adjugate();
    Mat3<PQ> right = adj0.transposed() * adj0;  // delta0^2 * M2(r,s,t)
    PQ d0sq = base.delta * base.delta;
    PQ d2 = d * d;

    auto eigen_ok = [&](const Mat3<PQ>& m, const HVec<PQ>& vec, const PQ& mu) {
      HVec<PQ> img = m * vec;
      HVec<PQ> want{mu * vec.x, mu * vec.y, mu * vec.z};
      return (img - want).is_zero_vector();
    };

    // orthogonal: I1 = M2(rd, sd, t); J has eigenvalues (1, d^2, d^2) with
    // b1, b2 in the d^2 eigenspace.
    PolyScene sc1 = poly_scene(v, r * d, s * d, &t);
    Mat3<PQ> jo = (sc1.S * sc1.S.transposed()) * right;  // delta0^2 * J
    bool ortho_ok = eigen_ok(jo, base.b1, d0sq * d2) && eigen_ok(jo, base.b2, d0sq * d2) &&
                    jo.trace() == d0sq * (one + d2 + d2) &&
                    jo.det() == d2 * d2 * d0sq * d0sq * d0sq;

    // medial: I1 = M2(rd, s/d, t); J has eigenvalues (d^2, 1/d^2, 1) with
    // eigenvectors b1, b2, a1.  Cleared of 1/d: with
    // Jm := Stilde diag(d^2,1,d^2) Stilde^t (A0^t A0) = d^2 delta0^2 J.
    PolyScene scm = poly_scene(v, r * d, s, &t);  // Stilde = S1 diag(1,d,1)
    Mat3<PQ> mid = Mat3<PQ>::diagonal(d2, one, d2);
    Mat3<PQ> jm = scm.S * mid * scm.S.transposed() * right;
    PQ scale = d2 * d0sq;
    bool medial_ok = eigen_ok(jm, base.b1, scale * d2) && eigen_ok(jm, base.b2, d0sq) &&
                     eigen_ok(jm, base.a1, scale) &&
                     jm.trace() == d0sq * (d2 * d2 + d2 + one) &&
                     jm.det() == d2.pow(3) * d0sq * d0sq * d0sq;

    std::ostringstream os;
    os << "orthogonal shear J: eigenvalues (1,d^2,d^2) on b1,b2 " << (ortho_ok ? "ok" : "FAIL")
       << "; medial shear J: (d^2,1/d^2,1) on b1,b2,a1 " << (medial_ok ? "ok" : "FAIL");
    return {ortho_ok && medial_ok, os.str()};
  });
}

CertificateResult monster_equivalence(const FixtureSet& fx, int samples) {
  return timed("monster-equivalence", [&, samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x1);
    int done = 0, ng_done = 0;
    while (done < samples) {
      Rat r = rng.positive(), s = rng.positive(), t = rng.positive();
      PrismParamsT<QuadExt> p{QuadExt(r), QuadExt(s), QuadExt(t)};
      if (lambda_formula(p) == QuadExt(Rat(-1))) continue;  // partner undefined
      auto part = partner(p);
      Rat closed = tau_prime_closed({r, s, t}, fx);
      if (part.tau_prime != QuadExt(closed)) {
        std::ostringstream os;
        os << "mismatch at (" << r.str() << "," << s.str() << "," << t.str() << ")";
        return {false, os.str()};
      }
      ++done;
      // non-generic spot checks interleaved
      if (ng_done * 8 < samples) {
        PrismParamsT<QuadExt> q{QuadExt(r), QuadExt(s), std::nullopt};
        if (!(lambda_formula(q) == QuadExt(Rat(-1)))) {
          auto png = partner(q);
          Rat closed_ng = tau_prime_closed({r, s, std::nullopt}, fx);
          if (png.tau_prime != QuadExt(closed_ng))
            return {false, "non-generic mismatch at (" + r.str() + "," + s.str() + ")"};
          ++ng_done;
        }
      }
    }
    std::ostringstream os;
    os << "eigenflag tau' == -(1+t)^3 A^3/(t^3 B^3) at " << done
       << " random rational points (exact); non-generic -N^3/D^3 at " << ng_done;
    return {true, os.str()};
  });
}

CertificateResult monster_positivity(const FixtureSet& fx, int samples) {
  return timed("monster-positivity", [&, samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x2);
    for (int i = 0; i < samples; ++i) {
      Rat r = rng.positive(40, 20), s = rng.positive(40, 20), t = rng.positive(40, 20);
      Rat a = fx.monster_a().evaluate({r, s, t});
      Rat b = fx.monster_b().evaluate({r, s, t});
      if (a.sign() <= 0 || b.sign() <= 0) {
        std::ostringstream os;
        os << "positivity failed at (" << r.str() << "," << s.str() << "," << t.str() << ")";
        return {false, os.str()};
      }
    }
    std::ostringstream os;
    os << "A > 0 and B > 0 at " << samples << " random positive samples";
    return {true, os.str()};
  });
}

namespace {

// Fraction-free frame machinery over Q[a,b,c,d]: every projective object is
// carried as a polynomial representative.  frame_of_quad is projectively
// well-defined in its inputs, so vertex scales never matter.
using PR = MPolyT<Rat>;
using BoxP = MarkedBox<PR>;
using MatP = Mat3<PR>;

MatP frame_poly(const BoxP& box) {
  MatP m = MatP::from_columns(box.v[0], box.v[2], box.v[3]);
  HVec<PR> s = m.adjugate() * box.v[5];  // det * (true solution)
  return MatP::from_columns(s.x * box.v[0], s.y * box.v[2], s.z * box.v[3]);
}

BoxP apply_mat(const MatP& g, const BoxP& box) {
  BoxP out;
  for (size_t i = 0; i < 6; ++i) out.v[i] = g * box.v[i];
  return out;
}

/// Sigma_{a,b} cleared of denominators: 2ab * morph_matrix.
MatP morph_poly(const VarList& v) {
  PR a = PR::var(v, 0), b = PR::var(v, 1);
  PR one = PR::constant(v, Rat(1)), two = PR::constant(v, Rat(2));
  PR zero = PR::zero(v);
  PR b2 = b * b;
  return {{two * a * b, zero, zero,
           zero, one + b2, a * (b2 - one),
           zero, a * (b2 - one), a * a * (one + b2)}};
}

/// Projective polynomial version of morph_box.
BoxP morph_box_poly(const BoxP& box, const MatP& sigma, const MatP& w0) {
  MatP w1 = frame_poly(box);
  MatP ww = w0 * w1.adjugate();
  MatP ss = ww.adjugate() * sigma * ww;
  return apply_mat(ss, box);
}

}  // namespace

CertificateResult generators_closed_form(const FixtureSet& fx, bool fast) {
  if (fast) {
    return timed("generators-closed-form-sampled(FAST; not a certificate)",
                 [&]() -> std::pair<bool, std::string> {
                   RatSampler rng(kCertSeed ^ 0xa);
                   int done = 0;
                   while (done < 25) {
                     Rat a = rng.positive(), b = rng.positive();
                     Rat c = rng.unit_interval_open(), d = rng.unit_interval_open();
                     try {
                       auto gen = generators(a, b, c, d);
                       if (!(gen.r1 == r1_closed_form(fx, c, d)) ||
                           !(gen.r2 == r2_closed_form(fx, a, b, c, d)))
                         return {false, "closed-form mismatch at a sample point"};
                     } catch (const std::domain_error&) {
                       continue;
                     }
                     ++done;
                   }
                   return {true, "frame-built generators equal the closed forms exactly at 25 "
                                 "random points (fast mode)"};
                 });
  }
  return timed("generators-closed-form", [&]() -> std::pair<bool, std::string> {
    // Build the frame procedure fraction-free (projective polynomial
    // representatives), compare against the closed forms entrywise by
    // cross-multiplication, and pin the exact scale by the determinant cube
    // (a real cube root of 1 is 1).
    VarList v = make_vars({"a", "b", "c", "d"});
    PR a = PR::var(v, 0), b = PR::var(v, 1), c = PR::var(v, 2), d = PR::var(v, 3);
    PR one = PR::constant(v, Rat(1));
    BoxP y0 = BoxP::standard(c, d);
    MatP sigma = morph_poly(v);
    MatP w0 = frame_poly(BoxP::standard(PR::zero(v), PR::zero(v)));

    BoxP y1 = morph_box_poly(box_i(y0), sigma, w0);
    BoxP y2 = morph_box_poly(box_t(y0), sigma, w0);
    MatP mm1 = frame_poly(y1);
    MatP mm2 = frame_poly(y2);
    MatP r1_proj = mm2 * mm1.adjugate();  // r1 up to a rational-function scale

    BoxP swapped{{y0.v[2], y0.v[1], y0.v[0], y0.v[5], y0.v[4], y0.v[3]}};
    BoxP z2 = morph_box_poly(box_t(y1), sigma, w0);
    MatP nn1 = frame_poly(swapped);
    MatP nn2 = frame_poly(z2);
    MatP r2_proj = nn2 * nn1.adjugate();

    // fixture numerators (denominators (c^2-1)(d^2-1) and 4 a^2 b^2)
    MatP p1, p2;
    for (int i = 0; i < 9; ++i) {
      p1.a[static_cast<size_t>(i)] = lift_to(fx.r1_num()[static_cast<size_t>(i)], v);
      p2.a[static_cast<size_t>(i)] = lift_to(fx.r2_num()[static_cast<size_t>(i)], v);
    }
    bool r1_proj_ok = projective_equal(r1_proj, p1);
    bool r2_proj_ok = projective_equal(r2_proj, p2);

    // scale pinning: built/fixture = sigma with sigma^3 = det ratio = 1.
    // det(r1_proj) = w^3 det(fixture-matrix-over-its-denominator) exactly
    // when the built matrix is w * fixture; fixture r1 has det(P)/pref^3.
    PR pref1 = (c * c - one) * (d * d - one);
    PR pref2 = PR::constant(v, Rat(4)) * a * a * b * b;
    // choose a nonzero fixture entry and read off the built/fixture
    // cross-ratio w as a fraction, then verify w^3 * pref^3 * detP == detB * ...
    auto scale_cubed_is_one = [&](const MatP& built, const MatP& fixture_num, const PR& pref) {
      int pivot = -1;
      for (int i = 0; i < 9 && pivot < 0; ++i)
        if (!fixture_num.a[static_cast<size_t>(i)].is_zero()) pivot = i;
      const PR& bp = built.a[static_cast<size_t>(pivot)];
      const PR& fp = fixture_num.a[static_cast<size_t>(pivot)];
      // built = (bp/fp) * fixture_num entrywise (projective equality holds),
      // and true_fixture = fixture_num / pref, so built = (bp*pref/fp) * true.
      // det(built) = (bp*pref/fp)^3 det(true_fixture); require the cube to
      // pin the scalar to 1: det(built) * fp^3 == det(fixture_num) * bp^3 / ...
      PR det_built = built.det();
      PR det_num = fixture_num.det();
      // det(true) = det_num / pref^3;  want (bp*pref/fp)^3 * det_num/pref^3
      //           == det_built  <=>  bp^3 * det_num == fp^3 * det_built
      return bp.pow(3) * det_num == fp.pow(3) * det_built;
    };
    bool r1_scale_ok = scale_cubed_is_one(r1_proj, p1, pref1);
    bool r2_scale_ok = scale_cubed_is_one(r2_proj, p2, pref2);

    bool pass = r1_proj_ok && r2_proj_ok && r1_scale_ok && r2_scale_ok;
    std::ostringstream os;
    os << "frame-built r1 equals its stored closed form (projective identity + det-cube scale pin) "
       << (r1_proj_ok && r1_scale_ok ? "ok" : "FAIL") << "; r2 likewise "
       << (r2_proj_ok && r2_scale_ok ? "ok" : "FAIL");
    return {pass, os.str()};
  });
}

CertificateResult generators_order3(const FixtureSet& fx) {
  return timed("generators-order3", [&]() -> std::pair<bool, std::string> {
    VarList v = make_vars({"a", "b", "c", "d"});
    auto fvar = [&](int i) { return FR(MPoly::var(v, i)); };
    FR av = fvar(0), bv = fvar(1), cv = fvar(2), dv = fvar(3);
    FR one = FR(MPoly::constant(v, Rat(1)));
    Mat3<FR> r1 = r1_closed_form(fx, cv, dv);
    Mat3<FR> r2 = r2_closed_form(fx, av, bv, cv, dv);
    auto scalar_multiple_of_identity = [&](const Mat3<FR>& m) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j && !m(i, j).is_zero()) return false;
      return m(0, 0) == m(1, 1) && m(1, 1) == m(2, 2) && !m(0, 0).is_zero();
    };
    Mat3<FR> r1cube = r1 * r1 * r1;
    Mat3<FR> r2cube = r2 * r2 * r2;
    bool order3_ok = scalar_multiple_of_identity(r1cube) && scalar_multiple_of_identity(r2cube);
    bool det_ok = (r1 * r2).det() == one;
    std::ostringstream os;
    os << "r1^3 and r2^3 are scalar multiples of the identity " << (order3_ok ? "ok" : "FAIL")
       << "; det(r1 r2) = 1 identically " << (det_ok ? "ok" : "FAIL");
    return {order3_ok && det_ok, os.str()};
  });
}

CertificateResult generators_parabolic_pappus(const FixtureSet& fx) {
  return timed("generators-parabolic-pappus", [&]() -> std::pair<bool, std::string> {
    VarList v = make_vars({"c", "d"});
    auto cvar = FR(MPoly::var(v, 0)), dvar = FR(MPoly::var(v, 1));
    FR one = FR(MPoly::constant(v, Rat(1)));
    Mat3<FR> r1 = r1_closed_form(fx, cvar, dvar);
    std::vector<FR> pt{one, one, cvar, dvar};
    Mat3<FR> r2;
    for (int i = 0; i < 9; ++i)
      r2.a[static_cast<size_t>(i)] =
          fx.r2_num()[static_cast<size_t>(i)].evaluate<FR>(
              pt, [&](const Rat& q) { return FR(MPoly::constant(v, q)); });
    FR four = FR(MPoly::constant(v, Rat(4)));
    r2 = (four).inverse() * r2;  // 1/(4 a^2 b^2) at a=b=1
    Mat3<FR> m = r1 * r2;
    FR neg_one = -one;
    bool det_ok = m.det() == one;
    // charpoly (x-1)(x+1)^2: trace = e2 = -1 (equivalently
    // Tr(r1 r2) = Tr((r1 r2)^{-1}), the psi = 0 condition)
    bool trace_ok = m.trace() == neg_one && m.second_invariant() == neg_one;
    // parabolic, not an involution: (M - I)(M + I) != 0
    Mat3<FR> id = Mat3<FR>::identity(one);
    bool not_diagonalizable = !((m - id) * (m + id)).is_zero();
    std::ostringstream os;
    os << "at (a,b)=(1,1): det(r1 r2) = 1 " << (det_ok ? "ok" : "FAIL")
       << "; charpoly(r1 r2) = (x-1)(x+1)^2 (trace = e2 = -1) " << (trace_ok ? "ok" : "FAIL")
       << "; (M-I)(M+I) != 0, so the repeated eigenvalue is non-diagonalizable (parabolic) "
       << (not_diagonalizable ? "ok" : "FAIL");
    return {det_ok && trace_ok && not_diagonalizable, os.str()};
  });
}

CertificateResult psi_trace_identity(const FixtureSet& fx, int samples) {
  return timed("psi-trace-identity", [&, samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x3);
    int done = 0;
    while (done < samples) {
      Rat a = rng.positive(), b = rng.positive();
      Rat c = rng.unit_interval_open(), d = rng.unit_interval_open();
      try {
        auto gen = generators(a, b, c, d);
        Rat lhs = (gen.r1 * gen.r2).trace() - (gen.r1 * gen.r1 * gen.r2 * gen.r2).trace();
        Rat cof = Rat(4) * a * a * b * b * (c * c - Rat(1)) * (d * d - Rat(1));
        Rat rhs = fx.psi().evaluate({a, b, c, d}) / cof;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "trace identity failed at (" << a.str() << "," << b.str() << "," << c.str() << ","
             << d.str() << ")";
          return {false, os.str()};
        }
      } catch (const std::domain_error&) {
        continue;  // degenerate sample; draw another
      }
      ++done;
    }
    std::ostringstream os;
    os << "Tr(r1 r2) - Tr(r1^2 r2^2) = psi / (4 a^2 b^2 (c^2-1)(d^2-1)) exactly at " << done
       << " samples";
    return {true, os.str()};
  });
}

CertificateResult psi_d0_factorization(const FixtureSet& fx) {
  return timed("psi-d0-factorization", [&]() -> std::pair<bool, std::string> {
    const MPoly& psi = fx.psi();
    const VarList& v = psi.vars();
    MPoly at_d0 = psi.evaluate_partial({{3, Rat(0)}});
    MPoly a = MPoly::var(v, 0), b = MPoly::var(v, 1), c = MPoly::var(v, 2);
    MPoly one = MPoly::constant(v, Rat(1));
    MPoly target = (a * a - one) * (b * b + one) *
                   (one - a + a * a + b * b + a * b * b + a * a * b * b) * c * c;
    bool ok = at_d0 == target;
    // psi(1,1,c,d) = 0 identically
    MPoly at_ab1 = psi.evaluate_partial({{0, Rat(1)}, {1, Rat(1)}});
    bool pappus_ok = at_ab1.is_zero();
    std::ostringstream os;
    os << "psi|_{d=0} = (a^2-1)(b^2+1)(1-a+a^2+b^2+ab^2+a^2b^2) c^2 "
       << (ok ? "ok (exact exponent is c^2)" : "FAIL")
       << "; psi(1,1,c,d) = 0 " << (pappus_ok ? "ok" : "FAIL");
    return {ok && pappus_ok, os.str()};
  });
}

CertificateResult boundary_restrictions(const FixtureSet& fx) {
  return timed("boundary-restrictions", [&]() -> std::pair<bool, std::string> {
    const MPoly& psi = fx.psi();
    const VarList& v = psi.vars();
    MPoly b = MPoly::var(v, 1);
    MPoly one = MPoly::constant(v, Rat(1)), two = MPoly::constant(v, Rat(2));
    MPoly num1 = one + two * b - b * b;  // a = num1/den1: first boundary
    MPoly den1 = one + b * b;
    auto [q1, k1] = psi.substitute(0, num1, den1);
    auto [q2, k2] = psi.substitute(0, den1, num1);  // second boundary swaps them
    MPoly pref = MPoly::constant(v, Rat(4)) * b * (one - b * b) * (one + b * b).pow(2);
    MPoly mu1 = lift_to(fx.mu1(), v);
    MPoly mu2 = lift_to(fx.mu2(), v);
    bool ok1 = k1 == 4 && q1 == pref * mu1;
    bool ok2 = k2 == 4 && q2 == pref * mu2;
    std::ostringstream os;
    os << "(1+b^2)^4 psi|_bd1 = 4b(1-b^2)(1+b^2)^2 mu1 " << (ok1 ? "ok" : "FAIL")
       << "; (1+2b-b^2)^4 psi|_bd2 = 4b(1-b^2)(1+b^2)^2 mu2 " << (ok2 ? "ok" : "FAIL");
    return {ok1 && ok2, os.str()};
  });
}

CertificateResult mu_comparison_chain(const FixtureSet& fx) {
  return timed("mu-comparison-chain", [&]() -> std::pair<bool, std::string> {
    const VarList v = fx.mu1().vars();  // b, c, d
    const MPoly& mu1 = fx.mu1();
    const MPoly& mu2 = fx.mu2();
    MPoly b = MPoly::var(v, 0), c = MPoly::var(v, 1), d = MPoly::var(v, 2);
    MPoly one = MPoly::constant(v, Rat(1)), two = MPoly::constant(v, Rat(2));
    MPoly f1 = (one - b * b) * (one + two * b - b * b);
    MPoly f2 = one + two * b + MPoly::constant(v, Rat(6)) * b * b - two * b.pow(3) + b.pow(4);
    MPoly g1 = c.pow(3) * d - c * d.pow(3);
    MPoly g2 = c * c + d * d - two * c * c * d * d;
    bool sum_ok = mu1 + mu2 == two * f1 * g1;
    bool diff_ok = mu1 - mu2 == two * f2 * g2;
    bool f_ok = f2 - f1 == MPoly::constant(v, Rat(8)) * b * b;
    // F2 + F1 = 2(b^4 - 2b^3 + 2b^2 + 2b + 1) has no roots in (0, 1], so
    // F2 > |F1| there.
    MPoly fsum = f2 + f1;
    UPoly fsum_b = UPoly::from_mpoly(fsum.evaluate_partial({{1, Rat(0)}, {2, Rat(0)}}), 0);
    bool fsum_ok = fsum_b.eval(Rat(1, 2)).sign() > 0 && sturm_count(fsum_b, Rat(0), Rat(1)) == 0 &&
                   !fsum_b.eval(Rat(1)).is_zero();
    // G2 -+ G1 are the two reflections of the special polynomial f(c,d).
    MPoly fspecial = c * c + d * d - two * c * c * d * d + c.pow(3) * d - c * d.pow(3);
    bool g_ok = (g2 + g1 == fspecial) &&
                (g2 - g1 == c * c + d * d - two * c * c * d * d - c.pow(3) * d + c * d.pow(3));
    bool pass = sum_ok && diff_ok && f_ok && fsum_ok && g_ok;
    std::ostringstream os;
    os << "mu1+mu2 = 2 F1 G1 " << (sum_ok ? "ok" : "FAIL") << "; mu1-mu2 = 2 F2 G2 "
       << (diff_ok ? "ok" : "FAIL") << "; F2-F1 = 8b^2 (sign-corrected) " << (f_ok ? "ok" : "FAIL")
       << "; F2+F1 root-free on (0,1] " << (fsum_ok ? "ok" : "FAIL") << "; G2 -+ G1 = f "
       << (g_ok ? "ok" : "FAIL") << " => mu1 > 0 > mu2 off the symmetric point";
    return {pass, os.str()};
  });
}

CertificateResult specialp_grid(const FixtureSet&) {
  return timed("specialp-grid", []() -> std::pair<bool, std::string> {
    // f(c,d) = c^2 + d^2 - 2 c^2 d^2 + c^3 d - c d^3 >= 0 on a 201 x 201
    // rational grid of (-1,1)^2, zero only at the origin.
    long bad = 0;
    for (long i = -100; i <= 100; ++i) {
      for (long j = -100; j <= 100; ++j) {
        Rat c(i, 101), d(j, 101);
        Rat f = c * c + d * d - Rat(2) * c * c * d * d + c.pow(3) * d - c * d.pow(3);
        if (i == 0 && j == 0) {
          if (!f.is_zero()) ++bad;
        } else if (f.sign() <= 0) {
          ++bad;
        }
      }
    }
    std::ostringstream os;
    os << "f(c,d) positive on the 201x201 grid except exactly at the origin; violations: " << bad;
    return {bad == 0, os.str()};
  });
}

CertificateResult psi_resultant(const FixtureSet& fx, bool fast) {
  std::string name = fast ? "psi-resultant-sampled(FAST; not a certificate)" : "psi-resultant";
  return timed(name, [&, fast]() -> std::pair<bool, std::string> {
    const MPoly& psi = fx.psi();
    const VarList& v = psi.vars();
    MPoly psi_a = psi.derivative(0);
    MPoly b = MPoly::var(v, 1), d = MPoly::var(v, 3);
    MPoly one = MPoly::constant(v, Rat(1));
    MPoly cofactor = MPoly::constant(v, Rat(4)) * (b.pow(4) - one).pow(3) * (d * d - one).pow(2) *
                     d.pow(9);
    MPoly rhs = cofactor * lift_to(fx.r_ab(), v).pow(3);
    if (!fast) {
      MPoly res = resultant(psi, psi_a, 2);
      bool ok = res == rhs;
      return {ok, std::string("res(psi, dpsi/da, c) = 4 (b^4-1)^3 (d^2-1)^2 d^9 r(a,b)^3 exactly ") +
                      (ok ? "ok" : "FAIL")};
    }
    RatSampler rng(kCertSeed ^ 0x4);
    int done = 0;
    while (done < 100) {
      Rat av = rng.rational(), bv = rng.rational(), dv = rng.rational();
      MPoly p1 = psi.evaluate_partial({{0, av}, {1, bv}, {3, dv}});
      MPoly p2 = psi_a.evaluate_partial({{0, av}, {1, bv}, {3, dv}});
      if (p1.degree(2) != psi.degree(2) || p2.degree(2) != psi_a.degree(2)) continue;
      MPoly res = resultant(p1, p2, 2);
      MPoly want = rhs.evaluate_partial({{0, av}, {1, bv}, {3, dv}});
      if (res != want) return {false, "sampled resultant identity failed"};
      ++done;
    }
    return {true, "sampled resultant identity at 100 random points (fast mode)"};
  });
}

CertificateResult r_pinned_forms(const FixtureSet& fx) {
  return timed("r-pinned-forms", [&]() -> std::pair<bool, std::string> {
    // The pinned evaluation forms hold for -r, with r stored in the sign
    // convention of the resultant identity res(psi, dpsi/da, c).
    const MPoly& r = fx.r_ab();
    auto upoly_in = [&](const MPoly& p, int var) { return UPoly::from_mpoly(p, var); };
    MPoly neg_r = -r;

    UPoly q_half = upoly_in(neg_r.evaluate_partial({{0, Rat(1, 2)}}), 1);
    UPoly q_half_pinned({Rat(3, 64), Rat(192, 64), Rat(-170, 64), Rat(352, 64), Rat(-333, 64)});
    bool half_ok = q_half == q_half_pinned && sturm_count(q_half, Rat(0), Rat(1)) == 0 &&
                   !q_half.eval(Rat(1)).is_zero();

    UPoly q_32 = upoly_in(neg_r.evaluate_partial({{0, Rat(3, 2)}}), 1);
    UPoly q_32_pinned({Rat(59, 64), Rat(2784, 64), Rat(-2522, 64), Rat(6528, 64), Rat(-6325, 64)});
    bool q32_ok = q_32 == q_32_pinned && sturm_count(q_32, Rat(0), Rat(1)) == 0 &&
                  !q_32.eval(Rat(1)).is_zero();

    UPoly p_b0 = upoly_in(neg_r.evaluate_partial({{1, Rat(0)}}), 0);
    UPoly quart0({Rat(1), Rat(-2), Rat(0), Rat(-2), Rat(1)});  // 1 - 2a - 2a^3 + a^4
    UPoly dbl({Rat(1), Rat(-2), Rat(1)});                      // (a-1)^2
    bool b0_ok = p_b0 == (-(dbl * quart0));
    auto [cof0, mult0] = p_b0.deflate_at(Rat(1));
    bool b0_roots = mult0 == 2 && sturm_count(cof0, Rat(1, 2), Rat(3, 2)) == 0 &&
                    !cof0.eval(Rat(1, 2)).is_zero() && !cof0.eval(Rat(3, 2)).is_zero();

    UPoly p_b1 = upoly_in(neg_r.evaluate_partial({{1, Rat(1)}}), 0);
    UPoly quart1({Rat(1), Rat(-2), Rat(-2), Rat(-2), Rat(1)});
    bool b1_ok = p_b1 == (dbl * quart1) * Rat(-4);
    auto [cof1, mult1] = p_b1.deflate_at(Rat(1));
    bool b1_roots = mult1 == 2 && sturm_count(cof1, Rat(1, 2), Rat(3, 2)) == 0 &&
                    !cof1.eval(Rat(1, 2)).is_zero() && !cof1.eval(Rat(3, 2)).is_zero();

    bool pass = half_ok && q32_ok && b0_ok && b0_roots && b1_ok && b1_roots;
    std::ostringstream os;
    os << "64 r(1/2,b), 64 r(3/2,b) equal the pinned quartics and are root-free on (0,1) "
       << (half_ok && q32_ok ? "ok" : "FAIL")
       << "; r(a,0), r(a,1) equal the pinned factored forms with a double root at a=1 and no "
          "other roots in [1/2,3/2] "
       << (b0_ok && b0_roots && b1_ok && b1_roots ? "ok" : "FAIL")
       << " (the pinned forms are the negative of the stored r; sign recorded)";
    return {pass, os.str()};
  });
}

CertificateResult gradient_resultant(const FixtureSet& fx, bool fast) {
  std::string name = fast ? "gradient-resultant-sampled(FAST; not a certificate)" : "gradient-resultant";
  return timed(name, [&, fast]() -> std::pair<bool, std::string> {
    const MPoly& r = fx.r_ab();
    const VarList& v = r.vars();  // a, b
    MPoly ra = r.derivative(0), rb = r.derivative(1);
    MPoly a = MPoly::var(v, 0);
    MPoly one = MPoly::constant(v, Rat(1));
    MPoly rhs = -(MPoly::constant(v, Rat(1L << 18)) * a * a * (one + a) * lift_to(fx.g_a(), v));
    if (!fast) {
      MPoly res = resultant(ra, rb, 1);
      bool ok = res == rhs;
      return {ok, std::string("res(dr/da, dr/db, b) = -2^18 a^2 (1+a) g exactly ") +
                      (ok ? "ok (sign convention recorded)" : "FAIL")};
    }
    RatSampler rng(kCertSeed ^ 0x5);
    int done = 0;
    while (done < 100) {
      Rat av = rng.rational();
      MPoly p1 = ra.evaluate_partial({{0, av}});
      MPoly p2 = rb.evaluate_partial({{0, av}});
      if (p1.degree(1) != ra.degree(1) || p2.degree(1) != rb.degree(1)) continue;
      MPoly res = resultant(p1, p2, 1);
      if (res != rhs.evaluate_partial({{0, av}})) return {false, "sampled gradient resultant failed"};
      ++done;
    }
    return {true, "sampled gradient-resultant identity at 100 random points (fast mode)"};
  });
}

CertificateResult sturm_g(const FixtureSet& fx) {
  return timed("sturm-g", [&]() -> std::pair<bool, std::string> {
    UPoly g = UPoly::from_mpoly(fx.g_a(), 0);
    auto res = sturm_count_detail(g, Rat(0), Rat(2));
    bool ok = res.count == 0 && res.lo_multiplicity == 0 && res.hi_multiplicity == 0 &&
              !g.eval(Rat(0)).is_zero() && !g.eval(Rat(2)).is_zero();
    std::ostringstream os;
    os << "g has no real roots in [0,2] (Sturm count " << res.count << ")";
    return {ok, os.str()};
  });
}

CertificateResult duality_uniqueness(const FixtureSet& fx, int samples) {
  return timed("duality-uniqueness", [&, samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x6);
    int done = 0;
    while (done < samples) {
      Rat b = rng.unit_open_positive();
      Rat c = rng.unit_interval_open(), d = rng.unit_interval_open();
      if (c.is_zero() && d.is_zero()) continue;
      auto bounds = good_region_bounds(b);
      UPoly q = psi_in_a(fx, b, c, d);
      if (q.is_zero()) return {false, "psi vanished identically off the symmetric point"};
      // sign separation with the orientation fixed by mu1 > 0 > mu2:
      // psi < 0 at the lower endpoint and psi > 0 at the upper one
      if (q.eval(bounds->first).sign() >= 0 || q.eval(bounds->second).sign() <= 0) {
        std::ostringstream os;
        os << "sign separation failed at b=" << b.str() << " c=" << c.str() << " d=" << d.str();
        return {false, os.str()};
      }
      int roots = sturm_count(q, bounds->first, bounds->second);
      if (roots != 1) {
        std::ostringstream os;
        os << "expected 1 root, got " << roots << " at b=" << b.str() << " c=" << c.str()
           << " d=" << d.str();
        return {false, os.str()};
      }
      ++done;
    }
    std::ostringstream os;
    os << "psi separates signs across the foliating segment (negative end low, positive end "
          "high) and has exactly one root there, at "
       << done << " samples";
    return {true, os.str()};
  });
}

CertificateResult box_relations(int samples) {
  return timed("box-relations", [samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x7);
    int done = 0;
    while (done < samples) {
      Rat c = rng.unit_open_positive(), d = rng.unit_open_positive();
      auto box = MarkedBox<Rat>::unit_square(c, d);
      Mat3<Rat> g;
      for (int i = 0; i < 9; ++i) g.a[static_cast<size_t>(i)] = Rat(rng.integer(-4, 4));
      if (g.det().is_zero()) continue;
      MarkedBox<Rat> m;
      for (size_t i = 0; i < 6; ++i) m.v[i] = g * box.v[i];
      try {
        bool ok = same_marked_box(box_i(box_i(m)), m) &&
                  same_marked_box(box_t(box_i(box_t(m))), box_b(m)) &&
                  same_marked_box(box_b(box_i(box_b(m))), box_t(m)) &&
                  same_marked_box(box_t(box_i(box_b(box_i(m)))), m) &&
                  same_marked_box(box_b(box_i(box_t(box_i(m)))), m);
        if (!ok) return {false, "box relation failed on a random box"};
      } catch (const box_degeneracy_error&) {
        continue;
      }
      ++done;
    }
    std::ostringstream os;
    os << "i^2 = I, tit = b, bib = t, tibi = I, biti = I on " << done << " random boxes";
    return {true, os.str()};
  });
}

CertificateResult triple_product_invariance(int samples) {
  return timed("triple-product-invariance", [samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x8);
    int done = 0;
    while (done < samples) {
      Rat t = rng.positive();
      PrismParamsT<QuadExt> p{QuadExt(1), QuadExt(1), QuadExt(t)};
      auto sc = build_scene(p);
      auto flags = sc.flags();
      QuadExt chi = triple_product(flags);
      // rescale representatives
      FlagTriple<QuadExt> scaled = flags;
      for (Flag<QuadExt>* f : {&scaled.f1, &scaled.f2, &scaled.f3}) {
        Rat sp = rng.rational();
        Rat sl = rng.rational();
        if (sp.is_zero()) sp = Rat(3);
        if (sl.is_zero()) sl = Rat(-2);
        f->point = QuadExt(sp) * f->point;
        f->line = QuadExt(sl) * f->line;
      }
      bool scale_ok = triple_product(scaled) == chi;
      FlagTriple<QuadExt> cyc{flags.f2, flags.f3, flags.f1};
      bool cyc_ok = triple_product(cyc) == chi;
      FlagTriple<QuadExt> swap{flags.f2, flags.f1, flags.f3};
      bool swap_ok = triple_product(swap) == chi.inverse();
      if (!scale_ok || !cyc_ok || !swap_ok) return {false, "triple-product invariance failed"};
      ++done;
    }
    std::ostringstream os;
    os << "scale invariance, cyclic invariance, transposition reciprocity on " << done
       << " random negative triples";
    return {true, os.str()};
  });
}

CertificateResult orthogonal_pair_signs(int samples) {
  return timed("orthogonal-pair-signs", [samples]() -> std::pair<bool, std::string> {
    RatSampler rng(kCertSeed ^ 0x9);
    int done = 0;
    while (done < samples) {
      Rat r = rng.rational(), x = rng.rational(), y = rng.rational();
      try {
        auto [t1, t2] = orthogonal_pair_invariants(r, x, y);
        if ((t1 * t2).sign() < 0) return {false, "t1 and t2 differ in sign"};
        // ratio identity: t1/t2 = (r-x)^2 (x^2+y^2) / (rx - x^2 - y^2)^2
        Rat rr = x * x + y * y;
        Rat lhs = t1 * (r * x - rr).pow(2);
        Rat rhs = t2 * (r - x).pow(2) * rr;
        if (lhs != rhs) return {false, "ratio identity failed"};
      } catch (const std::domain_error&) {
        continue;
      }
      ++done;
    }
    std::ostringstream os;
    os << "t1, t2 share a sign and satisfy the square-ratio identity at " << done << " samples";
    return {true, os.str()};
  });
}

}  // namespace certs

CertificateReport certificate_suite(const FixtureSet& fx, Suite suite, bool fast, int threads) {
  using Task = std::function<CertificateResult()>;
  std::vector<Task> tasks;
  auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
  if (want(Suite::Core)) {
    tasks.push_back([] { return certs::eigenvalue_law_symbolic(); });
    tasks.push_back([] { return certs::det_s_symbolic(); });
    tasks.push_back([] { return certs::first_invariant_symbolic(); });
    tasks.push_back([&fx] { return certs::partner_values_111(fx); });
    tasks.push_back([] { return certs::partner_swap_symbolic(); });
    tasks.push_back([] { return certs::elliptic_derivative_symbolic(); });
    tasks.push_back([] { return certs::translation_structures_symbolic(); });
    tasks.push_back([] { return certs::box_relations(); });
    tasks.push_back([] { return certs::triple_product_invariance(); });
    tasks.push_back([] { return certs::orthogonal_pair_signs(); });
  }
  if (want(Suite::Monster)) {
    tasks.push_back([&fx] { return certs::monster_equivalence(fx); });
    tasks.push_back([&fx] { return certs::monster_positivity(fx); });
  }
  if (want(Suite::Blv)) {
    tasks.push_back([&fx, fast] { return certs::generators_closed_form(fx, fast); });
    tasks.push_back([&fx] { return certs::generators_order3(fx); });
    tasks.push_back([&fx] { return certs::generators_parabolic_pappus(fx); });
    tasks.push_back([&fx] { return certs::psi_trace_identity(fx); });
    tasks.push_back([&fx] { return certs::psi_d0_factorization(fx); });
    tasks.push_back([&fx] { return certs::boundary_restrictions(fx); });
    tasks.push_back([&fx] { return certs::mu_comparison_chain(fx); });
    tasks.push_back([&fx] { return certs::specialp_grid(fx); });
    tasks.push_back([&fx, fast] { return certs::psi_resultant(fx, fast); });
    tasks.push_back([&fx] { return certs::r_pinned_forms(fx); });
    tasks.push_back([&fx, fast] { return certs::gradient_resultant(fx, fast); });
    tasks.push_back([&fx] { return certs::sturm_g(fx); });
    tasks.push_back([&fx] { return certs::duality_uniqueness(fx); });
  }

  CertificateReport report;
  report.results.resize(tasks.size());
  if (threads <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) report.results[i] = tasks[i]();
    return report;
  }
  std::vector<std::future<CertificateResult>> futures;
  futures.reserve(tasks.size());
  for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
  for (size_t i = 0; i < futures.size(); ++i) report.results[i] = futures[i].get();
  return report;
}

}  // namespace prismatic
