#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prismatic/bigfloat.hpp"
#include "prismatic/fixtures.hpp"
#include "prismatic/rat.hpp"

namespace prismatic {

/// A point of the shearing dynamics in (r, s, t) coordinates.  r, s > 0;
/// t stays outside [-1, 0] and in practice lives in (-inf, -1) after the
/// first step (the duality involution is deliberately not applied).
struct DynPoint {
  BigFloat r, s, t;

  static DynPoint from_rat(const Rat& r, const Rat& s, const Rat& t, long prec) {
    return {BigFloat(r, prec), BigFloat(s, prec), BigFloat(t, prec)};
  }
  DynPoint rounded(long prec) const { return {r.round_to(prec), s.round_to(prec), t.round_to(prec)}; }
};

enum class EigenBranch {
  // The re-description's (b1, L2) flag takes the reciprocal eigenvalue
  // 1/lambda.  This is the attracting/repelling flip of the partner
  // description; it solves to the documented closed-form s-root and, with
  // the forward un-shear, returns exactly to the parabolic locus.
  SwapLambda,
  // Keep the sheared point's own lambda instead.  This branch's ratio is
  // the trace-matching ratio (1/8) sqrt(394351201/768509149) at the
  // documented example; it is recorded in every trace either way.
  PreserveLambda,
};

enum class InvariantMatching {
  RawPartner,             // chi_target = tau' as computed (default; reproduces t' < -1)
  CanonicalUnitInterval,  // representative in [-1, 0): the duality-involuted description
};

enum class UnshearConvention {
  // (r*d, s/d, t'): the prose convention "(r/2, 2s, .)" at d = 1/2.  With
  // the SwapLambda branch this lands exactly back on the Pappus locus.
  Forward,
  // (r/d, s*d, t'): undoes the shear; the locus-preserving partner of the
  // PreserveLambda branch.
  Inverse,
};

struct DynConfig {
  Rat d = Rat(1, 2);
  long prec = BigFloat::kDefaultPrec;
  long max_prec = 4096;
  EigenBranch branch = EigenBranch::SwapLambda;
  InvariantMatching matching = InvariantMatching::RawPartner;
  UnshearConvention unshear = UnshearConvention::Forward;
};

/// Audited intermediates of one phi_d step.
struct DynStepTrace {
  DynPoint input, sheared, redescribed, output;
  BigFloat lambda_sheared;     // eigenvalue at the flag (b1, L2)
  BigFloat chi;                // first invariant of the sheared point (raw)
  BigFloat chi_source;         // matching-convention value fed to the s-solve
  BigFloat tau_raw;            // partner invariant, raw
  BigFloat tau_canonical;      // representative in [-1, 0)
  BigFloat omega;              // cbrt(-chi_target)
  BigFloat t_prime;
  BigFloat ratio;              // k = r/s of the re-description (configured branch)
  BigFloat ratio_preserve;     // the lambda-preserving branch's ratio
  BigFloat s_root;
  BigFloat s_residual;         // |E(s_root)| of the solved polynomial
  int positive_roots = 0;      // certified count on the dyadic mesh
  BigFloat residual_in;        // |lambda(input) + 1|
  BigFloat residual_out;       // |lambda(output) + 1|
};

/// |lambda(p) + 1|: zero exactly on the Pappus locus r = mu(t) s.
BigFloat pappus_residual(const DynPoint& p);

/// (r d, s/d, t): translation of strength sqrt(2) |log d| along the medial
/// geodesic.
DynPoint shear(const DynPoint& p, const BigFloat& d);

/// First triple invariant -t^3/(1+t)^3.
BigFloat first_invariant_value(const DynPoint& p);

/// Partner invariant -(1+t)^3 A^3 / (t^3 B^3) via the certificate
/// polynomials.
BigFloat tau_prime_value(const DynPoint& p, const FixtureSet& fx);

/// Re-derives the second prism description (r', s', t') of the same
/// representation: t' from the partner invariant, the ratio r'/s' from the
/// eigen-branch convention, and s' as the unique positive root of
/// tau'(k s, s, t') = chi_source.
std::pair<DynPoint, DynStepTrace> second_description(const DynPoint& p, const DynConfig& cfg,
                                                     const FixtureSet& fx);

/// One step of phi_d: shear, re-describe, un-shear.
std::pair<DynPoint, DynStepTrace> phi_step(const DynPoint& p, const DynConfig& cfg,
                                           const FixtureSet& fx);

struct OrbitRow {
  long step;
  BigFloat r, s, t;
  BigFloat residual;
};

struct OrbitResult {
  std::vector<OrbitRow> rows;       // row 0 is the start point
  std::vector<DynStepTrace> traces;  // filled when keep_traces
  bool completed = false;
  std::string failure;
  long final_prec = 0;
};

/// Applies phi_step n times, doubling the working precision (up to
/// cfg.max_prec) whenever the output residual exceeds 2^(-prec/4).
OrbitResult iterate_orbit(const DynPoint& start, const DynConfig& cfg, const FixtureSet& fx,
                          long steps, bool keep_traces = false);

}  // namespace prismatic
