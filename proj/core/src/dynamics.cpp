#include "prismatic/dynamics.hpp"

#include <sstream>

namespace prismatic {

namespace {

BigFloat lambda_value(const DynPoint& p) {
  BigFloat one(1, p.r.prec());
  return -(p.r * p.r) / (p.s * p.s) * (p.t / (one + p.t));
}

BigFloat canonical_invariant(const BigFloat& chi) {
  // representative of {chi, 1/chi} in [-1, 0)
  BigFloat neg1(-1, chi.prec());
  return chi < neg1 ? chi.inverse() : chi;
}

/// Dense coefficients of P(k s, s, t0) as a univariate polynomial in s.
std::vector<BigFloat> collapse_to_s(const MPoly& p, const BigFloat& k, const BigFloat& t0,
                                    long prec) {
  int max_deg = 0;
  for (const auto& [m, c] : p.terms()) max_deg = std::max(max_deg, int(m[0]) + int(m[1]));
  std::vector<BigFloat> out(static_cast<size_t>(max_deg) + 1, BigFloat(0, prec));
  // power caches
  int kmax = p.degree(0), tmax = p.degree(2);
  std::vector<BigFloat> kp(static_cast<size_t>(kmax) + 1, BigFloat(1, prec));
  for (int i = 1; i <= kmax; ++i) kp[static_cast<size_t>(i)] = kp[static_cast<size_t>(i - 1)] * k;
  std::vector<BigFloat> tp(static_cast<size_t>(tmax) + 1, BigFloat(1, prec));
  for (int i = 1; i <= tmax; ++i) tp[static_cast<size_t>(i)] = tp[static_cast<size_t>(i - 1)] * t0;
  for (const auto& [m, c] : p.terms()) {
    BigFloat v = BigFloat(c, prec) * kp[m[0]] * tp[m[2]];
    out[static_cast<size_t>(m[0]) + m[1]] += v;
  }
  return out;
}

BigFloat eval_dense(const std::vector<BigFloat>& c, const BigFloat& x) {
  BigFloat acc(0, x.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<BigFloat> derivative_dense(const std::vector<BigFloat>& c) {
  std::vector<BigFloat> d;
  for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * BigFloat(static_cast<long>(i), c[i].prec()));
  return d;
}

}  // namespace

BigFloat pappus_residual(const DynPoint& p) {
  BigFloat one(1, p.r.prec());
  return (lambda_value(p) + one).abs();
}

DynPoint shear(const DynPoint& p, const BigFloat& d) {
  return {p.r * d, p.s / d, p.t};
}

BigFloat first_invariant_value(const DynPoint& p) {
  BigFloat one(1, p.t.prec());
  BigFloat w = p.t / (one + p.t);
  return -(w * w * w);
}

BigFloat tau_prime_value(const DynPoint& p, const FixtureSet& fx) {
  long prec = p.r.prec();
  auto conv = [prec](const Rat& q) { return BigFloat(q, prec); };
  std::vector<BigFloat> pt{p.r, p.s, p.t};
  BigFloat a = fx.monster_a().evaluate<BigFloat>(pt, conv);
  BigFloat b = fx.monster_b().evaluate<BigFloat>(pt, conv);
  BigFloat one(1, prec);
  BigFloat w = (one + p.t) / p.t;
  BigFloat q = w * (a / b);
  return -(q * q * q);
}

std::pair<DynPoint, DynStepTrace> second_description(const DynPoint& p, const DynConfig& cfg,
                                                     const FixtureSet& fx) {
  long prec = p.r.prec();
  DynStepTrace tr;
  tr.sheared = p;
  tr.lambda_sheared = lambda_value(p);
  tr.chi = first_invariant_value(p);
  tr.tau_raw = tau_prime_value(p, fx);
  tr.tau_canonical = canonical_invariant(tr.tau_raw);

  BigFloat one(1, prec);
  BigFloat chi_target =
      cfg.matching == InvariantMatching::RawPartner ? tr.tau_raw : tr.tau_canonical;
  tr.chi_source =
      cfg.matching == InvariantMatching::RawPartner ? tr.chi : canonical_invariant(tr.chi);
  if (!(chi_target.sign() < 0))
    throw std::domain_error("second_description: partner invariant is not negative");
  tr.omega = (-chi_target).cbrt();
  if (tr.omega == one) throw std::domain_error("second_description: neutral point (omega = 1)");
  tr.t_prime = tr.omega / (one - tr.omega);

  BigFloat inv_omega = (one + tr.t_prime) / tr.t_prime;
  auto ratio_from = [&](const BigFloat& lambda_star) {
    BigFloat ratio_sq = -lambda_star * inv_omega;
    if (!(ratio_sq.sign() > 0))
      throw std::domain_error("second_description: eigen-branch ratio is not positive");
    return ratio_sq.sqrt();
  };
  tr.ratio_preserve = ratio_from(tr.lambda_sheared);
  tr.ratio = cfg.branch == EigenBranch::PreserveLambda
                 ? tr.ratio_preserve
                 : ratio_from(tr.lambda_sheared.inverse());

  // tau'(k s, s, t') = chi_source reduces, through the real cube root, to
  //   (1+t') A(k s, s, t') - cbrt(-chi_source) t' B(k s, s, t') = 0,
  // a polynomial of degree <= 14 in s with the same real roots.
  BigFloat c0 = (-tr.chi_source).cbrt();
  auto acoef = collapse_to_s(fx.monster_a(), tr.ratio, tr.t_prime, prec);
  auto bcoef = collapse_to_s(fx.monster_b(), tr.ratio, tr.t_prime, prec);
  size_t n = std::max(acoef.size(), bcoef.size());
  std::vector<BigFloat> e(n, BigFloat(0, prec));
  BigFloat wa = one + tr.t_prime;
  BigFloat wb = c0 * tr.t_prime;
  for (size_t i = 0; i < acoef.size(); ++i) e[i] = wa * acoef[i];
  for (size_t i = 0; i < bcoef.size(); ++i) e[i] -= wb * bcoef[i];
  while (!e.empty() && e.back().is_zero()) e.pop_back();
  size_t low = 0;
  while (low < e.size() && e[low].is_zero()) ++low;
  e.erase(e.begin(), e.begin() + static_cast<long>(low));
  if (e.size() < 2) throw std::domain_error("second_description: degenerate s-equation");

  // Cauchy bound, then a dyadic mesh refined until exactly one sign change.
  BigFloat bound(1, prec);
  for (size_t i = 0; i + 1 < e.size(); ++i) {
    BigFloat ratio = (e[i] / e.back()).abs();
    if (ratio > bound) bound = ratio;
  }
  bound = bound + one;
  long cells = 1024;
  BigFloat lo_bracket(0, prec), hi_bracket(0, prec);
  int sign_changes = 0;
  for (int refine = 0; refine < 4; ++refine) {
    sign_changes = 0;
    BigFloat step = bound / BigFloat(cells, prec);
    BigFloat x = step;  // skip s = 0
    BigFloat prev_x(0, prec);
    int prev_sign = e.front().sign();  // sign of the shifted polynomial at 0+
    for (long i = 1; i <= cells; ++i) {
      int sgn = eval_dense(e, x).sign();
      if (sgn == 0) {
        // mesh landed exactly on a root; bracket the surrounding cell
        ++sign_changes;
        lo_bracket = prev_x;
        hi_bracket = x + step;
      } else {
        if (prev_sign != 0 && sgn != prev_sign) {
          ++sign_changes;
          lo_bracket = prev_x;
          hi_bracket = x;
        }
        prev_sign = sgn;
      }
      prev_x = x;
      x = x + step;
    }
    if (sign_changes == 1) break;
    cells *= 4;
  }
  tr.positive_roots = sign_changes;
  if (sign_changes != 1) {
    std::ostringstream os;
    os << "second_description: expected one positive real root of the s-equation, found "
       << sign_changes;
    throw std::domain_error(os.str());
  }

  // bisect then Newton
  BigFloat lo = lo_bracket, hi = hi_bracket;
  if (lo.is_zero()) lo = hi / BigFloat(1L << 20, prec);
  int slo = eval_dense(e, lo).sign();
  for (long it = 0; it < prec + 16; ++it) {
    BigFloat mid = (lo + hi) / BigFloat(2, prec);
    int sm = eval_dense(e, mid).sign();
    if (sm == 0) { lo = mid; hi = mid; break; }
    if (sm == slo) lo = mid; else hi = mid;
  }
  BigFloat root = (lo + hi) / BigFloat(2, prec);
  auto de = derivative_dense(e);
  for (int it = 0; it < 8; ++it) {
    BigFloat f = eval_dense(e, root);
    BigFloat df = eval_dense(de, root);
    if (df.is_zero()) break;
    root = root - f / df;
  }
  tr.s_root = root;
  tr.s_residual = eval_dense(e, root).abs();

  DynPoint out{tr.ratio * root, root, tr.t_prime};
  tr.redescribed = out;
  return {out, tr};
}

std::pair<DynPoint, DynStepTrace> phi_step(const DynPoint& p, const DynConfig& cfg,
                                           const FixtureSet& fx) {
  long prec = p.r.prec();
  BigFloat d(cfg.d, prec);
  if (cfg.d == Rat(1)) {
    // phi_1 is the identity on the Pappus locus (the re-description is
    // undefined at the neutral point itself)
    DynStepTrace tr;
    tr.input = tr.sheared = tr.redescribed = tr.output = p;
    tr.residual_in = tr.residual_out = pappus_residual(p);
    tr.lambda_sheared = lambda_value(p);
    tr.chi = first_invariant_value(p);
    return {p, tr};
  }
  DynPoint sheared = shear(p, d);
  auto [redesc, tr] = second_description(sheared, cfg, fx);
  tr.input = p;
  tr.residual_in = pappus_residual(p);
  DynPoint out = cfg.unshear == UnshearConvention::Inverse ? shear(redesc, d.inverse())
                                                           : shear(redesc, d);
  tr.output = out;
  tr.residual_out = pappus_residual(out);
  return {out, tr};
}

OrbitResult iterate_orbit(const DynPoint& start, const DynConfig& cfg, const FixtureSet& fx,
                          long steps, bool keep_traces) {
  OrbitResult res;
  long prec = cfg.prec;
  DynPoint cur = start.rounded(prec);
  res.rows.push_back({0, cur.r, cur.s, cur.t, pappus_residual(cur)});
  for (long step = 1; step <= steps; ++step) {
    for (;;) {
      try {
        auto [next, tr] = phi_step(cur, cfg, fx);
        BigFloat threshold = BigFloat::pow2(-(prec / 4), prec);
        if (tr.residual_out > threshold && prec < cfg.max_prec) {
          prec = std::min(2 * prec, cfg.max_prec);
          cur = cur.rounded(prec);
          continue;  // redo this step at higher precision
        }
        if (keep_traces) res.traces.push_back(tr);
        cur = next;
        res.rows.push_back({step, cur.r, cur.s, cur.t, tr.residual_out});
        break;
      } catch (const std::exception& e) {
        if (prec < cfg.max_prec) {
          prec = std::min(2 * prec, cfg.max_prec);
          cur = cur.rounded(prec);
          continue;
        }
        res.failure = e.what();
        res.final_prec = prec;
        return res;
      }
    }
  }
  res.completed = true;
  res.final_prec = prec;
  return res;
}

}  // namespace prismatic
