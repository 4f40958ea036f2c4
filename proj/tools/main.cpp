// prismatic: exact-arithmetic engine for prism representations of the
// modular group -- certificate verification, marked-box orbits, the duality
// curve, prism reports, and shearing dynamics.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "prismatic/dualitycurve.hpp"
#include "prismatic/dynamics.hpp"
#include "prismatic/emitters.hpp"
#include "prismatic/prism.hpp"

namespace {

using nlohmann::ordered_json;
using namespace prismatic;

constexpr const char* kVersion = "prismatic 0.1.0";

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

int cmd_verify(const std::string& fixture_dir, const std::string& suite_name, bool fast,
               int threads, const std::string& out_path) {
  FixtureSet fx(FixtureSet::locate(fixture_dir));
  Suite suite = parse_suite(suite_name);
  CertificateReport report = certificate_suite(fx, suite, fast, threads);
  ordered_json config{{"version", kVersion},
                      {"subcommand", "verify"},
                      {"suite", suite_name},
                      {"fast", fast},
                      {"fixtures", fx.dir().string()}};
  write_output(out_path, certificate_report_json(report, config).dump(2) + "\n");
  return report.all_pass() ? 0 : 1;
}

int cmd_orbit(const std::string& fixture_dir, const std::string& c, const std::string& d,
              const std::string& a, const std::string& b, int depth, const std::string& format,
              const std::string& out_path) {
  (void)fixture_dir;
  Rat cr = Rat::parse(c), dr = Rat::parse(d), ar = Rat::parse(a), br = Rat::parse(b);
  for (const Rat* v : {&cr, &dr})
    if (!(Rat(-1) < *v) || !(*v < Rat(1)))
      throw CLI::ValidationError("orbit", "c and d must lie in (-1,1)");
  if (ar.sign() <= 0 || br.sign() <= 0)
    throw CLI::ValidationError("orbit", "a and b must be positive");
  auto seed = MarkedBox<Rat>::standard(cr, dr);
  auto entries = enumerate_orbit(seed, ar, br, depth);
  std::ostringstream comment;
  comment << kVersion << " orbit --c " << c << " --d " << d << " --a " << a << " --b " << b
          << " --depth " << depth;
  if (format == "svg") {
    write_output(out_path, orbit_svg(entries, comment.str()));
  } else {
    ordered_json config{{"version", kVersion}, {"subcommand", "orbit"}, {"c", c}, {"d", d},
                        {"a", a},              {"b", b},                {"depth", depth}};
    write_output(out_path, orbit_to_json(entries, config).dump(2) + "\n");
  }
  return 0;
}

int cmd_curve(const std::string& fixture_dir, const std::string& c, const std::string& d,
              int samples, long prec, const std::string& out_path) {
  FixtureSet fx(FixtureSet::locate(fixture_dir));
  Rat cr = Rat::parse(c), dr = Rat::parse(d);
  if (samples < 2) throw CLI::ValidationError("curve", "samples must be >= 2");
  std::ostringstream os;
  os << "# " << kVersion << " curve --c " << c << " --d " << d << " --samples " << samples << "\n";
  os << "b,a\n";
  for (int i = 1; i <= samples; ++i) {
    Rat b(i, samples + 1);
    CurvePoint pt = duality_curve_point(fx, b, cr, dr, prec);
    os << b.str() << "," << pt.a.str(30) << "\n";
  }
  write_output(out_path, os.str());
  return 0;
}

int cmd_prism(const std::string& fixture_dir, const std::string& r, const std::string& s,
              const std::string& t, const std::string& out_path) {
  FixtureSet fx(FixtureSet::locate(fixture_dir));
  Rat rr = Rat::parse(r), sr = Rat::parse(s);
  std::optional<Rat> tr;
  if (!t.empty()) tr = Rat::parse(t);
  PrismParamsT<QuadExt> p{QuadExt(rr), QuadExt(sr),
                          tr ? std::optional<QuadExt>(QuadExt(*tr)) : std::nullopt};
  auto scene = build_scene(p);
  auto eigen = lambda_of(p);

  auto canonical = [](const Rat& chi) {
    return chi < Rat(-1) ? chi.inverse() : chi;
  };
  ordered_json j;
  j["config"] = ordered_json{{"version", kVersion},
                             {"subcommand", "prism"},
                             {"r", r},
                             {"s", s},
                             {"t", t.empty() ? ordered_json(nullptr) : ordered_json(t)}};
  // the scene is rational in lambda and chi for rational parameters
  Rat lambda = eigen.lambda.rational_part();
  j["lambda"] = lambda.str();
  j["classification"] = to_string(eigen.classification);
  j["trace_g2"] = eigen.trace.rational_part().str();
  j["det_S"] = scene.det_S.str();
  QuadExt chi_q = first_invariant(scene);
  Rat chi = chi_q.rational_part();
  j["first_invariant"] = {{"raw", chi.str()},
                          {"canonical", canonical(chi).str()},
                          {"prism_invariant", prism_invariant(chi, 256).str(40)}};
  if (eigen.classification == PrismClass::Neutral) {
    j["partner"] = nullptr;
    j["note"] = "partner description undefined on the Pappus locus";
  } else {
    PrismParams rat_params{rr, sr, tr};
    Rat tau = tau_prime_closed(rat_params, fx);
    auto part = partner(p);
    bool match = part.tau_prime == QuadExt(tau);
    j["partner"] = {{"raw", tau.str()},
                    {"canonical", canonical(tau).str()},
                    {"prism_invariant", prism_invariant(tau, 256).str(40)},
                    {"swap_verified", part.swap_verified},
                    {"closed_form_matches_eigenflags", match},
                    {"classification", to_string(classify_lambda(part.lambda_partner))}};
  }
  write_output(out_path, j.dump(2) + "\n");
  return 0;
}

int cmd_dynamics(const std::string& fixture_dir, const std::string& r, const std::string& s,
                 const std::string& t, const std::string& d, long steps, long prec,
                 const std::string& branch, const std::string& matching,
                 const std::string& unshear, const std::string& out_path,
                 const std::string& trace_path) {
  FixtureSet fx(FixtureSet::locate(fixture_dir));
  DynConfig cfg;
  cfg.d = Rat::parse(d);
  if (cfg.d.sign() <= 0) throw CLI::ValidationError("dynamics", "d must be positive");
  cfg.prec = prec;
  cfg.branch = branch == "preserve" ? EigenBranch::PreserveLambda : EigenBranch::SwapLambda;
  cfg.matching = matching == "canonical" ? InvariantMatching::CanonicalUnitInterval
                                         : InvariantMatching::RawPartner;
  cfg.unshear = unshear == "inverse" ? UnshearConvention::Inverse : UnshearConvention::Forward;
  DynPoint start = DynPoint::from_rat(Rat::parse(r), Rat::parse(s), Rat::parse(t), prec);
  OrbitResult orbit = iterate_orbit(start, cfg, fx, steps, !trace_path.empty());
  std::ostringstream comment;
  comment << kVersion << " dynamics --r " << r << " --s " << s << " --t " << t << " --d " << d
          << " --steps " << steps << " --prec " << prec << " --branch " << branch
          << " --matching " << matching << " --unshear " << unshear;
  int digits = static_cast<int>(static_cast<double>(prec) * 0.301) + 2;
  write_output(out_path, orbit_csv(orbit, comment.str(), digits));
  if (!trace_path.empty()) write_output(trace_path, trace_jsonl(orbit, digits));
  if (!orbit.completed) {
    std::cerr << "orbit truncated: " << orbit.failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for prism representations of the modular group"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string fixture_dir;
  app.add_option("--fixtures", fixture_dir, "fixture directory (default: autodetect)");

  auto* verify = app.add_subcommand("verify", "run the polynomial certificate suites");
  std::string suite = "all";
  bool fast = false;
  int threads = 2;
  std::string verify_out;
  verify->add_option("--suite", suite, "core|blv|monster|all")->default_str("all");
  verify->add_flag("--fast", fast, "sample the two exact resultant identities instead (not a certificate)");
  verify->add_option("--threads", threads, "parallel certificate workers");
  verify->add_option("--out", verify_out, "write the JSON report here instead of stdout");

  auto* orbit = app.add_subcommand("orbit", "enumerate a morphed marked-box orbit");
  std::string oc = "0", od = "0", oa = "1", ob = "1", oformat = "json", oout;
  int odepth = 4;
  orbit->add_option("--c", oc, "box parameter c in (-1,1)");
  orbit->add_option("--d", od, "box parameter d in (-1,1)");
  orbit->add_option("--a", oa, "morph parameter a > 0");
  orbit->add_option("--b", ob, "morph parameter b > 0");
  orbit->add_option("--depth", odepth, "maximum word length (default 4, cap 8)")
      ->check(CLI::Range(0, 8));
  orbit->add_option("--format", oformat, "json|svg");
  orbit->add_option("--out", oout, "output path (default stdout)");

  auto* curve = app.add_subcommand("curve", "sample the duality curve");
  std::string cc = "0", cd = "0", cout_path;
  int csamples = 20;
  long cprec = 128;
  curve->add_option("--c", cc, "box parameter c");
  curve->add_option("--d", cd, "box parameter d");
  curve->add_option("--samples", csamples, "number of b samples in (0,1)");
  curve->add_option("--prec", cprec, "root refinement precision in bits");
  curve->add_option("--out", cout_path, "output CSV path (default stdout)");

  auto* prism = app.add_subcommand("prism", "report the eigenvalue data of a prism configuration");
  std::string pr = "1", ps = "1", pt, pout;
  prism->add_option("--r", pr, "parameter r > 0 (rational p/q)");
  prism->add_option("--s", ps, "parameter s > 0");
  prism->add_option("--t", pt, "parameter t (omit for the non-generic family)");
  prism->add_option("--out", pout, "output path (default stdout)");

  auto* dyn = app.add_subcommand("dynamics", "iterate the shearing dynamics phi_d");
  std::string dr = "2", ds = "1", dt = "1/3", dd = "1/2", dbranch = "swap",
              dmatching = "raw", dunshear = "forward", dout, dtrace;
  long dsteps = 1, dprec = 256;
  dyn->add_option("--r", dr, "start r");
  dyn->add_option("--s", ds, "start s");
  dyn->add_option("--t", dt, "start t");
  dyn->add_option("--d", dd, "shear parameter d");
  dyn->add_option("--steps", dsteps, "number of phi_d steps");
  dyn->add_option("--prec", dprec, "working precision in bits");
  dyn->add_option("--branch", dbranch, "eigen-branch convention: preserve|swap");
  dyn->add_option("--matching", dmatching, "invariant matching: raw|canonical");
  dyn->add_option("--unshear", dunshear, "un-shear convention: inverse|forward");
  dyn->add_option("--out", dout, "orbit CSV path (default stdout)");
  dyn->add_option("--trace", dtrace, "JSONL trace path");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(fixture_dir, suite, fast, threads, verify_out);
    if (orbit->parsed()) return cmd_orbit(fixture_dir, oc, od, oa, ob, odepth, oformat, oout);
    if (curve->parsed()) return cmd_curve(fixture_dir, cc, cd, csamples, cprec, cout_path);
    if (prism->parsed()) return cmd_prism(fixture_dir, pr, ps, pt, pout);
    if (dyn->parsed())
      return cmd_dynamics(fixture_dir, dr, ds, dt, dd, dsteps, dprec, dbranch, dmatching,
                          dunshear, dout, dtrace);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors exit 2
  } catch (const prismatic::missing_fixture_error& e) {
    std::cerr << "fixture error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // bad argument values are usage errors too
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
