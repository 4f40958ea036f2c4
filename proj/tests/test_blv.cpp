#include <doctest.h>

#include "prismatic/certificates.hpp"
#include "prismatic/dualitycurve.hpp"
#include "prismatic/morph.hpp"
#include "prismatic/sampling.hpp"

using namespace prismatic;

namespace {
const FixtureSet& fixtures() {
  static FixtureSet fx{FixtureSet::locate(PRISMATIC_SOURCE_FIXTURES)};
  return fx;
}

bool inside_quad(const MarkedBox<Rat>& outer, const HVec<Rat>& pt) {
  // strict interior of the convex quad with corners in slots 0,2,3,5
  auto arr = cyclic_arrangement(outer);
  REQUIRE(arr.has_value());
  if (pt.z.is_zero()) return false;
  auto p = affine_point(pt);
  std::array<std::pair<Rat, Rat>, 4> corner{affine_point(arr->v[0]), affine_point(arr->v[2]),
                                            affine_point(arr->v[3]), affine_point(arr->v[5])};
  int want = 0;
  for (int i = 0; i < 4; ++i) {
    auto& a = corner[static_cast<size_t>(i)];
    auto& b = corner[static_cast<size_t>((i + 1) % 4)];
    Rat crossv = (b.first - a.first) * (p.second - a.second) -
                 (b.second - a.second) * (p.first - a.first);
    if (crossv.is_zero()) return false;
    if (want == 0) want = crossv.sign();
    if (crossv.sign() != want) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("morph matrix") {
  Rat one(1);
  Mat3<Rat> sigma11 = morph_matrix(one, one);
  CHECK(sigma11 == Mat3<Rat>::identity(one));
  Rat a(4, 5), b(2, 3);
  Mat3<Rat> sigma = morph_matrix(a, b);
  CHECK(sigma == sigma.transposed());
  CHECK(sigma(1, 1) == (Rat(1) + b * b) / (Rat(2) * a * b));
  CHECK(sigma(1, 2) == (b * b - Rat(1)) / (Rat(2) * b));
  CHECK(sigma(2, 2) == a * (Rat(1) + b * b) / (Rat(2) * b));
}

TEST_CASE("morph_box: identity at (1,1) and direct evaluation on the standard box") {
  auto y0 = MarkedBox<Rat>::standard(Rat(1, 3), Rat(-1, 4));
  auto same = morph_box(y0, Rat(1), Rat(1));
  for (size_t i = 0; i < 6; ++i) CHECK(projective_equal(same.v[i], y0.v[i]));
  // on the frame box Y0(0,0) the conjugation is trivial: Sigma applies directly
  auto frame_box = MarkedBox<Rat>::standard(Rat(0), Rat(0));
  Rat a(4, 5), b(4, 5);
  auto morphed = morph_box(frame_box, a, b);
  Mat3<Rat> sigma = morph_matrix(a, b);
  for (size_t i = 0; i < 6; ++i) CHECK(projective_equal(morphed.v[i], sigma * frame_box.v[i]));
}

TEST_CASE("good region bounds") {
  auto at_one = good_region_bounds(Rat(1));
  REQUIRE(at_one.has_value());
  CHECK(at_one->first == Rat(1));
  CHECK(at_one->second == Rat(1));
  auto at_half = good_region_bounds(Rat(1, 2));
  CHECK(at_half->first == Rat(5, 7));
  CHECK(at_half->second == Rat(7, 5));
  CHECK(!good_region_bounds(Rat(2)).has_value());
  CHECK(good_region(Rat(1), Rat(1, 2)));
  CHECK(good_region(Rat(5, 7), Rat(1, 2)));
  CHECK(!good_region(Rat(2, 3), Rat(1, 2)));
  CHECK(!good_region(Rat(1), Rat(2)));
}

TEST_CASE("good region = reciprocal chart of the strictly-nesting morphs") {
  // Sigma_{a,b}^{-1} = Sigma_{1/a,1/b} exactly, and for (a,b) in the good
  // region's interior the quad of Sigma_{1/a,1/b}(M) lies strictly inside
  // the quad of M (equivalently: the quad of Sigma_{a,b}(M) strictly
  // contains it).  The whole reciprocal-morphed orbit then nests.
  auto seed = MarkedBox<Rat>::unit_square(Rat(1, 3), Rat(2, 5));
  Rat b(1, 2);
  auto bounds = good_region_bounds(b);
  REQUIRE(bounds.has_value());
  // the inverse identity itself
  Mat3<Rat> prod = morph_matrix(Rat(9, 10), b) * morph_matrix(Rat(10, 9), Rat(2));
  CHECK(prod == Mat3<Rat>::identity(Rat(1)));

  auto contains_all = [&](const MarkedBox<Rat>& outer, const MarkedBox<Rat>& innerbox) {
    for (const auto& v : innerbox.v)
      if (!inside_quad(outer, v)) return false;
    return true;
  };
  auto outside_all = [&](const MarkedBox<Rat>& outer, const MarkedBox<Rat>& other) {
    for (const auto& v : other.v)
      if (inside_quad(outer, v)) return false;
    return true;
  };
  auto rec_morph = [&](const MarkedBox<Rat>& box, const Rat& av) {
    return morph_box(box, av.inverse(), b.inverse());
  };
  for (Rat av : {Rat(1), Rat(9, 10), Rat(11, 10), bounds->first + Rat(1, 100)}) {
    REQUIRE(good_region(av, b));
    // reciprocal-parameter morph contracts: sigma(M) strictly inside M, and
    // the {t, b}-children nest while the i-image is disjoint (the orbit
    // picture: every two boxes disjoint or strictly nested)
    CHECK(contains_all(seed, rec_morph(seed, av)));
    auto t1 = rec_morph(box_t(seed), av);
    auto b1 = rec_morph(box_b(seed), av);
    CHECK(contains_all(seed, t1));
    CHECK(contains_all(seed, b1));
    CHECK(contains_all(t1, rec_morph(box_t(t1), av)));  // grandchildren nest deeper
    CHECK(outside_all(seed, rec_morph(box_i(seed), av)));
    // the i-side frame reverses orientation: the direct-parameter morph of
    // i(M) is the one nesting strictly inside M
    CHECK(contains_all(seed, morph_box(box_i(seed), av, b)));
    // while the direct morph of M itself strictly contains M
    CHECK(contains_all(morph_box(seed, av, b), seed));
  }
}

TEST_CASE("generators match the closed forms pointwise") {
  const FixtureSet& fx = fixtures();
  RatSampler rng(47);
  for (int i = 0; i < 10; ++i) {
    Rat a = rng.positive(), b = rng.positive();
    Rat c = rng.unit_interval_open(), d = rng.unit_interval_open();
    auto gen = generators(a, b, c, d);
    CHECK(gen.r1 == r1_closed_form(fx, c, d));
    CHECK(gen.r2 == r2_closed_form(fx, a, b, c, d));
    CHECK((gen.r1 * gen.r2).det() == Rat(1));
    // order 3 projectively
    CHECK(projective_equal(gen.r1 * gen.r1 * gen.r1, Mat3<Rat>::identity(Rat(1))));
    CHECK(projective_equal(gen.r2 * gen.r2 * gen.r2, Mat3<Rat>::identity(Rat(1))));
  }
  CHECK_THROWS_AS(generators(Rat(1), Rat(1), Rat(2), Rat(0)), std::domain_error);
}

TEST_CASE("generators realize the morphed box orbits") {
  Rat a(3, 4), b(2, 3), c(1, 5), d(-1, 3);
  auto y0 = MarkedBox<Rat>::standard(c, d);
  auto y1 = morph_box(box_i(y0), a, b);
  auto y2 = morph_box(box_t(y0), a, b);
  auto y3 = morph_box(box_b(y0), a, b);
  auto gen = generators(a, b, c, d);
  auto map_box = [](const Mat3<Rat>& g, const MarkedBox<Rat>& m) {
    MarkedBox<Rat> out;
    for (size_t i = 0; i < 6; ++i) out.v[i] = g * m.v[i];
    return out;
  };
  // r1: i(M) -> t(M) -> b(M) (morphed)
  CHECK(projective_equal(map_box(gen.r1, y1), y2));
  CHECK(projective_equal(map_box(gen.r1, y2), y3));
  // r2: M -> ti(M) -> bi(M) (morphed); its frame reverses the edge-end
  // order, so compare as marked boxes
  auto z2 = morph_box(box_t(y1), a, b);
  auto z3 = morph_box(box_b(y1), a, b);
  CHECK(same_marked_box(map_box(gen.r2, y0), z2));
  CHECK(same_marked_box(map_box(gen.r2, z2), z3));
}

TEST_CASE("psi evaluations") {
  const FixtureSet& fx = fixtures();
  RatSampler rng(53);
  for (int i = 0; i < 25; ++i) {
    Rat c = rng.unit_interval_open(), d = rng.unit_interval_open();
    CHECK(psi_value(fx, Rat(1), Rat(1), c, d).is_zero());
  }
  // d = 0 factorization (exact exponent c^2)
  Rat a(5, 4), b(3, 7), c(1, 3);
  Rat expect = (a * a - Rat(1)) * (b * b + Rat(1)) *
               (Rat(1) - a + a * a + b * b + a * b * b + a * a * b * b) * c * c;
  CHECK(psi_value(fx, a, b, c, Rat(0)) == expect);
}

TEST_CASE("duality curve points") {
  const FixtureSet& fx = fixtures();
  // d = 0, c != 0: the curve is the vertical line a = 1
  CurvePoint p0 = duality_curve_point(fx, Rat(1, 2), Rat(1, 3), Rat(0));
  CHECK((p0.a - BigFloat(1, 128)).abs() < BigFloat::pow2(-100, 128));
  CHECK(p0.certified_roots == 1);
  // the symmetric point (0,0) degenerates to the vertical line
  CurvePoint psym = duality_curve_point(fx, Rat(1, 2), Rat(0), Rat(0));
  CHECK(psym.degenerate_symmetric);
  CHECK(psym.a == BigFloat(1, 128));
  // grid-scan oracle at (b,c,d) = (1/2, 1/3, 1/4)
  CurvePoint pt = duality_curve_point(fx, Rat(1, 2), Rat(1, 3), Rat(1, 4));
  UPoly q = psi_in_a(fx, Rat(1, 2), Rat(1, 3), Rat(1, 4));
  Rat lo = pt.segment_lo, hi = pt.segment_hi;
  int cells = 1000;
  Rat step = (hi - lo) / Rat(cells);
  Rat found_lo, found_hi;
  int changes = 0;
  Rat x = lo;
  int prev = q.eval(lo).sign();
  for (int i = 1; i <= cells; ++i) {
    x += step;
    int sgn = q.eval(x).sign();
    if (sgn != prev) {
      ++changes;
      found_lo = x - step;
      found_hi = x;
      prev = sgn;
    }
  }
  REQUIRE(changes == 1);
  CHECK(pt.a > BigFloat(found_lo, 128));
  CHECK(pt.a < BigFloat(found_hi, 128));
  // endpoints approach a = 1 as b -> 1^-
  CurvePoint near1 = duality_curve_point(fx, Rat(99, 100), Rat(1, 3), Rat(1, 4));
  CurvePoint mid = duality_curve_point(fx, Rat(1, 2), Rat(1, 3), Rat(1, 4));
  CHECK((near1.a - BigFloat(1, 128)).abs() < (mid.a - BigFloat(1, 128)).abs());
  // all sampled points stay in the good region
  for (int i = 1; i <= 8; ++i) {
    Rat b(i, 9);
    CurvePoint cp = duality_curve_point(fx, b, Rat(1, 3), Rat(1, 4));
    CHECK(cp.a >= BigFloat(cp.segment_lo, 128));
    CHECK(cp.a <= BigFloat(cp.segment_hi, 128));
  }
}

TEST_CASE("curve symmetry (c,d) -> (-d,c) is exact on psi") {
  const FixtureSet& fx = fixtures();
  // psi(a,b,-d,c) == psi(a,b,c,d) as polynomials: check by swapping the
  // exponents and signs termwise.
  const MPoly& psi = fx.psi();
  const VarList& v = psi.vars();
  MPoly swapped(v);
  for (const auto& [m, coef] : psi.terms()) {
    // (c,d) -> (-d,c): new c-exponent = old d-exponent and vice versa, with
    // sign (-1)^(old d-exponent since c picks up the minus)
    Mono n = m;
    n.set(2, m[3]);
    n.set(3, m[2]);
    Rat sign = (m[2] % 2 == 0) ? Rat(1) : Rat(-1);
    swapped.add_term(n, coef * sign);
  }
  CHECK(swapped == psi);
}

TEST_CASE("boundary and comparison certificates pass") {
  const FixtureSet& fx = fixtures();
  CHECK(certs::psi_d0_factorization(fx).pass);
  CHECK(certs::boundary_restrictions(fx).pass);
  CHECK(certs::mu_comparison_chain(fx).pass);
  CHECK(certs::specialp_grid(fx).pass);
  CHECK(certs::sturm_g(fx).pass);
  CHECK(certs::r_pinned_forms(fx).pass);
  CHECK(certs::psi_trace_identity(fx, 8).pass);
  CHECK(certs::duality_uniqueness(fx, 40).pass);
  CHECK(certs::psi_resultant(fx, /*fast=*/true).pass);
  CHECK(certs::gradient_resultant(fx, /*fast=*/true).pass);
}

TEST_CASE("negative control: a corrupted psi fixture fails its certificates") {
  const FixtureSet& fx = fixtures();
  auto tmpdir = std::filesystem::temp_directory_path() / "prismatic_corrupt_fixtures";
  std::filesystem::create_directories(tmpdir);
  for (const auto& entry : std::filesystem::directory_iterator(fx.dir()))
    std::filesystem::copy_file(entry.path(), tmpdir / entry.path().filename(),
                               std::filesystem::copy_options::overwrite_existing);
  MPoly corrupted = fx.psi() + MPoly::term(fx.psi().vars(), Rat(1), {1, 1, 1, 1});
  write_poly_file(tmpdir / "psi.poly", corrupted, "corrupted on purpose");
  FixtureSet bad(tmpdir);
  CHECK(!certs::psi_trace_identity(bad, 3).pass);
  std::filesystem::remove_all(tmpdir);
}
