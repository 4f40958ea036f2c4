#include <doctest.h>

#include "prismatic/flags.hpp"
#include "prismatic/markedbox.hpp"
#include "prismatic/prism.hpp"
#include "prismatic/sampling.hpp"

using namespace prismatic;

TEST_CASE("point and line actions preserve incidence") {
  Mat3<Rat> id = Mat3<Rat>::identity(Rat(1));
  HVec<Rat> p{Rat(1), Rat(2), Rat(3)};
  HVec<Rat> line = cross(p, HVec<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(projective_equal(act_point(id, p), p));
  CHECK(projective_equal(act_line(id, line), line));

  Mat3<Rat> m = Mat3<Rat>::diagonal(Rat(2), Rat(1), Rat(1, 2));
  HVec<Rat> q{Rat(1), Rat(0), Rat(1)};
  CHECK(projective_equal(act_point(m, q), HVec<Rat>{Rat(4), Rat(0), Rat(1)}));

  RatSampler rng(23);
  for (int i = 0; i < 50; ++i) {
    Mat3<Rat> g;
    do {
      for (int k = 0; k < 9; ++k) g.a[static_cast<size_t>(k)] = rng.rational(6, 3);
    } while (g.det().is_zero());
    HVec<Rat> a{rng.rational(), rng.rational(), rng.rational()};
    HVec<Rat> b{rng.rational(), rng.rational(), rng.rational()};
    if (a.is_zero_vector() || b.is_zero_vector() || projective_equal(a, b)) continue;
    HVec<Rat> l = cross(a, b);
    CHECK(dot(act_point(g, a), act_line(g, l)).is_zero());
  }
  Mat3<Rat> singular = Mat3<Rat>::diagonal(Rat(1), Rat(1), Rat(0));
  CHECK_THROWS_AS(act_line(singular, line), std::domain_error);
}

TEST_CASE("duality_conjugate is symmetric and matches M2") {
  Mat3<Rat> id = Mat3<Rat>::identity(Rat(1));
  CHECK(duality_conjugate(id) == id);
  RatSampler rng(29);
  for (int i = 0; i < 20; ++i) {
    Mat3<Rat> s;
    do {
      for (int k = 0; k < 9; ++k) s.a[static_cast<size_t>(k)] = rng.rational(6, 3);
    } while (s.det().is_zero());
    Mat3<Rat> m = duality_conjugate(s);
    CHECK(m == m.transposed());
  }
  // the scene's polarity matrix is exactly duality_conjugate(S)
  PrismParamsT<QuadExt> p{QuadExt(Rat(5, 3)), QuadExt(Rat(2)), QuadExt(Rat(1, 2))};
  auto sc = build_scene(p);
  CHECK(duality_conjugate(sc.S) == sc.M2);
}

TEST_CASE("triple product values") {
  // at parameter t the normalized triple has invariant -t^3/(t+1)^3
  PrismParamsT<QuadExt> p1{QuadExt(1), QuadExt(1), QuadExt(Rat(1))};
  CHECK(first_invariant(build_scene(p1)) == QuadExt(Rat(-1, 8)));
  PrismParamsT<QuadExt> p2{QuadExt(1), QuadExt(1), QuadExt(Rat(1, 3))};
  CHECK(first_invariant(build_scene(p2)) == QuadExt(Rat(-1, 64)));
  // non-generic: exactly -1
  PrismParamsT<QuadExt> png{QuadExt(2), QuadExt(3), std::nullopt};
  CHECK(first_invariant(build_scene(png)) == QuadExt(Rat(-1)));
  // non-transverse flags raise
  FlagTriple<Rat> bad{Flag<Rat>{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1)}},
                      Flag<Rat>{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}},
                      Flag<Rat>{{Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(0)}}};
  CHECK_THROWS_AS(triple_product(bad), std::domain_error);
}

TEST_CASE("prism invariant") {
  CHECK(prism_invariant(-1.0) == doctest::Approx(0.0));
  CHECK(prism_invariant(-0.125) == doctest::Approx(3 * std::log(2.0)));
  CHECK(prism_invariant(-8.0) == doctest::Approx(3 * std::log(2.0)));  // chi <-> 1/chi
  CHECK_THROWS_AS(prism_invariant(0.5), std::domain_error);
  BigFloat big = prism_invariant(Rat(-1, 8), 256);
  CHECK((big - BigFloat(3, 256) * BigFloat(2, 256).log()).abs() < BigFloat::pow2(-250, 256));
}

TEST_CASE("flat metric") {
  CHECK(flat_distance(1, 1, 1) == doctest::Approx(0.0));
  double a = 2.5;
  CHECK(flat_distance(a, 1, 1 / a) == doctest::Approx(std::sqrt(2.0) * std::log(a)));
  CHECK(flat_distance(a, a, 1 / (a * a)) == doctest::Approx(std::sqrt(6.0) * std::log(a)));
  CHECK_THROWS_AS(flat_distance(-1, 1, -1), std::domain_error);
  CHECK_THROWS_AS(flat_distance(2, 2, 2), std::domain_error);  // abc != 1
}

TEST_CASE("marked box operations and relations") {
  auto m = MarkedBox<Rat>::unit_square(Rat(1, 3), Rat(2, 5));
  CHECK(same_marked_box(box_i(box_i(m)), m));
  CHECK(same_marked_box(box_t(box_i(box_t(m))), box_b(m)));
  CHECK(same_marked_box(box_b(box_i(box_b(m))), box_t(m)));
  CHECK(same_marked_box(box_t(box_i(box_b(box_i(m)))), m));
  CHECK(same_marked_box(box_b(box_i(box_t(box_i(m)))), m));
  // degeneracy raises rather than emitting a zero vector
  MarkedBox<Rat> degenerate = m;
  degenerate.v[3] = m.v[0];
  degenerate.v[4] = m.v[1];
  degenerate.v[5] = m.v[2];  // top and bottom lines coincide
  CHECK_THROWS_AS(box_t(degenerate), box_degeneracy_error);
}

TEST_CASE("get_matrix frames") {
  auto y0 = MarkedBox<Rat>::standard(Rat(0), Rat(0));
  Mat3<Rat> t = get_matrix(y0);
  CHECK(projective_equal(t * HVec<Rat>{Rat(1), Rat(1), Rat(1)}, y0.v[5]));
  CHECK(projective_equal(t.column(0), y0.v[0]));
  CHECK(projective_equal(t.column(1), y0.v[2]));
  CHECK(projective_equal(t.column(2), y0.v[3]));

  // frame-change maps the corners of one box onto the other's
  auto m1 = MarkedBox<Rat>::unit_square(Rat(1, 4), Rat(1, 3));
  Mat3<Rat> f1 = get_matrix(m1);
  Mat3<Rat> f0 = get_matrix(y0);
  Mat3<Rat> change = f1 * f0.inverse();
  for (size_t i : {size_t{0}, size_t{2}, size_t{3}, size_t{5}})
    CHECK(projective_equal(change * y0.v[i], m1.v[i]));
}

TEST_CASE("box_class reads the square normalization") {
  auto m = MarkedBox<Rat>::unit_square(Rat(1, 3), Rat(1, 4));
  auto cls = box_class(m);
  CHECK(cls.c == Rat(1, 3));
  CHECK(cls.d == Rat(1, 4));
  CHECK(!cls.axial);
  // (c,d) ~ (1-c,1-d)
  CHECK(box_class(MarkedBox<Rat>::unit_square(Rat(2, 3), Rat(3, 4))) == cls);
  // axial boxes flagged
  CHECK(box_class(MarkedBox<Rat>::unit_square(Rat(1, 2), Rat(1, 5))).axial);
  CHECK(box_class(MarkedBox<Rat>::unit_square(Rat(1, 5), Rat(1, 2))).axial);
  // i-action on classes in this chart: [(d, c)]
  auto ci = box_class(box_i(m));
  CHECK(ci == BoxClass<Rat>::of(Rat(1, 4), Rat(1, 3)));
  // the standard box normalizes to the same class as its parameters would
  // suggest only after the chart change; just check projective invariance
  Mat3<Rat> g{{Rat(2), Rat(1), Rat(0), Rat(-1), Rat(3), Rat(1), Rat(0), Rat(1), Rat(5)}};
  MarkedBox<Rat> img;
  for (size_t i = 0; i < 6; ++i) img.v[i] = g * m.v[i];
  CHECK(box_class(img) == cls);
  // non-convex input raises
  MarkedBox<Rat> crossed = m;
  std::swap(crossed.v[1], crossed.v[4]);  // marked points off their edges
  CHECK_THROWS_AS(box_class(crossed), std::domain_error);
}

TEST_CASE("affine diameter") {
  auto m = MarkedBox<Rat>::unit_square(Rat(1, 2), Rat(1, 2));
  CHECK(affine_diameter(m) == doctest::Approx(std::sqrt(2.0)));
  CHECK(affine_diameter(box_i(m)) == doctest::Approx(affine_diameter(m)));  // same vertex set
  // bt^3 boxes shrink along the family x = 1/2^k
  double prev = 1e9;
  for (long k = 1; k <= 4; ++k) {
    auto box = MarkedBox<Rat>::unit_square(Rat(1, 1L << k), Rat(1, 2));
    auto img = box_b(box_t(box_t(box_t(box))));
    double diam = affine_diameter(img);
    CHECK(diam < prev);
    prev = diam;
  }
  MarkedBox<Rat> inf_box = MarkedBox<Rat>::standard(Rat(0), Rat(0));
  CHECK_THROWS_AS(affine_diameter(inf_box), std::domain_error);
}

TEST_CASE("orthogonal pair invariants") {
  // direct evaluation at (r,x,y) = (2,1,2)
  auto [t1, t2] = orthogonal_pair_invariants(Rat(2), Rat(1), Rat(2));
  CHECK(t1 == Rat(11, 9));
  CHECK(t2 == Rat(11, 5));
  // the denominator factor (rx+1) vanishes at y = 0, x = -1/r
  CHECK_THROWS_AS(orthogonal_pair_invariants(Rat(2), Rat(-1, 2), Rat(0)), std::domain_error);
  // (2,1,1) sits on the x^2+y^2 = rx degeneracy
  CHECK_THROWS_AS(orthogonal_pair_invariants(Rat(2), Rat(1), Rat(1)), std::domain_error);
  RatSampler rng(31);
  int done = 0;
  while (done < 200) {
    try {
      auto [u1, u2] = orthogonal_pair_invariants(rng.rational(), rng.rational(), rng.rational());
      CHECK((u1 * u2).sign() >= 0);
      ++done;
    } catch (const std::domain_error&) {
    }
  }
}
