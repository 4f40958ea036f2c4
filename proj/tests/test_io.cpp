#include <doctest.h>

#include "prismatic/emitters.hpp"

using namespace prismatic;

namespace {
const FixtureSet& fixtures() {
  static FixtureSet fx{FixtureSet::locate(PRISMATIC_SOURCE_FIXTURES)};
  return fx;
}
}  // namespace

TEST_CASE("orbit enumeration: counts, words, and degeneracy reporting") {
  auto seed = MarkedBox<Rat>::standard(Rat(1, 5), Rat(1, 7));
  auto only_seed = enumerate_orbit(seed, Rat(1), Rat(1), 0);
  REQUIRE(only_seed.size() == 1);
  CHECK(only_seed[0].word.empty());

  auto depth1 = enumerate_orbit(seed, Rat(1), Rat(1), 1);
  CHECK(depth1.size() == 4);  // "", b, i, t

  auto depth3 = enumerate_orbit(seed, Rat(1), Rat(1), 3);
  // 1 + 3 + 6 + 12 words of length 0..3
  CHECK(depth3.size() == 22);
  for (const auto& e : depth3) CHECK(!e.degenerate);
  // word ordering is (length, lexicographic)
  for (size_t i = 1; i < depth3.size(); ++i) {
    const auto &a = depth3[i - 1], &b = depth3[i];
    bool ordered = a.word.size() < b.word.size() ||
                   (a.word.size() == b.word.size() && a.word < b.word);
    CHECK(ordered);
  }
}

TEST_CASE("pure Pappus orbit: adjacent boxes share edge lines") {
  auto seed = MarkedBox<Rat>::standard(Rat(1, 5), Rat(1, 7));
  auto t_child = box_t(seed);
  // t(M) keeps the top edge of M and its bottom edge lies inside M
  CHECK(projective_equal(t_child.v[0], seed.v[0]));
  CHECK(projective_equal(t_child.v[2], seed.v[2]));
  // the new bottom line passes through the old marked points' span:
  // incidence of shared vertices ensures adjacency
  auto b_child = box_b(seed);
  CHECK(projective_equal(b_child.v[3], seed.v[5]));
  CHECK(projective_equal(b_child.v[5], seed.v[3]));
  // shared interior edge between t(M) and b(M): identical cross-product
  // vertices in both
  CHECK(projective_equal(t_child.v[3], b_child.v[0]));
  CHECK(projective_equal(t_child.v[5], b_child.v[2]));
}

TEST_CASE("orbit JSON schema") {
  auto seed = MarkedBox<Rat>::unit_square(Rat(1, 3), Rat(1, 4));
  auto entries = enumerate_orbit(seed, Rat(1), Rat(1, 2), 2);
  nlohmann::ordered_json config{{"seed", "unit-square"}};
  auto j = orbit_to_json(entries, config);
  REQUIRE(j.contains("boxes"));
  REQUIRE(j.contains("config"));
  const auto& boxes = j["boxes"];
  CHECK(boxes.size() == entries.size());
  for (const auto& bj : boxes) {
    if (bj.contains("degenerate")) continue;
    CHECK(bj["word"].is_string());
    REQUIRE(bj["vertices"].size() == 6);
    for (const auto& vert : bj["vertices"]) {
      REQUIRE(vert.size() == 3);
      for (const auto& coord : vert) {
        // exact rationals serialized as strings "p" or "p/q"
        CHECK(coord.is_string());
        CHECK_NOTHROW(Rat::parse(coord.get<std::string>()));
      }
    }
  }
  // byte-identical body on re-emission
  CHECK(orbit_to_json(entries, config).dump(2) == j.dump(2));
}

TEST_CASE("SVG twin draws the finite boxes") {
  auto seed = MarkedBox<Rat>::unit_square(Rat(1, 3), Rat(1, 4));
  auto entries = enumerate_orbit(seed, Rat(1), Rat(1, 2), 2);
  std::string svg = orbit_svg(entries, "test config");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("test config") != std::string::npos);
  size_t polys = 0;
  for (size_t pos = svg.find("<polygon"); pos != std::string::npos;
       pos = svg.find("<polygon", pos + 1))
    ++polys;
  size_t finite = 0;
  for (const auto& e : entries) {
    if (e.degenerate) continue;
    bool ok = true;
    for (const auto& v : e.box.v) ok = ok && !v.z.is_zero();
    finite += ok;
  }
  CHECK(polys == finite);
}

TEST_CASE("certificate report serialization") {
  CertificateReport rep;
  rep.results.push_back({"alpha", true, "fine", 1.5});
  rep.results.push_back({"beta", false, "broke", 2.5});
  auto j = certificate_report_json(rep, {{"suite", "demo"}});
  CHECK(j["all_pass"] == false);
  CHECK(j["certificates"][0]["status"] == "PASS");
  CHECK(j["certificates"][1]["status"] == "FAIL");
}

TEST_CASE("orbit CSV and trace formats") {
  const FixtureSet& fx = fixtures();
  DynConfig cfg;
  DynPoint start = DynPoint::from_rat(Rat(2), Rat(1), Rat(1, 3), 128);
  cfg.prec = 128;
  OrbitResult orbit = iterate_orbit(start, cfg, fx, 2, true);
  REQUIRE(orbit.completed);
  std::string csv = orbit_csv(orbit, "demo config", 20);
  CHECK(csv.rfind("# demo config\nstep,r,s,t,residual\n0,", 0) == 0);
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 2 + orbit.rows.size());
  std::string jsonl = trace_jsonl(orbit, 20);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 2);
  auto first_line = nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')));
  CHECK(first_line["step"] == 1);
  CHECK(first_line["t_prime"].is_string());
  CHECK(first_line["positive_roots"] == 1);
}
