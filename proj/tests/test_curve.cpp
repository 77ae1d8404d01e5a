#include <doctest.h>

#include <numeric>
#include <random>

#include "turnover/curve.hpp"
#include "turnover/enumerator.hpp"

using namespace turnover;

namespace {

SurfaceComplex complex_of(const Instance& inst) { return build_complex(inst.sig, inst.hom); }

std::vector<int> units(int N) {
  std::vector<int> out;
  for (int k = 1; k < N; ++k) {
    if (std::gcd(k, N) == 1) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("alpha on the one-face instance") {
  const auto inst = make_instance({2, 5, 10}, 10, {5, 2, 3});
  const auto cx = complex_of(inst);
  const auto alpha = build_alpha(cx);
  REQUIRE(alpha.curve.segments.size() == 1);
  CHECK(alpha.curve.segments[0] == CurveSegment{0, 9, 0});
  CHECK(alpha.evidence.kind == "paired_sides");
  CHECK(curve_violations(cx, alpha.curve).empty());
  for (int k : units(10)) {
    const auto image = map_curve(cx, alpha.curve, deck_action(cx, k));
    CHECK(crossing_upper_bound(cx, alpha.curve, image) == 1);
  }
  // f^(a3) turns the polygon by one click: two slots
  const auto img = map_curve(cx, alpha.curve, deck_action(cx, 3));
  CHECK(img.segments[0].entry_slot == (9 + 2) % 20);
  CHECK(img.segments[0].exit_slot == 2);
}

TEST_CASE("alpha on the fixed-point-free instance") {
  const auto inst = make_instance({6, 10, 15}, 30, {5, 27, 28});
  const auto cx = complex_of(inst);
  const auto alpha = build_alpha(cx);
  REQUIRE(alpha.curve.segments.size() == 2);
  CHECK(alpha.curve.segments[0] == CurveSegment{0, 0, 1});
  CHECK(alpha.curve.segments[1] == CurveSegment{1, 28, 5});
  CHECK(alpha.evidence.kind == "distinct_sides");
  const auto certs = certify(inst);
  CHECK(certs.size() == 8);
  for (const auto& c : certs) {
    CHECK(c.crossing_bound == 0);
    CHECK(c.disjoint);
    CHECK(c.case_tag == CaseTag::kTwoPolygons);
  }
  const auto image = certs.front().image;
  CHECK(certs.front().generator == 1);
  CHECK(image.segments[0].face == 1);
  CHECK(image.segments[1].face == 0);
}

TEST_CASE("alpha on a many-face instance") {
  const auto inst = make_instance({12, 15, 20}, 60, {5, 4, 51});
  const auto cx = complex_of(inst);
  CHECK(cx.face_count() == 3);
  const auto alpha = build_alpha(cx);
  REQUIRE(alpha.curve.segments.size() == 2);
  CHECK(alpha.curve.segments[0] == CurveSegment{0, 0, 26});
  CHECK(alpha.curve.segments[1] == CurveSegment{1, 13, 27});
  for (int k : units(60)) {
    const auto image = map_curve(cx, alpha.curve, deck_action(cx, k));
    const int expected = (k == 7 || k == 17 || k == 43 || k == 53) ? 0 : 1;
    CHECK_MESSAGE(crossing_upper_bound(cx, alpha.curve, image) == expected, "k = " << k);
  }
}

TEST_CASE("case tags") {
  CHECK(case_tag_name(case_for_face_count(1)) == "n=1");
  CHECK(case_tag_name(case_for_face_count(2)) == "n=2");
  CHECK(case_tag_name(case_for_face_count(7)) == "n>=3");
  CHECK(case_tag_name(CaseTag::kTorus) == "torus");
}

TEST_CASE("malformed curves are diagnosed") {
  const auto cx = complex_of(make_instance({6, 10, 15}, 30, {5, 27, 28}));
  CHECK(curve_violations(cx, {}) == std::vector<std::string>{"empty"});
  CHECK(curve_violations(cx, {{{0, 0, 40}}}) == std::vector<std::string>{"out_of_range"});
  const CombinatorialCurve back{{{0, 3, 3}}};
  const auto bad = curve_violations(cx, back);
  CHECK(std::find(bad.begin(), bad.end(), "returning_arc") != bad.end());
  const CombinatorialCurve open{{{0, 0, 1}}};
  CHECK(curve_violations(cx, open) == std::vector<std::string>{"not_closed"});
  CHECK_THROWS_AS(crossing_upper_bound(cx, open, open), std::invalid_argument);
}

TEST_CASE("curve properties over random instances") {
  auto classes = enumerate_admissible(60, 1);
  std::mt19937 rng(20240611);
  std::shuffle(classes.begin(), classes.end(), rng);
  classes.resize(120);
  for (const auto& c : classes) {
    const auto cx = complex_of(c.instance);
    const auto alpha = build_alpha(cx).curve;
    const int N = cx.edge_count();
    REQUIRE(curve_violations(cx, alpha).empty());
    CHECK(crossing_upper_bound(cx, alpha, alpha) == 0);
    const auto ks = units(N);
    std::uniform_int_distribution<std::size_t> pick(0, ks.size() - 1);
    for (int trial = 0; trial < 4; ++trial) {
      const int k = ks[pick(rng)], l = ks[pick(rng)];
      const auto fk = deck_action(cx, k);
      const auto image = map_curve(cx, alpha, fk);
      CHECK(curve_violations(cx, image).empty());
      CHECK(image.segments.size() == alpha.segments.size());
      // symmetry and invariance under a common deck transformation
      const int i1 = crossing_upper_bound(cx, alpha, image);
      CHECK(i1 == crossing_upper_bound(cx, image, alpha));
      const auto fl = deck_action(cx, l);
      CHECK(i1 == crossing_upper_bound(cx, map_curve(cx, alpha, fl), map_curve(cx, image, fl)));
      // composition of deck maps
      if (std::gcd(k + l, N) == 1 && (k + l) % N != 0) {
        CHECK(map_curve(cx, image, fl) == map_curve(cx, alpha, deck_action(cx, (k + l) % N)));
      }
    }
    // the N-th power of f is the identity
    CombinatorialCurve walk = alpha;
    const auto f = deck_action(cx, 1);
    for (int j = 0; j < N; ++j) walk = map_curve(cx, walk, f);
    CHECK(walk == alpha);
  }
}

TEST_CASE("vertex links are simple closed curves of the right length") {
  const auto cx = complex_of(make_instance({6, 10, 15}, 30, {5, 27, 28}));
  for (int v = 0; v < cx.x1_vertex_count(); ++v) {
    const auto link = vertex_link_curve(cx, {VertexType::kX1, v});
    CHECK(link.segments.size() == 6);
    CHECK(curve_violations(cx, link).empty());
  }
  for (int v = 0; v < cx.x2_vertex_count(); ++v) {
    CHECK(vertex_link_curve(cx, {VertexType::kX2, v}).segments.size() == 10);
  }
  CHECK_THROWS_AS(vertex_link_curve(cx, {VertexType::kX1, 99}), std::invalid_argument);
}

TEST_CASE("certify honours its options") {
  const auto inst = make_instance({2, 5, 10}, 10, {5, 2, 3});
  const auto one = certify(inst, {.all_generators = false, .with_geometry = true});
  REQUIRE(one.size() == 1);
  CHECK(one[0].generator == 1);
  REQUIRE(one[0].holonomy_trace.has_value());
  CHECK(std::abs(*one[0].holonomy_trace) == doctest::Approx(5.236068).epsilon(1e-6));
  CHECK_FALSE(certify(inst).front().holonomy_trace.has_value());
}
