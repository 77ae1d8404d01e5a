#include <doctest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "turnover/enumerator.hpp"
#include "turnover/surface_complex.hpp"

using namespace turnover;

namespace {

SurfaceComplex complex_of(const Instance& inst) { return build_complex(inst.sig, inst.hom); }

// Vertex count found by gluing polygon corners, ignoring the library's labels.
int corner_classes(const SurfaceComplex& cx) {
  const int sides = cx.sides_per_face();
  std::vector<int> parent(cx.face_count() * sides);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto id = [&](int face, int corner) { return face * sides + mod(corner, sides); };
  for (int f = 0; f < cx.face_count(); ++f) {
    for (int i = 0; i < sides; ++i) {
      const SlotRef t = cx.partner({f, i});
      // corner i-1 starts slot i, corner i ends it; the gluing reverses direction
      parent[find(id(f, i - 1))] = find(id(t.face, t.index));
      parent[find(id(f, i))] = find(id(t.face, t.index - 1));
    }
  }
  std::set<int> roots;
  for (int x = 0; x < static_cast<int>(parent.size()); ++x) roots.insert(find(x));
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("worked instance with two faces") {
  const auto cx = complex_of(make_instance({6, 10, 15}, 30, {5, 27, 28}));
  CHECK(cx.face_count() == 2);
  CHECK(cx.edge_count() == 30);
  CHECK(cx.sides_per_face() == 30);
  CHECK(cx.x1_vertex_count() == 5);
  CHECK(cx.x2_vertex_count() == 3);
  CHECK(cx.euler_characteristic() == -20);
  CHECK(cx.violations().empty());
  const auto f = deck_action(cx, 1);
  CHECK(f.face_map(0) == 1);
  CHECK(f.face_map(1) == 0);
  CHECK(f.fixed_point_count(cx) == 0);
}

TEST_CASE("worked instance with one face") {
  const auto cx = complex_of(make_instance({2, 5, 10}, 10, {5, 2, 3}));
  CHECK(cx.face_count() == 1);
  CHECK(cx.sides_per_face() == 20);
  CHECK(cx.x1_vertex_count() == 5);
  CHECK(cx.x2_vertex_count() == 2);
  CHECK(cx.euler_characteristic() == -2);
  CHECK(deck_action(cx, 1).fixed_point_count(cx) == 1);
}

TEST_CASE("every slot has an involutive partner on the same edge") {
  for (const auto& c : enumerate_admissible(40, 1)) {
    const auto cx = complex_of(c.instance);
    for (int f = 0; f < cx.face_count(); ++f) {
      for (int i = 0; i < cx.sides_per_face(); ++i) {
        const SlotRef s{f, i};
        const SlotRef t = cx.partner(s);
        CHECK(t != s);
        CHECK(cx.partner(t) == s);
        CHECK(cx.slot(t).edge == cx.slot(s).edge);
        CHECK(cx.slot(t).kind != cx.slot(s).kind);
        CHECK(cx.slot_start(s) == cx.slot_end(t));
        CHECK(cx.slot_end(s) == cx.slot_start(t));
      }
    }
  }
}

TEST_CASE("cell counts match corner gluing and the genus fraction") {
  for (int N = 2; N <= 60; ++N) {
    for (const auto& inst : enumerate_raw(N)) {
      const auto cx = complex_of(inst);
      REQUIRE(cx.violations().empty());
      const int v = corner_classes(cx);
      CHECK(v == cx.x1_vertex_count() + cx.x2_vertex_count());
      const auto g = oracle::genus(inst.sig.p, N);
      CHECK(v - cx.edge_count() + cx.face_count() == 2 - 2 * g.num);
      for (int b = 0; b < N; ++b) CHECK(mod(cx.in_face(b) - cx.out_face(b), cx.face_count()) == 1 % cx.face_count());
    }
  }
}

TEST_CASE("deck action: powers, freeness, fixed points, quotient") {
  for (const auto& c : enumerate_admissible(36, 1)) {
    const auto cx = complex_of(c.instance);
    const int N = cx.edge_count();
    const int fixed = invariants(c.instance.sig, c.instance.hom).fixed_point_count;
    for (int k = 1; k < N; ++k) {
      if (std::gcd(k, N) != 1) {
        CHECK_THROWS_AS(deck_action(cx, k), std::invalid_argument);
        continue;
      }
      const auto f = deck_action(cx, k);
      for (int b = 0; b < N; ++b) CHECK(f.edge_map(b) != b);
      CHECK(f.fixed_point_count(cx) == fixed);
      CHECK(walk_equivariant(cx, f));
      CHECK(quotient_check(cx, f));
      // f^k composed with f^l acts like f^(k+l) on faces
      const auto one = deck_action(cx, 1);
      for (int face = 0; face < cx.face_count(); ++face) {
        int x = face;
        for (int j = 0; j < k; ++j) x = one.face_map(x);
        CHECK(f.face_map(face) == x);
      }
    }
  }
}

TEST_CASE("inconsistent data is caught at construction") {
  const auto sig = validate_signature(6, 10, 15);
  // relation fails: a walk revisits edges
  CHECK_THROWS_AS(build_complex(sig, CyclicHom{30, {5, 27, 27}}), ComplexError);
  // r does not divide N
  CHECK_THROWS_AS(build_complex(sig, CyclicHom{20, {5, 7, 8}}), ComplexError);
  try {
    build_complex(sig, CyclicHom{30, {5, 27, 27}});
  } catch (const ComplexError& e) {
    CHECK(std::string(e.what()).find("edge_multiplicity") != std::string::npos);
  }
}
