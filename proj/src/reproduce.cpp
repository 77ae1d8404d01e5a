#include "turnover/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "turnover/curve.hpp"
#include "turnover/enumerator.hpp"
#include "turnover/surface_complex.hpp"

namespace turnover {
namespace {

template <typename T>
std::string str(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

void expect_eq(ReproReport& report, const std::string& claim, long long expected, long long got) {
  report.checks.push_back({claim + " = " + str(expected), str(got), expected == got});
}

}  // namespace

bool ReproReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.ok; });
}

std::string ReproReport::to_text() const {
  std::ostringstream out;
  out << "example " << example << '\n';
  for (const auto& c : checks) {
    out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.claim << " (observed " << c.observed
        << ")\n";
  }
  out << (ok() ? "all claims reproduced" : "some claims FAILED") << '\n';
  return out.str();
}

Instance fixed_point_free_example() { return make_instance({6, 10, 15}, 30, {5, -3, -2}); }

ReproReport reproduce_fixed_point_free_example() {
  ReproReport report{"3.2", {}};
  const Instance inst = fixed_point_free_example();
  const auto inv = invariants(inst.sig, inst.hom);
  expect_eq(report, "genus", 11, inv.genus);
  expect_eq(report, "order of f", 30, inst.hom.order);
  expect_eq(report, "fixed points of f", 0, inv.fixed_point_count);

  const SurfaceComplex complex = build_complex(inst.sig, inst.hom);
  const DeckAction f = deck_action(complex, 1);
  expect_eq(report, "fixed cells of the deck generator", 0, f.fixed_point_count(complex));
  expect_eq(report, "polygons", 2, complex.face_count());
  expect_eq(report, "sides per polygon", 30, complex.sides_per_face());
  expect_eq(report, "f(P0)", 1, f.face_map(0));
  expect_eq(report, "f(P1)", 0, f.face_map(1));

  const auto certs = certify(inst, {true, false});
  const int worst = std::max_element(certs.begin(), certs.end(), [](const auto& a, const auto& b) {
                      return a.crossing_bound < b.crossing_bound;
                    })->crossing_bound;
  report.checks.push_back({"i(alpha, f^k(alpha)) = 0 for all " + str(certs.size()) + " generators",
                           "max bound " + str(worst), worst == 0});
  const auto& alpha = certs.front().alpha;
  report.checks.push_back({"alpha meets each polygon in one arc",
                           str(alpha.segments.size()) + " arcs",
                           alpha.segments.size() == 2 &&
                               alpha.segments[0].face != alpha.segments[1].face});
  return report;
}

ReproReport reproduce_rotation_example(int genus) {
  ReproReport report{"3.1 (g = " + str(genus) + ")", {}};
  if (genus < 2) {
    report.checks.push_back({"genus >= 2", str(genus), false});
    return report;
  }
  const int N = 4 * genus + 2;
  const ConeSignature sig{{2, 2 * genus + 1, N}};
  std::vector<Instance> found;
  for (const Instance& raw : enumerate_raw(N)) {
    if (raw.sig != sig) continue;
    const auto key = canonical_key(raw);
    const bool dup = std::any_of(found.begin(), found.end(),
                                 [&](const Instance& f) { return f.hom.images == key; });
    if (!dup) found.push_back(Instance{sig, CyclicHom{N, key}});
  }
  report.checks.push_back({"signature (2, " + str(2 * genus + 1) + ", " + str(N) +
                               ") with N = " + str(N) + " is admissible",
                           str(found.size()) + " class(es)", !found.empty()});

  for (const Instance& inst : found) {
    const std::string tag = "[a = " + str(inst.hom.images[0]) + "," + str(inst.hom.images[1]) +
                            "," + str(inst.hom.images[2]) + "] ";
    const auto inv = invariants(inst.sig, inst.hom);
    expect_eq(report, tag + "genus", genus, inv.genus);
    expect_eq(report, tag + "fixed points", 1, inv.fixed_point_count);
    expect_eq(report, tag + "polygons", 1, inv.n);

    const SurfaceComplex complex = build_complex(inst.sig, inst.hom);
    expect_eq(report, tag + "side midpoints (x1-vertices)", 2 * genus + 1,
              complex.x1_vertex_count());
    expect_eq(report, tag + "corner orbits (x2-vertices)", 2, complex.x2_vertex_count());

    // f^{a3} shifts every out-slot to the next one: a rotation by one click.
    const DeckAction click = deck_action(complex, inst.hom.images[2]);
    bool one_click = true;
    for (int i = 0; i < complex.sides_per_face(); ++i) {
      one_click = one_click && click.slot_map(complex, {0, i}).index ==
                                   (i + 2) % complex.sides_per_face();
    }
    report.checks.push_back({tag + "a generator rotates P0 by one click", one_click ? "yes" : "no",
                             one_click});

    const auto certs = certify(inst, {true, false});
    int worst = 0;
    for (const auto& c : certs) worst = std::max(worst, c.crossing_bound);
    report.checks.push_back({tag + "i(alpha, f^k(alpha)) <= 1 for all " + str(certs.size()) +
                                 " generators",
                             "max bound " + str(worst), worst <= 1});
  }
  return report;
}

}  // namespace turnover
