#include "turnover/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "turnover/hyperbolic.hpp"

namespace turnover {
namespace {

// x strictly inside the counterclockwise open arc from a to b on a circle of
// `size` positions.
bool strictly_between(int x, int a, int b, int size) {
  const int span = mod(b - a, size);
  const int off = mod(x - a, size);
  return off > 0 && off < span;
}

bool chords_interleave(int a, int b, int c, int d, int size) {
  return strictly_between(c, a, b, size) != strictly_between(d, a, b, size);
}

}  // namespace

std::string_view case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::kSinglePolygon: return "n=1";
    case CaseTag::kTwoPolygons: return "n=2";
    case CaseTag::kManyPolygons: return "n>=3";
    case CaseTag::kTorus: return "torus";
  }
  return "unknown";
}

CaseTag case_for_face_count(int n) {
  if (n == 1) return CaseTag::kSinglePolygon;
  if (n == 2) return CaseTag::kTwoPolygons;
  return CaseTag::kManyPolygons;
}

std::vector<std::string> curve_violations(const SurfaceComplex& complex,
                                          const CombinatorialCurve& curve) {
  std::vector<std::string> bad;
  const auto& segs = curve.segments;
  const int sides = complex.sides_per_face();
  if (segs.empty()) return {"empty"};
  for (const auto& s : segs) {
    if (s.face < 0 || s.face >= complex.face_count() || s.entry_slot < 0 ||
        s.entry_slot >= sides || s.exit_slot < 0 || s.exit_slot >= sides) {
      return {"out_of_range"};
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    const auto& next = segs[(i + 1) % segs.size()];
    if (s.entry_slot == s.exit_slot) bad.emplace_back("returning_arc");
    if (complex.partner({s.face, s.exit_slot}) != SlotRef{next.face, next.entry_slot}) {
      bad.emplace_back("not_closed");
    }
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      if (s.face != t.face) continue;
      const std::array<int, 2> a{s.entry_slot, s.exit_slot}, b{t.entry_slot, t.exit_slot};
      if (std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end()) {
        bad.emplace_back("shared_side");
      } else if (chords_interleave(a[0], a[1], b[0], b[1], sides)) {
        bad.emplace_back("self_crossing");
      }
    }
  }
  return bad;
}

std::vector<int> crossed_edges(const SurfaceComplex& complex, const CombinatorialCurve& curve) {
  std::vector<int> edges;
  for (const auto& s : curve.segments) edges.push_back(complex.slot({s.face, s.exit_slot}).edge);
  return edges;
}

Alpha build_alpha(const SurfaceComplex& complex) {
  const int n = complex.face_count();
  const int a2 = complex.hom().images[1];
  const int N = complex.edge_count();
  Alpha alpha;
  if (n == 1) {
    // One chord between the two sides carrying edge 0.
    const SlotRef out = complex.out_slot(0), in = complex.in_slot(0);
    alpha.curve.segments = {{0, in.index, out.index}};
    alpha.evidence = {"paired_sides", {0}, {0}, {out, in}};
  } else if (n == 2) {
    // Sides of face 0 meeting at the x2-corner of edge 0: out(0), in(-a2).
    const int b = 0, b2 = mod(-a2, N);
    const SlotRef s = complex.out_slot(b), s2 = complex.in_slot(b2);
    const SlotRef t = complex.out_slot(b2), t2 = complex.in_slot(b);
    alpha.curve.segments = {{s.face, s.index, s2.index}, {t.face, t.index, t2.index}};
    alpha.evidence = {"distinct_sides", {b, b2}, {s.face, t.face}, {s, s2}};
  } else {
    // The two smallest out-edges of face 0 are 0 and n; both lead to face 1.
    const int b = 0, b2 = n;
    const SlotRef s = complex.out_slot(b), s2 = complex.out_slot(b2);
    const SlotRef t = complex.in_slot(b2), t2 = complex.in_slot(b);
    alpha.curve.segments = {{s.face, s.index, s2.index}, {t.face, t.index, t2.index}};
    alpha.evidence = {"distinct_sides", {b, b2}, {s.face, t.face}, {s, s2}};
  }
  return alpha;
}

CombinatorialCurve map_curve(const SurfaceComplex& complex, const CombinatorialCurve& curve,
                             const DeckAction& action) {
  CombinatorialCurve out;
  out.segments.reserve(curve.segments.size());
  for (const auto& s : curve.segments) {
    const SlotRef entry = action.slot_map(complex, {s.face, s.entry_slot});
    const SlotRef exit = action.slot_map(complex, {s.face, s.exit_slot});
    if (entry.face != action.face_map(s.face) || exit.face != entry.face) {
      throw ComplexError("map_curve: deck action does not respect faces");
    }
    out.segments.push_back({entry.face, entry.index, exit.index});
  }
  return out;
}

CombinatorialCurve vertex_link_curve(const SurfaceComplex& complex, Vertex vertex) {
  const int sides = complex.sides_per_face();
  for (int c = 0; c < complex.face_count(); ++c) {
    for (int i = 0; i < sides; ++i) {
      if (complex.corner(c, i) != vertex) continue;
      CombinatorialCurve curve;
      SlotRef at{c, i};
      do {
        curve.segments.push_back({at.face, at.index, (at.index + 1) % sides});
        at = complex.partner({at.face, (at.index + 1) % sides});
      } while (at != SlotRef{c, i});
      return curve;
    }
  }
  throw std::invalid_argument("vertex_link_curve: no such vertex");
}

int crossing_upper_bound(const SurfaceComplex& complex, const CombinatorialCurve& first,
                         const CombinatorialCurve& second) {
  if (!curve_violations(complex, first).empty() || !curve_violations(complex, second).empty()) {
    throw std::invalid_argument("crossing_upper_bound: curves must be simple");
  }
  const int sides = complex.sides_per_face();
  const int circle = 2 * sides;

  // Each simple curve crosses an edge at most once.
  std::map<int, int> shared;
  {
    auto e1 = crossed_edges(complex, first), e2 = crossed_edges(complex, second);
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    std::vector<int> common;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(common));
    for (int e : common) shared.emplace(e, static_cast<int>(shared.size()));
  }
  if (shared.size() > 20) throw std::invalid_argument("crossing_upper_bound: too many shared edges");

  // Boundary position of an endpoint: two positions per side, the order of
  // the pair on a shared side fixed by the mask bit of its edge.
  auto position = [&](int face, int slot_index, bool is_first, unsigned mask) {
    const Slot& s = complex.slot({face, slot_index});
    auto it = shared.find(s.edge);
    if (it == shared.end()) return 2 * slot_index;
    // Bit clear: the first curve crosses nearer the x1-end of the edge.
    const bool first_near_x1 = ((mask >> it->second) & 1u) == 0;
    const bool along_walk = s.kind == SlotKind::kOut;  // out-slots run x1 -> x2
    const bool first_earlier = first_near_x1 == along_walk;
    return 2 * slot_index + ((is_first == first_earlier) ? 0 : 1);
  };

  int best = -1;
  const unsigned choices = 1u << shared.size();
  for (unsigned mask = 0; mask < choices; ++mask) {
    int total = 0;
    for (const auto& s : first.segments) {
      for (const auto& t : second.segments) {
        if (s.face != t.face) continue;
        const int a = position(s.face, s.entry_slot, true, mask);
        const int b = position(s.face, s.exit_slot, true, mask);
        const int c = position(t.face, t.entry_slot, false, mask);
        const int d = position(t.face, t.exit_slot, false, mask);
        if (chords_interleave(a, b, c, d, circle)) ++total;
      }
    }
    if (best < 0 || total < best) best = total;
  }
  return best;
}

std::vector<Certificate> certify(const Instance& instance, const CertifyOptions& options) {
  const SurfaceComplex complex = build_complex(instance.sig, instance.hom);
  const Alpha alpha = build_alpha(complex);
  const int N = complex.edge_count();
  const int n = complex.face_count();

  if (auto bad = curve_violations(complex, alpha.curve); !bad.empty()) {
    throw CertificationFailure("certify: constructed curve is not simple: " + bad.front());
  }
  const auto& ev = alpha.evidence;
  const bool evidence_ok =
      n == 1 ? (ev.edges.size() == 1 && ev.slots.size() == 2 && ev.slots[0] != ev.slots[1] &&
                complex.slot(ev.slots[0]).edge == complex.slot(ev.slots[1]).edge)
             : (ev.edges.size() == 2 && ev.edges[0] != ev.edges[1] && ev.faces.size() == 2 &&
                ev.faces[0] != ev.faces[1]);
  if (!evidence_ok) throw CertificationFailure("certify: malformed essentiality evidence");

  std::optional<double> trace;
  if (options.with_geometry) {
    const auto poly = hyp::build_reference_polygon(instance.sig);
    trace = hyp::develop_curve(complex, poly, alpha.curve).holonomy.trace();
  }

  std::vector<Certificate> out;
  for (int k = 1; k < N; ++k) {
    if (std::gcd(k, N) != 1) continue;
    const DeckAction action = deck_action(complex, k);
    Certificate cert;
    cert.instance = instance;
    cert.generator = k;
    cert.case_tag = case_for_face_count(n);
    cert.alpha = alpha.curve;
    cert.image = map_curve(complex, alpha.curve, action);
    cert.crossing_bound = crossing_upper_bound(complex, alpha.curve, cert.image);
    cert.disjoint = cert.crossing_bound == 0;
    cert.evidence = alpha.evidence;
    cert.holonomy_trace = trace;
    if (cert.crossing_bound > 1 || (n == 2 && cert.crossing_bound != 0)) {
      std::ostringstream what;
      what << "certify: crossing bound " << cert.crossing_bound << " for k = " << k;
      throw CertificationFailure(what.str());
    }
    out.push_back(std::move(cert));
    if (!options.all_generators) break;
  }
  return out;
}

}  // namespace turnover
