#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turnover/orbifold.hpp"
#include "turnover/surface_complex.hpp"

namespace turnover {

/// One normal arc of a curve: a chord of `face` between two of its sides.
struct CurveSegment {
  int face = 0;
  int entry_slot = 0;
  int exit_slot = 0;

  bool operator==(const CurveSegment&) const = default;
};

/// A closed curve as the cyclic sequence of chords it draws, one per visited
/// polygon. Leaving segment i through a side re-enters segment i + 1 through
/// the partner side.
struct CombinatorialCurve {
  std::vector<CurveSegment> segments;

  bool operator==(const CombinatorialCurve&) const = default;
};

/// Empty when the curve closes up, has no returning arcs and draws pairwise
/// disjoint chords sharing no side.
std::vector<std::string> curve_violations(const SurfaceComplex& complex,
                                          const CombinatorialCurve& curve);

/// Edges crossed by the curve, in order.
std::vector<int> crossed_edges(const SurfaceComplex& complex, const CombinatorialCurve& curve);

enum class CaseTag { kSinglePolygon, kTwoPolygons, kManyPolygons, kTorus };

std::string_view case_tag_name(CaseTag tag);
CaseTag case_for_face_count(int n);

/// Why the constructed curve is essential.
///   paired_sides:   one chord joining the two occurrences of one edge in a
///                   strictly convex polygon (n = 1).
///   distinct_sides: two polygons meeting the curve along two distinct edges
///                   (n >= 2); strictly convex lifts cannot share two sides.
struct EssentialEvidence {
  std::string kind;
  std::vector<int> edges;
  std::vector<int> faces;
  std::vector<SlotRef> slots;
};

struct Alpha {
  CombinatorialCurve curve;
  EssentialEvidence evidence;
};

/// The curve meeting at most two polygons, one arc in each.
Alpha build_alpha(const SurfaceComplex& complex);

CombinatorialCurve map_curve(const SurfaceComplex& complex, const CombinatorialCurve& curve,
                             const DeckAction& action);

/// Small loop around a vertex, cutting every corner there. Contractible.
CombinatorialCurve vertex_link_curve(const SurfaceComplex& complex, Vertex vertex);

/// Fewest transverse crossings over the representative pairs obtained by
/// drawing chords with endpoints inside sides and ordering the two crossing
/// points on every shared edge either way. Both curves must be simple;
/// throws std::invalid_argument otherwise.
int crossing_upper_bound(const SurfaceComplex& complex, const CombinatorialCurve& first,
                         const CombinatorialCurve& second);

struct Certificate {
  Instance instance;
  int generator = 1;
  CaseTag case_tag = CaseTag::kSinglePolygon;
  CombinatorialCurve alpha;
  CombinatorialCurve image;
  int crossing_bound = 0;
  bool disjoint = false;
  EssentialEvidence evidence;
  std::optional<double> holonomy_trace;
};

struct CertifyOptions {
  bool all_generators = true;
  bool with_geometry = false;
};

/// Raised when a certificate fails its own bound; this falsifies the
/// construction rather than the input.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One certificate per unit k of Z/N (or k = 1 only).
std::vector<Certificate> certify(const Instance& instance, const CertifyOptions& options = {});

}  // namespace turnover
