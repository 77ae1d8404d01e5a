#pragma once

#include <array>
#include <complex>
#include <vector>

#include "turnover/orbifold.hpp"
#include "turnover/surface_complex.hpp"

namespace turnover {

struct CombinatorialCurve;

namespace hyp {

using Point = std::complex<double>;  // upper half-plane unless noted

/// Element of SL(2, R) acting on the upper half-plane by Mobius maps.
struct IsometryMatrix {
  double a = 1, b = 0, c = 0, d = 1;

  static IsometryMatrix identity() { return {}; }
  Point apply(Point z) const { return (a * z + b) / (c * z + d); }
  IsometryMatrix operator*(const IsometryMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  IsometryMatrix inverse() const { return {d, -b, -c, a}; }
  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
};

/// max(|M - I|, |M + I|) entrywise, the distance to +-identity.
double distance_to_identity(const IsometryMatrix& m);

double distance(Point z, Point w);
/// Point at fraction t of the geodesic from z to w.
Point geodesic_point(Point z, Point w, double t);
/// Samples of the geodesic arc from z to w, endpoints included.
std::vector<Point> geodesic_samples(Point z, Point w, int segments);

Point to_disk(Point z);
Point from_disk(Point q);
/// Klein (projective) model coordinates of a disk point.
Point disk_to_klein(Point q);

/// Orientation-preserving isometry taking u to i and w onto the imaginary
/// axis above i.
IsometryMatrix standardize(Point u, Point w);
/// The orientation-preserving isometry with (u, w) -> (u2, w2); the pairs
/// must be at equal distance.
IsometryMatrix isometry_mapping(Point u, Point w, Point u2, Point w2);
/// Counterclockwise rotation by angle about z.
IsometryMatrix rotation_about(Point z, double angle);

/// Half of the orbifold: the triangle with angles pi/p1, pi/p2, pi/p3 at
/// x1, x2, x3.
struct TrianglePiece {
  std::array<double, 3> angles{};
  double side_x1x2 = 0;  // the arc beta
  double side_x2x3 = 0;
  double side_x3x1 = 0;
  double area = 0;
};

TrianglePiece solve_triangle(const ConeSignature& sig);

/// Largest residual of the angle form of the law of cosines over the three
/// sides, relative to the cosh value, evaluated in extended precision.
double law_of_cosines_residual(const TrianglePiece& tri);
/// Largest relative residual of the side-angle-side form.
double side_law_residual(const TrianglePiece& tri);

/// The reference polygon P centered at i (the disk origin). vertices[j] is
/// the corner between slot j - 1 and slot j; even corners are x1-type. Slot j
/// runs from vertices[j] to vertices[j + 1], counterclockwise.
struct PolygonGeometry {
  ConeSignature sig;
  Point center{0, 1};
  std::vector<Point> vertices;
  TrianglePiece triangle;

  int sides() const { return static_cast<int>(vertices.size()); }
  Point slot_x1_end(int slot) const;
  Point slot_x2_end(int slot) const;
  /// Point of the slot at fraction t from its x1-end.
  Point slot_point(int slot, double t) const;
  /// Interior angle at corner j.
  double interior_angle(int j) const;
  /// Gauss-Bonnet area of the polygon from its interior angles.
  double area() const;
};

PolygonGeometry build_reference_polygon(const ConeSignature& sig);

/// Rotations by 2 pi / p_i about x1, x2 and x3 of the reference triangle;
/// their product is -I.
std::array<IsometryMatrix, 3> rotation_generators(const ConeSignature& sig);

/// Isometry placing the neighbor of P across `slot`, given that the neighbor
/// meets it along its own slot `partner_slot`.
IsometryMatrix side_transition(const PolygonGeometry& poly, int slot, int partner_slot);

enum class HolonomyClass { kHyperbolic, kInconclusive, kElliptic };

inline constexpr double kTraceMargin = 1e-6;

HolonomyClass classify_holonomy(const IsometryMatrix& m);

struct DevelopedCurve {
  /// Placement of the polygon holding each segment.
  std::vector<IsometryMatrix> placements;
  /// Where the first polygon's copy lands after running once around.
  IsometryMatrix holonomy;
};

DevelopedCurve develop_curve(const SurfaceComplex& complex, const PolygonGeometry& poly,
                             const CombinatorialCurve& curve);

/// Transverse crossings of the geodesic chords of two curves, each chord
/// ending at fraction t (per curve) along its sides.
int geometric_crossings(const PolygonGeometry& poly,
                        const CombinatorialCurve& first, const CombinatorialCurve& second,
                        double t_first = 0.5, double t_second = 0.5);

}  // namespace hyp
}  // namespace turnover
