#include "turnover/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "turnover/curve.hpp"

namespace turnover::hyp {
namespace {

constexpr Point kI{0, 1};
constexpr double kPi = std::numbers::pi;

// Rotation about i by -2 phi.
IsometryMatrix rotation_at_i(double phi) {
  return {std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)};
}

// Affine map z -> (z - x) / y taking u = x + iy to i.
IsometryMatrix move_to_i(Point u) {
  const double s = std::sqrt(u.imag());
  return {1 / s, -u.real() / s, 0, s};
}

// Direction at i of the geodesic towards z.
double direction_from_i(Point z) { return std::arg(to_disk(z)) + kPi / 2; }

double wrap_angle(double a) {
  a = std::fmod(a, 2 * kPi);
  return a < 0 ? a + 2 * kPi : a;
}

double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

// cosh of the side opposite angle z, from the three angles.
long double cosh_opposite(long double x, long double y, long double z) {
  return (std::cos(x) * std::cos(y) + std::cos(z)) / (std::sin(x) * std::sin(y));
}

// Side transitions have entries of size e^side, so long products lose about
// that many digits; they are formed and composed in extended precision.
struct WideMatrix {
  long double a = 1, b = 0, c = 0, d = 1;

  WideMatrix operator*(const WideMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  WideMatrix inverse() const { return {d, -b, -c, a}; }
  IsometryMatrix narrow() const {
    return {static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
            static_cast<double>(d)};
  }
};

// Rotation by `angle` about i e^t.
WideMatrix wide_rotation(long double t, long double angle) {
  const long double s = std::exp(t / 2), c = std::cos(angle / 2), n = std::sin(angle / 2);
  return {c, n * s * s, -n / (s * s), c};
}

// Slot `partner_slot` of P onto slot `slot`, x1-end to x1-end. Built from
// rotations about the center and about vertex 1, not fitted to vertices.
WideMatrix wide_side_transition(const PolygonGeometry& poly, int slot, int partner_slot) {
  if (slot % 2 == partner_slot % 2) {
    throw std::invalid_argument("side_transition: paired slots must have opposite parity");
  }
  if (slot % 2 == 1) return wide_side_transition(poly, partner_slot, slot).inverse();
  const auto& p = poly.sig.p;
  const long double pi = std::numbers::pi_v<long double>;
  const long double A = pi / p[0], B = pi / p[1], C = pi / p[2];
  const long double d2 = std::acosh(cosh_opposite(B, C, A));
  const long double click = pi / p[2];
  // Slot 1 onto slot 0, turning about their shared x2-corner.
  const WideMatrix fold = wide_rotation(0, click) * wide_rotation(d2, 2 * B) * wide_rotation(0, -click);
  return wide_rotation(0, slot * click) * fold * wide_rotation(0, -(partner_slot - 1) * click);
}

}  // namespace

double distance_to_identity(const IsometryMatrix& m) {
  auto dist = [&](double s) {
    return std::max({std::abs(m.a - s), std::abs(m.b), std::abs(m.c), std::abs(m.d - s)});
  };
  return std::min(dist(1), dist(-1));
}

double distance(Point z, Point w) {
  return std::acosh(1 + std::norm(z - w) / (2 * z.imag() * w.imag()));
}

Point geodesic_point(Point z, Point w, double t) {
  const IsometryMatrix g = standardize(z, w);
  return g.inverse().apply(kI * std::exp(t * distance(z, w)));
}

std::vector<Point> geodesic_samples(Point z, Point w, int segments) {
  const IsometryMatrix inv = standardize(z, w).inverse();
  const double d = distance(z, w);
  std::vector<Point> out;
  out.reserve(segments + 1);
  for (int s = 0; s <= segments; ++s) out.push_back(inv.apply(kI * std::exp(d * s / segments)));
  out.front() = z;
  out.back() = w;
  return out;
}

Point to_disk(Point z) { return (z - kI) / (z + kI); }
Point from_disk(Point q) { return kI * (1.0 + q) / (1.0 - q); }
Point disk_to_klein(Point q) { return 2.0 * q / (1.0 + std::norm(q)); }

IsometryMatrix standardize(Point u, Point w) {
  const IsometryMatrix g1 = move_to_i(u);
  const Point w1 = g1.apply(w);
  return rotation_at_i(std::arg(to_disk(w1)) / 2) * g1;
}

IsometryMatrix isometry_mapping(Point u, Point w, Point u2, Point w2) {
  return standardize(u2, w2).inverse() * standardize(u, w);
}

IsometryMatrix rotation_about(Point z, double angle) {
  const IsometryMatrix g = move_to_i(z);
  return g.inverse() * rotation_at_i(-angle / 2) * g;
}

TrianglePiece solve_triangle(const ConeSignature& sig) {
  // Extended precision so that each side is the correctly rounded double.
  const long double pi = std::numbers::pi_v<long double>;
  const long double A = pi / sig.p[0], B = pi / sig.p[1], C = pi / sig.p[2];
  TrianglePiece tri;
  tri.angles = {static_cast<double>(A), static_cast<double>(B), static_cast<double>(C)};
  tri.side_x1x2 = static_cast<double>(std::acosh(cosh_opposite(A, B, C)));
  tri.side_x2x3 = static_cast<double>(std::acosh(cosh_opposite(B, C, A)));
  tri.side_x3x1 = static_cast<double>(std::acosh(cosh_opposite(A, C, B)));
  tri.area = static_cast<double>(pi - (A + B + C));
  return tri;
}

double law_of_cosines_residual(const TrianglePiece& tri) {
  // Angles are recovered as pi / p exactly when p is an integer order.
  const long double pi = std::numbers::pi_v<long double>;
  std::array<long double, 3> ang{};
  for (int i = 0; i < 3; ++i) ang[i] = pi / std::round(pi / tri.angles[i]);
  const auto [A, B, C] = ang;
  // Relative: half an ulp of a side of length 8 already moves cosh by
  // about 1e-12 in absolute terms.
  auto gap = [](double side, long double x, long double y, long double z) {
    const long double want = cosh_opposite(x, y, z);
    return static_cast<double>(std::abs(std::cosh(static_cast<long double>(side)) - want) / want);
  };
  return std::max({gap(tri.side_x1x2, A, B, C), gap(tri.side_x2x3, B, C, A), gap(tri.side_x3x1, A, C, B)});
}

double side_law_residual(const TrianglePiece& tri) {
  const auto [A, B, C] = tri.angles;
  const double c = tri.side_x1x2, a = tri.side_x2x3, b = tri.side_x3x1;
  // Side-angle-side form, relative to the cosh it reproduces.
  auto rel = [](double side, double x, double y, double angle) {
    const double rhs = std::cosh(x) * std::cosh(y) - std::sinh(x) * std::sinh(y) * std::cos(angle);
    return std::abs(std::cosh(side) - rhs) / std::cosh(side);
  };
  return std::max({rel(c, a, b, C), rel(a, b, c, A), rel(b, a, c, B)});
}

Point PolygonGeometry::slot_x1_end(int slot) const {
  const int k = sides();
  return slot % 2 == 0 ? vertices[slot] : vertices[(slot + 1) % k];
}

Point PolygonGeometry::slot_x2_end(int slot) const {
  const int k = sides();
  return slot % 2 == 0 ? vertices[(slot + 1) % k] : vertices[slot];
}

Point PolygonGeometry::slot_point(int slot, double t) const {
  return geodesic_point(slot_x1_end(slot), slot_x2_end(slot), t);
}

double PolygonGeometry::interior_angle(int j) const {
  const int k = sides();
  const IsometryMatrix g = standardize(vertices[j], vertices[(j + 1) % k]);
  const double next = kPi / 2;
  const double prev = direction_from_i(g.apply(vertices[(j + k - 1) % k]));
  return wrap_angle(prev - next);
}

double PolygonGeometry::area() const {
  double angles = 0;
  for (int j = 0; j < sides(); ++j) angles += interior_angle(j);
  return (sides() - 2) * kPi - angles;
}

PolygonGeometry build_reference_polygon(const ConeSignature& sig) {
  PolygonGeometry poly;
  poly.sig = sig;
  poly.triangle = solve_triangle(sig);
  const int r = sig.r();
  const double rho_x1 = std::tanh(poly.triangle.side_x3x1 / 2);
  const double rho_x2 = std::tanh(poly.triangle.side_x2x3 / 2);
  poly.vertices.reserve(2 * r);
  for (int j = 0; j < 2 * r; ++j) {
    const double rho = j % 2 == 0 ? rho_x1 : rho_x2;
    poly.vertices.push_back(from_disk(std::polar(rho, j * kPi / r)));
  }
  return poly;
}

std::array<IsometryMatrix, 3> rotation_generators(const ConeSignature& sig) {
  // Vertex 0 is i e^{d1}; vertex 1 is i e^{d2} turned by pi/r about i.
  const long double pi = std::numbers::pi_v<long double>;
  const long double A = pi / sig.p[0], B = pi / sig.p[1], C = pi / sig.p[2];
  const long double d1 = std::acosh(cosh_opposite(A, C, B));
  const long double d2 = std::acosh(cosh_opposite(B, C, A));
  const WideMatrix m2 = wide_rotation(0, C) * wide_rotation(d2, 2 * B) * wide_rotation(0, -C);
  return {wide_rotation(d1, 2 * A).narrow(), m2.narrow(), wide_rotation(0, 2 * C).narrow()};
}

IsometryMatrix side_transition(const PolygonGeometry& poly, int slot, int partner_slot) {
  const WideMatrix m = wide_side_transition(poly, slot, partner_slot);
  return {static_cast<double>(m.a), static_cast<double>(m.b), static_cast<double>(m.c),
          static_cast<double>(m.d)};
}

HolonomyClass classify_holonomy(const IsometryMatrix& m) {
  const double t = std::abs(m.trace());
  if (t > 2 + kTraceMargin) return HolonomyClass::kHyperbolic;
  if (t < 2 - kTraceMargin) return HolonomyClass::kElliptic;
  return HolonomyClass::kInconclusive;
}

DevelopedCurve develop_curve(const SurfaceComplex& complex, const PolygonGeometry& poly,
                             const CombinatorialCurve& curve) {
  DevelopedCurve out;
  WideMatrix placement;
  const auto& segs = curve.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    out.placements.push_back(placement.narrow());
    const SlotRef exit{segs[i].face, segs[i].exit_slot};
    const SlotRef across = complex.partner(exit);
    placement = placement * wide_side_transition(poly, exit.index, across.index);
  }
  out.holonomy = placement.narrow();
  return out;
}

int geometric_crossings(const PolygonGeometry& poly,
                        const CombinatorialCurve& first, const CombinatorialCurve& second,
                        double t_first, double t_second) {
  auto chord = [&](const CurveSegment& s, double t) {
    return std::pair{disk_to_klein(to_disk(poly.slot_point(s.entry_slot, t))),
                     disk_to_klein(to_disk(poly.slot_point(s.exit_slot, t)))};
  };
  constexpr double kEps = 1e-12;
  int crossings = 0;
  for (const auto& s1 : first.segments) {
    for (const auto& s2 : second.segments) {
      if (s1.face != s2.face) continue;
      // Geodesics are straight in the Klein model.
      const auto [p, q] = chord(s1, t_first);
      const auto [u, v] = chord(s2, t_second);
      const double d1 = cross(q - p, u - p), d2 = cross(q - p, v - p);
      const double d3 = cross(v - u, p - u), d4 = cross(v - u, q - u);
      if (((d1 > kEps && d2 < -kEps) || (d1 < -kEps && d2 > kEps)) &&
          ((d3 > kEps && d4 < -kEps) || (d3 < -kEps && d4 > kEps))) {
        ++crossings;
      }
    }
  }
  return crossings;
}

}  // namespace turnover::hyp
