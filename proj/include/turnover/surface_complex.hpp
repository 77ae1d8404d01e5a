#pragma once

#include <string>
#include <vector>

#include "turnover/orbifold.hpp"

namespace turnover {

/// Which side of a lifted edge a polygon sees. An out-slot is traversed from
/// its x1-end to its x2-end by the face boundary walk, an in-slot the other
/// way round.
enum class SlotKind { kOut, kIn };

struct Slot {
  int edge = 0;
  SlotKind kind = SlotKind::kOut;

  bool operator==(const Slot&) const = default;
};

/// Position of a side in a face's boundary walk.
struct SlotRef {
  int face = 0;
  int index = 0;

  bool operator==(const SlotRef&) const = default;
  auto operator<=>(const SlotRef&) const = default;
};

enum class VertexType { kX1, kX2 };

struct Vertex {
  VertexType type = VertexType::kX1;
  int id = 0;

  bool operator==(const Vertex&) const = default;
};

/// Cell structure of the cover S: n polygons with 2r sides each, N edges
/// (lifts of the arc from x1 to x2), N/p1 + N/p2 vertices.
///
/// Edges are residues b in Z/N. Face c collects the edges b with nu(b) = c,
/// where nu: Z/N -> Z/n kills <a3> and sends a2 to 1. The walk of face c is
///   out(b0), in(b0 - a2), out(b0 + a3), in(b0 + a3 - a2), ...
/// with b0 the smallest edge of label c.
class SurfaceComplex {
 public:
  const ConeSignature& sig() const { return sig_; }
  const CyclicHom& hom() const { return hom_; }
  int face_count() const { return n_; }
  int edge_count() const { return hom_.order; }
  int r() const { return sig_.r(); }
  int sides_per_face() const { return 2 * sig_.r(); }
  int x1_vertex_count() const { return hom_.order / sig_.p[0]; }
  int x2_vertex_count() const { return hom_.order / sig_.p[1]; }

  /// Face label of the edge: nu(b).
  int nu(int b) const;
  int out_face(int edge) const { return nu(edge); }
  int in_face(int edge) const { return n_ == 1 ? 0 : (nu(edge) + 1) % n_; }

  const std::vector<Slot>& walk(int face) const { return walks_.at(face); }
  const Slot& slot(SlotRef ref) const { return walks_.at(ref.face).at(ref.index); }
  SlotRef out_slot(int edge) const { return out_slot_.at(edge); }
  SlotRef in_slot(int edge) const { return in_slot_.at(edge); }
  SlotRef slot_of(int edge, SlotKind kind) const {
    return kind == SlotKind::kOut ? out_slot(edge) : in_slot(edge);
  }
  /// The other occurrence of the same edge.
  SlotRef partner(SlotRef ref) const;

  Vertex x1_vertex(int edge) const;
  Vertex x2_vertex(int edge) const;
  Vertex slot_start(SlotRef ref) const;
  Vertex slot_end(SlotRef ref) const;
  /// Vertex at the corner between slot index and index + 1.
  Vertex corner(int face, int index) const { return slot_end({face, index}); }

  int euler_characteristic() const {
    return x1_vertex_count() + x2_vertex_count() - edge_count() + face_count();
  }

  /// Names of violated structural laws; empty for a well-formed complex.
  std::vector<std::string> violations() const;

 private:
  friend SurfaceComplex build_complex(const ConeSignature&, const CyclicHom&);

  ConeSignature sig_;
  CyclicHom hom_;
  int n_ = 1;
  int nu_scale_ = 0;
  std::vector<std::vector<Slot>> walks_;
  std::vector<SlotRef> out_slot_;
  std::vector<SlotRef> in_slot_;
};

/// Thrown when a built complex breaks one of its structural laws.
class ComplexError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

SurfaceComplex build_complex(const ConeSignature& sig, const CyclicHom& hom);

/// The deck transformation f^k acting on the complex.
class DeckAction {
 public:
  int k() const { return k_; }
  int face_shift() const { return face_shift_; }
  int edge_map(int edge) const { return mod(std::int64_t{edge} + k_, order_); }
  int face_map(int face) const { return n_ == 1 ? 0 : (face + face_shift_) % n_; }
  Vertex vertex_map(Vertex v) const;
  SlotRef slot_map(const SurfaceComplex& complex, SlotRef ref) const;

  /// Vertices and face centers fixed by the action.
  int fixed_point_count(const SurfaceComplex& complex) const;

 private:
  friend DeckAction deck_action(const SurfaceComplex&, int);

  int k_ = 1;
  int order_ = 1;
  int n_ = 1;
  int face_shift_ = 0;
  int x1_cosets_ = 1;
  int x2_cosets_ = 1;
};

/// Requires gcd(k, N) = 1; throws std::invalid_argument otherwise.
DeckAction deck_action(const SurfaceComplex& complex, int k);

/// True iff walk(face_map(c)) is the slot-wise image of walk(c) up to rotation
/// for every face.
bool walk_equivariant(const SurfaceComplex& complex, const DeckAction& action);

/// Recovers the turnover from the action: one orbit each of faces and edges,
/// one orbit of each vertex type with stabilizers of order p1 and p2, and face
/// centers stabilized by a group of order r.
bool quotient_check(const SurfaceComplex& complex, const DeckAction& action);

}  // namespace turnover
