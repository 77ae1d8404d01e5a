#include "turnover/surface_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace turnover {

int SurfaceComplex::nu(int b) const {
  if (n_ == 1) return 0;
  return mod(std::int64_t{mod(b, n_)} * nu_scale_, n_);
}

SlotRef SurfaceComplex::partner(SlotRef ref) const {
  const Slot& s = slot(ref);
  return s.kind == SlotKind::kOut ? in_slot(s.edge) : out_slot(s.edge);
}

// <a1> is the subgroup of order p1, i.e. the multiples of N/p1; its cosets are
// indexed by b mod N/p1.
Vertex SurfaceComplex::x1_vertex(int edge) const {
  return {VertexType::kX1, mod(edge, x1_vertex_count())};
}

Vertex SurfaceComplex::x2_vertex(int edge) const {
  return {VertexType::kX2, mod(edge, x2_vertex_count())};
}

Vertex SurfaceComplex::slot_start(SlotRef ref) const {
  const Slot& s = slot(ref);
  return s.kind == SlotKind::kOut ? x1_vertex(s.edge) : x2_vertex(s.edge);
}

Vertex SurfaceComplex::slot_end(SlotRef ref) const {
  const Slot& s = slot(ref);
  return s.kind == SlotKind::kOut ? x2_vertex(s.edge) : x1_vertex(s.edge);
}

std::vector<std::string> SurfaceComplex::violations() const {
  std::vector<std::string> bad;
  const int N = edge_count();
  const int sides = sides_per_face();

  if (static_cast<int>(walks_.size()) != n_ || n_ * r() != N) bad.emplace_back("face_count");

  // Every edge occurs in exactly one out-slot and one in-slot.
  std::vector<int> outs(N, 0), ins(N, 0);
  for (int c = 0; c < static_cast<int>(walks_.size()); ++c) {
    const auto& w = walks_[c];
    if (static_cast<int>(w.size()) != sides) bad.emplace_back("walk_length");
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      const Slot& s = w[i];
      (s.kind == SlotKind::kOut ? outs : ins).at(s.edge)++;
      if ((s.kind == SlotKind::kOut) != (i % 2 == 0)) bad.emplace_back("walk_alternation");
    }
  }
  for (int b = 0; b < N; ++b) {
    if (outs[b] != 1 || ins[b] != 1) {
      bad.emplace_back("edge_multiplicity");
      break;
    }
  }
  if (!bad.empty()) return bad;

  // Lookup tables agree with the walks; labels differ by one across edges.
  for (int b = 0; b < N; ++b) {
    const SlotRef o = out_slot(b), i = in_slot(b);
    if (slot(o) != Slot{b, SlotKind::kOut} || slot(i) != Slot{b, SlotKind::kIn}) {
      bad.emplace_back("slot_lookup");
      break;
    }
    if (o.face != out_face(b) || i.face != in_face(b)) {
      bad.emplace_back("label_assignment");
      break;
    }
    if (mod(std::int64_t{i.face} - o.face, n_) != mod(1, n_)) {
      bad.emplace_back("label_law");
      break;
    }
    if (n_ >= 2 && o.face == i.face) {
      bad.emplace_back("self_glued_face");
      break;
    }
  }

  // Walks close up: each side ends where the next one starts.
  for (int c = 0; c < n_; ++c) {
    for (int i = 0; i < sides; ++i) {
      if (slot_end({c, i}) != slot_start({c, (i + 1) % sides})) {
        bad.emplace_back("walk_continuity");
        c = n_;
        break;
      }
    }
  }

  // Orientability: the two occurrences of an edge run in opposite directions.
  for (int b = 0; b < N; ++b) {
    const SlotRef o = out_slot(b), i = in_slot(b);
    if (slot_start(o) != slot_end(i) || slot_end(o) != slot_start(i)) {
      bad.emplace_back("orientation");
      break;
    }
  }

  // Connectivity of the face adjacency graph.
  {
    std::vector<char> seen(n_, 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!todo.empty()) {
      const int c = todo.front();
      todo.pop();
      for (int i = 0; i < sides; ++i) {
        const int d = partner({c, i}).face;
        if (!seen[d]) {
          seen[d] = 1;
          ++reached;
          todo.push(d);
        }
      }
    }
    if (reached != n_) bad.emplace_back("connectivity");
  }

  // Vertex links: rotating around a vertex through corners must close up after
  // exactly p1 (resp. p2) corners, and visit every corner once.
  {
    std::vector<std::vector<char>> visited(n_, std::vector<char>(sides, 0));
    std::vector<int> cycles_x1(x1_vertex_count(), 0), cycles_x2(x2_vertex_count(), 0);
    bool ok = true;
    for (int c = 0; c < n_ && ok; ++c) {
      for (int i = 0; i < sides && ok; ++i) {
        if (visited[c][i]) continue;
        const Vertex v = corner(c, i);
        int length = 0;
        SlotRef at{c, i};
        do {
          if (visited[at.face][at.index] || corner(at.face, at.index) != v) {
            ok = false;
            break;
          }
          visited[at.face][at.index] = 1;
          ++length;
          // Cross the side leaving this corner; the partner side ends at v.
          at = partner({at.face, (at.index + 1) % sides});
        } while (at != SlotRef{c, i});
        const int expected = v.type == VertexType::kX1 ? sig_.p[0] : sig_.p[1];
        if (!ok || length != expected) ok = false;
        (v.type == VertexType::kX1 ? cycles_x1 : cycles_x2).at(v.id)++;
      }
    }
    auto single = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; });
    };
    if (!ok || !single(cycles_x1) || !single(cycles_x2)) bad.emplace_back("vertex_link");
  }

  const auto inv = invariants(sig_, hom_);
  if (euler_characteristic() != inv.euler_char) bad.emplace_back("euler_characteristic");
  return bad;
}

SurfaceComplex build_complex(const ConeSignature& sig, const CyclicHom& hom) {
  SurfaceComplex cx;
  cx.sig_ = sig;
  cx.hom_ = hom;
  const int N = hom.order;
  const int r = sig.r();
  const int a2 = hom.images[1], a3 = hom.images[2];
  if (N % r != 0) throw ComplexError("build_complex: r does not divide N");
  cx.n_ = N / r;
  try {
    cx.nu_scale_ = inverse_mod(a2, cx.n_);
  } catch (const std::domain_error&) {
    throw ComplexError("build_complex: a2 does not generate Z/N mod <a3>");
  }

  cx.walks_.assign(cx.n_, {});
  cx.out_slot_.assign(N, {});
  cx.in_slot_.assign(N, {});
  for (int c = 0; c < cx.n_; ++c) {
    const int b0 = mod(std::int64_t{c} * a2, cx.n_);
    auto& w = cx.walks_[c];
    w.reserve(2 * r);
    for (int m = 0; m < r; ++m) {
      const int out = mod(b0 + std::int64_t{m} * a3, N);
      const int in = mod(std::int64_t{out} - a2, N);
      cx.out_slot_[out] = {c, static_cast<int>(w.size())};
      w.push_back({out, SlotKind::kOut});
      cx.in_slot_[in] = {c, static_cast<int>(w.size())};
      w.push_back({in, SlotKind::kIn});
    }
  }

  if (auto bad = cx.violations(); !bad.empty()) {
    std::ostringstream what;
    what << "build_complex: violated";
    for (const auto& b : bad) what << ' ' << b;
    throw ComplexError(what.str());
  }
  return cx;
}

Vertex DeckAction::vertex_map(Vertex v) const {
  const int cosets = v.type == VertexType::kX1 ? x1_cosets_ : x2_cosets_;
  return {v.type, mod(std::int64_t{v.id} + k_, cosets)};
}

SlotRef DeckAction::slot_map(const SurfaceComplex& complex, SlotRef ref) const {
  const Slot& s = complex.slot(ref);
  return complex.slot_of(edge_map(s.edge), s.kind);
}

int DeckAction::fixed_point_count(const SurfaceComplex& complex) const {
  int fixed = 0;
  for (int v = 0; v < complex.x1_vertex_count(); ++v) {
    if (vertex_map({VertexType::kX1, v}).id == v) ++fixed;
  }
  for (int v = 0; v < complex.x2_vertex_count(); ++v) {
    if (vertex_map({VertexType::kX2, v}).id == v) ++fixed;
  }
  for (int c = 0; c < complex.face_count(); ++c) {
    if (face_map(c) == c) ++fixed;
  }
  return fixed;
}

DeckAction deck_action(const SurfaceComplex& complex, int k) {
  const int N = complex.edge_count();
  if (std::gcd(mod(k, N), N) != 1) {
    throw std::invalid_argument("deck_action: k must be a unit mod N");
  }
  DeckAction action;
  action.k_ = mod(k, N);
  action.order_ = N;
  action.n_ = complex.face_count();
  action.face_shift_ = complex.nu(action.k_);
  action.x1_cosets_ = complex.x1_vertex_count();
  action.x2_cosets_ = complex.x2_vertex_count();
  return action;
}

bool walk_equivariant(const SurfaceComplex& complex, const DeckAction& action) {
  const int sides = complex.sides_per_face();
  for (int c = 0; c < complex.face_count(); ++c) {
    const auto& src = complex.walk(c);
    const auto& dst = complex.walk(action.face_map(c));
    std::vector<Slot> image;
    image.reserve(src.size());
    for (const Slot& s : src) image.push_back({action.edge_map(s.edge), s.kind});
    bool found = false;
    for (int shift = 0; shift < sides && !found; ++shift) {
      found = true;
      for (int i = 0; i < sides && found; ++i) found = image[i] == dst[(i + shift) % sides];
    }
    if (!found) return false;
  }
  return true;
}

namespace {

// Orbit sizes of i -> step(i) on {0, ..., count - 1}.
template <typename Step>
std::vector<int> orbit_sizes(int count, Step&& step) {
  std::vector<char> seen(count, 0);
  std::vector<int> sizes;
  for (int i = 0; i < count; ++i) {
    if (seen[i]) continue;
    int size = 0;
    for (int j = i; !seen[j]; j = step(j)) {
      seen[j] = 1;
      ++size;
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

bool quotient_check(const SurfaceComplex& complex, const DeckAction& action) {
  const int N = complex.edge_count();
  const auto faces = orbit_sizes(complex.face_count(), [&](int c) { return action.face_map(c); });
  const auto edges = orbit_sizes(N, [&](int b) { return action.edge_map(b); });
  const auto x1 = orbit_sizes(complex.x1_vertex_count(),
                              [&](int v) { return action.vertex_map({VertexType::kX1, v}).id; });
  const auto x2 = orbit_sizes(complex.x2_vertex_count(),
                              [&](int v) { return action.vertex_map({VertexType::kX2, v}).id; });
  if (faces.size() != 1 || edges.size() != 1 || x1.size() != 1 || x2.size() != 1) return false;
  // Stabilizer order = |G| / orbit size.
  const auto& p = complex.sig().p;
  return N / x1[0] == p[0] && N / x2[0] == p[1] && N / faces[0] == p[2] && edges[0] == N;
}

}  // namespace turnover
