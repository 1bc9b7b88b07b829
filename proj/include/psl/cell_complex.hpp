#pragma once

// Cell complex of the Euclidean arrangement encoded by a wiring diagram,
// built by a single left-to-right sweep.
//
// Every wire is directed left to right. The left side of a directed wire is
// the region above it, so Edge::left_face is the face above the edge.
//
// Face ids are dense and assigned in sweep order: ids 0..n are the faces
// alive at x = -inf (gap 0 = above wire 1, ..., gap n = below wire n); the
// swap at step s opens face n + s. A face is bounded iff it is opened by a
// swap and closed by a later swap in the same gap.

#include <array>
#include <vector>

#include "psl/wiring.hpp"

namespace psl {

using FaceId = int;
using EdgeId = int;

struct Edge {
  WireId wire = 0;
  /// 0-based position along the wire; 0 and n-1 are the rays.
  int index = 0;
  /// Step of the left endpoint, 0 for -inf.
  int from_step = 0;
  /// Step of the right endpoint, num_steps + 1 for +inf.
  int to_step = 0;
  FaceId left_face = -1;   // above
  FaceId right_face = -1;  // below
  bool unbounded_left = false;
  bool unbounded_right = false;

  bool is_ray() const { return unbounded_left || unbounded_right; }
  FaceId other_face(FaceId f) const { return f == left_face ? right_face : left_face; }
};

struct Face {
  FaceId id = 0;
  bool bounded = false;
  /// Gap index: the face lies between the wires at positions gap and gap+1.
  int gap = 0;
  /// Opening step (0 for faces alive at -inf) and closing step
  /// (num_steps + 1 if the face reaches +inf).
  int open_step = 0;
  int close_step = 0;
  /// Counterclockwise boundary: lower chain left to right, then upper chain
  /// right to left. For unbounded faces the chain is open at infinity.
  std::vector<EdgeId> boundary;
  /// Wires lying above the face.
  WireMask wires_above = 0;

  int side_count() const { return static_cast<int>(boundary.size()); }
  bool is_above(WireId w) const { return (wires_above & wire_bit(w)) == 0; }
};

/// The four cells around a crossing.
struct Vertex {
  Crossing crossing;
  /// a-in, a-out, b-in, b-out (wire_a is on top before the swap).
  std::array<EdgeId, 4> edges{};
  /// closed face (left), opened face (right), face above, face below.
  std::array<FaceId, 4> faces{};
};

class CellComplex {
 public:
  explicit CellComplex(WiringDiagram diagram);

  const WiringDiagram& diagram() const { return diagram_; }
  int n() const { return diagram_.n(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const Face& face(FaceId f) const { return faces_[f]; }
  /// Vertex of the crossing at 1-based step s.
  const Vertex& vertex_at(int step) const { return vertices_[step - 1]; }

  /// Edges of wire w from left to right (n edges when n >= 1).
  const std::vector<EdgeId>& wire_edges(WireId w) const { return wire_edges_[w - 1]; }

  int num_bounded_faces() const { return num_bounded_; }
  std::vector<FaceId> bounded_faces() const;

  /// Wires that carry an edge of f.
  WireMask wires_of(FaceId f) const;

  /// Face whose wires_above mask equals `above`, or -1.
  FaceId face_with_sign(WireMask above) const;

 private:
  WiringDiagram diagram_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<std::vector<EdgeId>> wire_edges_;
  int num_bounded_ = 0;
};

inline CellComplex build_cell_complex(const WiringDiagram& d) { return CellComplex(d); }

/// Expected bounded-face count 1 + n(n-3)/2 (0 for n <= 2).
inline int expected_bounded_faces(int n) { return n >= 3 ? 1 + n * (n - 3) / 2 : 0; }

}  // namespace psl
