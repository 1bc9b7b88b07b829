#pragma once

// Exact planar drawing of a wiring diagram. The wire at position p is drawn
// at height n - p; the crossing of step s sits at x = s and each swap is a
// pair of diagonals spanning [s - 1/2, s + 1/2]. Wires continue as
// horizontal rays beyond their first and last polyline vertex.

#include <stdexcept>
#include <vector>

#include "psl/cell_complex.hpp"
#include "psl/rational.hpp"

namespace psl {

struct Polyline {
  std::vector<Point> vertices;
};

struct GridEmbedding {
  int n = 0;
  std::vector<Polyline> wires;  // wires[w - 1]
  std::vector<Point> witness;   // witness[face id], strictly inside the face

  /// Height of wire w at abscissa x.
  Rational height(WireId w, const Rational& x) const;
  /// Crossing point of the drawn wire at step s.
  Point crossing_point(const WiringDiagram& d, int step) const;
};

GridEmbedding grid_embedding(const CellComplex& c);

class OnBoundaryError : public std::invalid_argument {
 public:
  explicit OnBoundaryError(WireId w)
      : std::invalid_argument("point lies on wire " + std::to_string(w)), wire_(w) {}
  WireId wire() const { return wire_; }

 private:
  WireId wire_;
};

/// Face containing `point` under `emb`. Throws OnBoundaryError.
FaceId face_containing(const CellComplex& c, const Point& point, const GridEmbedding& emb);

/// Re-extracts the wiring diagram from the drawn polylines.
WiringDiagram extract_diagram(const GridEmbedding& emb);

}  // namespace psl
