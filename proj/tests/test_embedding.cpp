#include <doctest.h>

#include "psl/embedding.hpp"
#include "psl/enumeration.hpp"
#include "psl/lines.hpp"

using namespace psl;

TEST_SUITE("embedding") {
  TEST_CASE("two wires") {
    CellComplex c(WiringDiagram::validate(2, {1}));
    GridEmbedding emb = grid_embedding(c);
    CHECK(emb.wires.size() == 2);
    CHECK(c.num_bounded_faces() == 0);
    CHECK(emb.crossing_point(c.diagram(), 1) == Point{1, Rational(1, 2)});
    CHECK(extract_diagram(emb) == c.diagram());
  }

  TEST_CASE("witnesses, round trip and edge sides up to five wires") {
    for (int n = 1; n <= 5; ++n) {
      WordGenerator gen(n);
      while (gen.next()) {
        CellComplex c(WiringDiagram::validate(n, gen.word()));
        GridEmbedding emb = grid_embedding(c);
        REQUIRE(extract_diagram(emb) == c.diagram());
        for (const Face& f : c.faces()) REQUIRE(face_containing(c, emb.witness[f.id], emb) == f.id);
        for (const Edge& e : c.edges()) {
          if (e.is_ray()) continue;
          Point a = emb.crossing_point(c.diagram(), e.from_step);
          Point b = emb.crossing_point(c.diagram(), e.to_step);
          Rational x = (a.x + b.x) / 2;
          Rational y = emb.height(e.wire, x);
          Rational off(1, 8);
          REQUIRE(face_containing(c, {x, Rational(y + off)}, emb) == e.left_face);
          REQUIRE(face_containing(c, {x, Rational(y - off)}, emb) == e.right_face);
        }
      }
    }
  }

  TEST_CASE("far points and boundary points") {
    CellComplex c(WiringDiagram::validate(3, {1, 2, 1}));
    GridEmbedding emb = grid_embedding(c);
    CHECK(face_containing(c, {Rational(2), Rational(100)}, emb) == c.face_with_sign(0));
    FaceId tri = c.bounded_faces().front();
    CHECK(face_containing(c, emb.witness[tri], emb) == tri);
    Point on_wire = emb.crossing_point(c.diagram(), 2);
    on_wire.x += Rational(1, 4);
    on_wire.y = emb.height(1, on_wire.x);
    try {
      face_containing(c, on_wire, emb);
      FAIL("point on a wire accepted");
    } catch (const OnBoundaryError& e) {
      CHECK((e.wire() == 1 || e.wire() == 3));
    }
  }

  TEST_CASE("straightened embedding of the four-wire diagram") {
    // Straight lines with the crossing order of the drawn polylines.
    WiringDiagram d = WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3});
    LineArrangement la{{{-3, -1}, {-2, -2}, {-1, 0}, {0, -1}}};
    CHECK(lines_to_diagram(la).diagram == d);
    CHECK(extract_diagram(grid_embedding(CellComplex(d))) == d);
  }
}
