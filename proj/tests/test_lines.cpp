#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "psl/canonical.hpp"
#include "psl/lines.hpp"

using namespace psl;

namespace {

LineErrorKind error_kind(const LineArrangement& la) {
  try {
    lines_to_diagram(la);
  } catch (const LineError& e) {
    return e.kind();
  }
  FAIL("no LineError");
  return LineErrorKind::Empty;
}

}  // namespace

TEST_SUITE("lines") {
  TEST_CASE("three lines") {
    // y = 0, y = x, y = -x + 1 cross at x = 0, 1/2, 1.
    LineArrangement la{{{0, 0}, {1, 0}, {-1, 1}}};
    LinesDiagram ld = lines_to_diagram(la);
    CHECK(ld.diagram == WiringDiagram::validate(3, {2, 1, 2}));
    CHECK(ld.line_of_wire == std::vector<int>{2, 0, 1});
    CHECK(ld.wire_of_line == std::vector<WireId>{2, 3, 1});
    CHECK(intersection(la.lines[1], la.lines[2]) == Point{Rational(1, 2), Rational(1, 2)});
  }

  TEST_CASE("four lines give the four-wire class") {
    LineArrangement la{{{-3, -1}, {-2, -2}, {-1, 0}, {0, -1}}};
    WiringDiagram d = lines_to_diagram(la).diagram;
    CHECK(d == WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3}));
    CHECK(isomorphic(d, WiringDiagram::validate(4, {1, 2, 1, 3, 2, 1})));
  }

  TEST_CASE("degenerate input") {
    CHECK(error_kind({{{1, 0}, {1, 2}}}) == LineErrorKind::DuplicateSlope);
    CHECK(error_kind({{{0, 0}, {1, 0}, {-1, 0}}}) == LineErrorKind::ConcurrentLines);
    CHECK(error_kind({}) == LineErrorKind::Empty);
  }

  TEST_CASE("json") {
    LineArrangement la{{{Rational(1, 3), Rational(-2)}, {Rational(5), Rational(7, 4)}}};
    nlohmann::ordered_json j = lines_to_json(la);
    CHECK(j.dump() == R"([{"slope":"1/3","intercept":"-2/1"},{"slope":"5/1","intercept":"7/4"}])");
    LineArrangement back = lines_from_json(j);
    CHECK(back.lines == la.lines);
    nlohmann::ordered_json wrapped;
    wrapped["lines"] = j;
    CHECK(lines_from_json(wrapped).lines == la.lines);
    CHECK(lines_from_json(nlohmann::ordered_json::parse(R"([{"slope":2,"intercept":"3"}])")).lines ==
          std::vector<Line>{{2, 3}});
    CHECK_THROWS_AS(lines_from_json(nlohmann::ordered_json::parse(R"({"x":1})")), std::invalid_argument);
    CHECK_THROWS_AS(lines_from_json(nlohmann::ordered_json::parse(R"([{"slope":1.5,"intercept":0}])")),
                    std::invalid_argument);
    CHECK_THROWS_AS(lines_from_json(nlohmann::ordered_json::parse(R"([{"slope":"1/0","intercept":0}])")),
                    std::invalid_argument);
  }

  TEST_CASE("random arrangements match the face oracle") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-40, 40);
    int tested = 0;
    while (tested < 200) {
      const int n = 3 + tested % 6;
      LineArrangement la;
      for (int i = 0; i < n; ++i) la.lines.push_back({Rational(coef(rng), 3), Rational(coef(rng))});
      std::optional<LinesDiagram> built;
      try {
        built = lines_to_diagram(la);
      } catch (const LineError&) {
        continue;
      }
      ++tested;
      const LinesDiagram& ld = *built;
      CellComplex c(ld.diagram);
      std::vector<oracle::GeoLine> geo;
      for (const Line& l : la.lines) geo.push_back({l.slope, l.intercept});
      auto faces = oracle::line_faces(geo);
      REQUIRE(faces.size() == c.faces().size());
      for (const oracle::GeoFace& g : faces) {
        WireMask above = 0;
        for (int i = 0; i < n; ++i) {
          if (g.above[i]) above |= wire_bit(ld.wire_of_line[i]);
        }
        FaceId f = c.face_with_sign(above);
        REQUIRE(f >= 0);
        REQUIRE(c.face(f).side_count() == g.sides);
        REQUIRE(c.face(f).bounded == g.bounded);
      }
    }
  }
}
