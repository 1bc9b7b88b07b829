#include <doctest.h>

#include "psl/necklace.hpp"
#include "psl/svg.hpp"

using namespace psl;

namespace {

int occurrences(const std::string& s, const std::string& needle) {
  int count = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++count;
  return count;
}

}  // namespace

TEST_SUITE("svg") {
  TEST_CASE("grid drawing") {
    CellComplex c(WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3}));
    std::string svg = render_grid_svg(c);
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(occurrences(svg, "<polygon") == 3);
    CHECK(occurrences(svg, "<polyline") == 4);
    CHECK(occurrences(svg, face_fill(3)) == 2);
    CHECK(occurrences(svg, face_fill(4)) == 1);
    CHECK(render_grid_svg(c) == svg);
  }

  TEST_CASE("line drawing") {
    NecklaceArrangement a = build_arrangement(parse_necklace("000111"));
    CellComplex c(a.diagram);
    std::string svg = render_lines_svg(c, a.lines, a.line_of_wire);
    CHECK(occurrences(svg, "<line ") == 6);
    CHECK(occurrences(svg, "<polygon") == c.num_bounded_faces());
    CHECK(occurrences(svg, face_fill(6)) == 1);
  }

  TEST_CASE("fills") {
    CHECK(std::string(face_fill(3)) != face_fill(4));
    CHECK(std::string(face_fill(5)) != face_fill(6));
    CHECK(std::string(face_fill(7)) == face_fill(6));
  }
}
