#include <doctest.h>

#include "psl/analysis.hpp"
#include "psl/enumeration.hpp"
#include "psl/properties.hpp"

using namespace psl;

TEST_SUITE("properties") {
  TEST_CASE("every check holds up to five wires") {
    std::size_t region = 0, uncrossed = 0;
    bool single = false;
    for (int n = 1; n <= 5; ++n) {
      WordGenerator gen(n);
      while (gen.next()) {
        CellComplex c(WiringDiagram::validate(n, gen.word()));
        INFO("n=", n, " word=", format_swaps(c.diagram()));
        CHECK_FALSE(check_cell_structure(c));
        if (n >= 3) CHECK_FALSE(check_triangle_per_wire(c));
        CHECK_FALSE(check_critical_edge_bound(c));
        CHECK_FALSE(check_counting_theorem(c));
        CHECK_FALSE(check_im_structure(c));
        CHECK_FALSE(check_triangular_region_lemma(c, &region));
        CHECK_FALSE(check_uncrossed_edge_lemma(c, &uncrossed));
        CHECK_FALSE(check_no_adjacent_triangles(c));
        single = single || has_wire_with_single_triangle(c);
      }
    }
    CHECK(region > 0);
    CHECK(uncrossed == 0);
    MESSAGE("triangular-region instances: ", region, ", uncrossed-edge instances: ", uncrossed,
            ", single-triangle wire below six wires: ", single);
  }

  TEST_CASE("uncrossed-edge lemma on a sample of six-wire words") {
    std::size_t uncrossed = 0, index = 0;
    WordGenerator gen(6);
    while (gen.next()) {
      if (index++ % 50) continue;
      CellComplex c(WiringDiagram::validate(6, gen.word()));
      REQUIRE_FALSE(check_uncrossed_edge_lemma(c, &uncrossed));
    }
    CHECK(uncrossed > 0);
  }

  TEST_CASE("the triangle of three wires") {
    CellComplex c(WiringDiagram::validate(3, {1, 2, 1}));
    std::size_t region = 0;
    CHECK_FALSE(check_triangular_region_lemma(c, &region));
    CHECK(region == 3);
  }
}
