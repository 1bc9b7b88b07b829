#include <doctest.h>

#include <set>

#include "psl/analysis.hpp"
#include "psl/canonical.hpp"
#include "psl/enumeration.hpp"
#include "psl/necklace.hpp"
#include "psl/realizer.hpp"

using namespace psl;

namespace {

RealizerErrorKind error_kind(const WiringDiagram& d, const RealizerOptions& o = {}) {
  try {
    realize_im(d, o);
  } catch (const RealizerError& e) {
    return e.kind();
  }
  FAIL("no RealizerError");
  return RealizerErrorKind::InsertionFailed;
}

}  // namespace

TEST_SUITE("realizer") {
  TEST_CASE("frames of necklace arrangements") {
    for (int m = 4; m <= 7; ++m) {
      for (const SelfDualNecklace& c : enumerate_selfdual(m)) {
        INFO("necklace ", c.to_string());
        CellComplex cc(build_arrangement(c).diagram);
        RealizerFrame f = select_insertion_frame(cc);
        const int n = 2 * m;
        CHECK_FALSE(check_frame(f, n));
        CHECK(f.r <= f.t);
        CHECK(f.t <= f.k - 1);
        CHECK(static_cast<int>(f.h.size()) == f.k - f.r - 1);
        std::set<WireId> abc{f.a, f.b, f.c};
        CHECK(abc.size() == 3);
        CHECK(f.p == *find_unique_ge5(cc));
        for (FaceId tri : {f.tri_a, f.tri_b, f.tri_c}) CHECK(cc.face(tri).side_count() == 3);
        for (WireId w = 1; w <= n; ++w) {
          if (w == f.a || w == f.c) {
            CHECK(f.regions[w - 1].empty());
          } else {
            CHECK_FALSE(f.regions[w - 1].empty());
          }
        }
      }
    }
  }

  TEST_CASE("small Im classes go to the search") {
    for (int n = 5; n <= 6; ++n) {
      EnumerationOptions o;
      o.n = n;
      o.filter = Filter::Im;
      o.dedup = true;
      for (const WiringDiagram& d : enumerate_simple(o)) {
        Realization r = realize_im(d);
        CHECK(realizes(r.lines, d));
        REQUIRE(r.levels.size() == 1);
        CHECK(r.levels[0].base_case);
        CHECK(r.levels[0].base_case_attempts >= 1);
      }
    }
  }

  TEST_CASE("necklace arrangements round trip through every level") {
    for (int m = 3; m <= 5; ++m) {
      for (const SelfDualNecklace& c : enumerate_selfdual(m)) {
        INFO("necklace ", c.to_string());
        WiringDiagram d = build_arrangement(c).diagram;
        Realization r = realize_im(d);
        CHECK(realizes(r.lines, d));
        CHECK(isomorphic(lines_to_diagram(r.lines).diagram, d));
        REQUIRE_FALSE(r.levels.empty());
        CHECK(r.levels.front().base_case);
        CHECK(r.levels.back().diagram == d);
        for (const RealizerLevel& level : r.levels) {
          CHECK(realizes(level.lines, level.diagram));
          CHECK(is_in_im(CellComplex(level.diagram)).in_im);
          if (level.base_case) continue;
          CHECK(level.parameter_attempt >= 1);
          const auto& ps = level.slope_parameters;
          REQUIRE(ps.size() >= 2);
          CHECK(ps.front() == 0);
          CHECK(ps.back() == 1);
          for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
          CHECK(level.chosen_parameter > 0);
          CHECK(level.chosen_parameter < 1);
          for (const Rational& p : ps) CHECK(p != level.chosen_parameter);
        }
      }
    }
  }

  TEST_CASE("the seven-wire step of the recursion") {
    WiringDiagram d = build_arrangement(parse_necklace("00101101")).diagram;
    Realization r = realize_im(d);
    bool seen = false;
    for (const RealizerLevel& level : r.levels) {
      if (level.n != 7) continue;
      seen = true;
      CHECK(realizes(level.lines, level.diagram));
    }
    CHECK(seen);
  }

  TEST_CASE("seeds are reproducible") {
    WiringDiagram d = build_arrangement(parse_necklace("000111")).diagram;
    RealizerOptions o;
    o.seed = 42;
    CHECK(realize_im(d, o).lines.lines == realize_im(d, o).lines.lines);
  }

  TEST_CASE("errors") {
    CHECK(error_kind(WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3})) == RealizerErrorKind::NotInIm);
    EnumerationOptions o;
    o.n = 5;
    o.filter = Filter::Im;
    RealizerOptions tiny;
    tiny.base_case_budget = 0;
    CHECK(error_kind(enumerate_simple(o).front(), tiny) == RealizerErrorKind::BaseCaseExhausted);
    CHECK_THROWS_AS(select_insertion_frame(CellComplex(WiringDiagram::validate(3, {1, 2, 1}))), RealizerError);
  }

  TEST_CASE("frame selection is total on small Im diagrams") {
    EnumerationOptions o;
    o.n = 6;
    o.filter = Filter::Im;
    o.dedup = true;
    for (const WiringDiagram& d : enumerate_simple(o)) {
      CellComplex cc(d);
      try {
        RealizerFrame f = select_insertion_frame(cc);
        CHECK_FALSE(check_frame(f, 6));
      } catch (const RealizerError& e) {
        CHECK(e.kind() == RealizerErrorKind::NoConsecutiveTriple);
      }
    }
  }
}
