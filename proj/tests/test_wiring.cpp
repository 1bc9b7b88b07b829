#include <doctest.h>

#include "oracles.hpp"
#include "psl/enumeration.hpp"
#include "psl/wiring.hpp"

using namespace psl;

TEST_SUITE("wiring") {
  TEST_CASE("three wires") {
    WiringDiagram d = WiringDiagram::validate(3, {1, 2, 1});
    CHECK(d.n() == 3);
    CHECK(d.num_steps() == 3);
    CHECK(d.crossing_at(1).wire_a == 1);
    CHECK(d.crossing_at(1).wire_b == 2);
    CHECK(d.crossing_at(2).wire_a == 1);
    CHECK(d.crossing_at(2).wire_b == 3);
    CHECK(d.crossing_at(3).wire_a == 2);
    CHECK(d.crossing_at(3).wire_b == 3);
    CHECK(d.crossing_step(3, 1) == 2);
    CHECK(d.local_sequence(1) == std::vector<WireId>{2, 3});
    CHECK(d.local_sequence(3) == std::vector<WireId>{1, 2});
    CHECK(d.wire_steps(2) == std::vector<int>{1, 3});
  }

  TEST_CASE("final order is reversed") {
    WiringDiagram d = WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3});
    CHECK(d.order_after(0) == std::vector<WireId>{1, 2, 3, 4});
    CHECK(d.order_after(2) == std::vector<WireId>{3, 1, 2, 4});
    CHECK(d.order_after(6) == std::vector<WireId>{4, 3, 2, 1});
  }

  TEST_CASE("validation errors") {
    try {
      WiringDiagram::validate(3, {1, 1, 2});
      FAIL("accepted a double crossing");
    } catch (const WiringError& e) {
      CHECK(e.kind() == WiringErrorKind::DoubleCross);
      CHECK(e.pair() == std::pair<WireId, WireId>{1, 2});
      CHECK(e.step() == 2);
    }
    try {
      WiringDiagram::validate(3, {1, 3, 1});
      FAIL("accepted track 3");
    } catch (const WiringError& e) {
      CHECK(e.kind() == WiringErrorKind::TrackOutOfRange);
      CHECK(e.step() == 2);
    }
    try {
      WiringDiagram::validate(3, {1, 2});
      FAIL("accepted a short word");
    } catch (const WiringError& e) {
      CHECK(e.kind() == WiringErrorKind::WrongLength);
    }
    for (int n : {0, kMaxWires + 1}) {
      try {
        WiringDiagram::validate(n, {});
        FAIL("accepted n");
      } catch (const WiringError& e) {
        CHECK(e.kind() == WiringErrorKind::InvalidWireCount);
      }
    }
    CHECK_NOTHROW(WiringDiagram::validate(1, {}));
  }

  TEST_CASE("text format") {
    WiringDiagram d = parse_wiring("4\n2 1 3 2 1 3\n");
    CHECK(d == WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3}));
    CHECK(format_wiring(d) == "4\n2 1 3 2 1 3\n");
    CHECK(format_swaps(d) == "2 1 3 2 1 3");
    CHECK(parse_wiring(format_wiring(d)) == d);
    CHECK(parse_wiring("1\n") == WiringDiagram::validate(1, {}));

    auto where = [](const char* text) {
      try {
        parse_wiring(text);
      } catch (const ParseError& e) {
        return std::pair<int, int>{e.line(), e.column()};
      }
      return std::pair<int, int>{0, 0};
    };
    CHECK(where("3\n1 x 1\n") == std::pair<int, int>{2, 3});
    CHECK(where("3\n1 4 1\n") == std::pair<int, int>{2, 3});
    CHECK(where("3\n1 1 2\n") == std::pair<int, int>{2, 3});
    CHECK(where("") == std::pair<int, int>{1, 1});
    CHECK(where("0\n\n").first == 1);
    CHECK(where("3 3\n1 2 1\n").first == 1);
    CHECK(where("3\n1 2\n").first == 2);
    CHECK(where("3\n1 2 1\n9\n").first == 3);
  }

  TEST_CASE("induced subarrangement") {
    WiringDiagram d = WiringDiagram::validate(4, {2, 1, 3, 2, 1, 3});
    InducedSubarrangement sub = induced_subarrangement(d, std::vector<WireId>{1, 3, 4});
    CHECK(sub.diagram == WiringDiagram::validate(3, {1, 2, 1}));
    CHECK(sub.parent_wire == std::vector<WireId>{1, 3, 4});
    CHECK(sub.sub_wire == std::vector<WireId>{1, 0, 2, 3});
    CHECK(sub.parent_step == std::vector<int>{0, 2, 4, 5});
    CHECK(sub.sub_step == std::vector<int>{0, 0, 1, 0, 2, 3, 0});

    InducedSubarrangement all = induced_subarrangement(d, WireMask{0b1111});
    CHECK(all.diagram == d);
    for (int s = 1; s <= 6; ++s) CHECK(all.sub_step[s] == s);

    InducedSubarrangement pair = induced_subarrangement(WiringDiagram::validate(3, {1, 2, 1}), std::vector<WireId>{1, 2});
    CHECK(pair.diagram == WiringDiagram::validate(2, {1}));

    CHECK_THROWS_AS(induced_subarrangement(d, WireMask{0}), EmptySubsetError);
  }

  TEST_CASE("induced subarrangements keep the crossing order along kept wires") {
    WordGenerator gen(5);
    while (gen.next()) {
      WiringDiagram d = WiringDiagram::validate(5, gen.word());
      for (WireMask keep = 1; keep < 32; ++keep) {
        InducedSubarrangement sub = induced_subarrangement(d, keep);
        for (WireId i = 1; i <= sub.diagram.n(); ++i) {
          std::vector<WireId> expected;
          for (WireId x : d.local_sequence(sub.parent_wire[i - 1])) {
            if (keep & wire_bit(x)) expected.push_back(sub.sub_wire[x - 1]);
          }
          REQUIRE(sub.diagram.local_sequence(i) == expected);
        }
      }
    }
  }

  TEST_CASE("mirrors and normal form") {
    WordGenerator gen(5);
    while (gen.next()) {
      WiringDiagram d = WiringDiagram::validate(5, gen.word());
      REQUIRE(mirror_top_bottom(mirror_top_bottom(d)) == d);
      REQUIRE(mirror_left_right(mirror_left_right(d)) == d);
      WiringDiagram nf = normal_form(d);
      REQUIRE(normal_form(nf) == nf);
      REQUIRE(nf.swaps() <= d.swaps());
      // Same labelled arrangement: identical crossing sequences.
      for (WireId w = 1; w <= 5; ++w) REQUIRE(nf.local_sequence(w) == d.local_sequence(w));
    }
    WiringDiagram a = WiringDiagram::validate(4, {3, 1, 2, 3, 1, 2});
    WiringDiagram b = WiringDiagram::validate(4, {1, 3, 2, 3, 1, 2});
    CHECK(normal_form(a) == normal_form(b));
    CHECK(normal_form(a) == WiringDiagram::validate(4, {1, 3, 2, 1, 3, 2}));
    CHECK(mirror_top_bottom(WiringDiagram::validate(4, {1, 2, 1, 3, 2, 1})).swaps() == std::vector<int>{3, 2, 3, 1, 2, 3});
  }

  TEST_CASE("local sequences match the oracle simulation") {
    WordGenerator gen(5);
    while (gen.next()) {
      WiringDiagram d = WiringDiagram::validate(5, gen.word());
      auto seq = oracle::local_sequences(5, gen.word());
      for (WireId w = 1; w <= 5; ++w) REQUIRE(d.local_sequence(w) == seq[w - 1]);
    }
  }
}
