#pragma once

// Self-dual binary necklaces (2m beads, opposite beads of different colour,
// up to rotation and reflection) and the arrangement built from each one.
//
// Construction. The polygon is the zonogon with edge vectors
// v_0, ..., v_{m-1}, -v_0, ..., -v_{m-1} in counterclockwise order, where
// v_i = (1, s_i) for increasing slopes s_i, centred at the origin. Edge j
// runs from vertex p_j to p_{j+1} and line j supports it; bead j sits on
// edge j. For each opposite pair (i, i+m) line i+m is rotated about the
// midpoint of its edge by a slope change delta, so the two lines meet far
// away: towards +x (the direction of v_i) when bead i is 1, towards -x when
// bead i+m is 1. |delta| = epsilon starts at 1 and is halved until the
// result is verified.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psl/lines.hpp"
#include "psl/rational.hpp"
#include "psl/wiring.hpp"

namespace psl {

struct SelfDualNecklace {
  int m = 0;
  /// 2m beads, each 0 or 1, beads[i] != beads[i + m].
  std::vector<int> beads;

  std::string to_string() const;
  friend bool operator==(const SelfDualNecklace&, const SelfDualNecklace&) = default;
  friend auto operator<=>(const SelfDualNecklace&, const SelfDualNecklace&) = default;
};

/// Number of self-dual necklaces with 2m beads:
/// (2^floor((m-1)/2) + (1/2m) sum_{k | m, k odd} phi(k) 2^(m/k)) / 2.
BigInt q_formula(int m);

/// Euler's totient by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t k);

bool is_self_dual(const std::vector<int>& beads);

/// Lexicographic minimum over the 4m rotations and reflections.
std::vector<int> canonical_beads(const std::vector<int>& beads);

/// One canonical representative per orbit, sorted.
std::vector<SelfDualNecklace> enumerate_selfdual(int m);

/// Parses a bitstring such as "000111"; throws std::invalid_argument when
/// the length is odd or the string is not self-dual.
SelfDualNecklace parse_necklace(std::string_view bits);

struct ZonogonConstruction {
  std::vector<Rational> slopes;  // s_0 < ... < s_{m-1}
  std::vector<Point> vertices;   // p_0 .. p_{2m-1}
  Rational epsilon;
  std::vector<Rational> tilt;    // delta applied to line i + m
  int halvings = 0;
};

struct NecklaceArrangement {
  SelfDualNecklace necklace;
  ZonogonConstruction zonogon;
  LineArrangement lines;  // line j supports edge j of the zonogon
  WiringDiagram diagram;
  /// line_of_wire[w - 1]: line drawn as wire w of `diagram`.
  std::vector<int> line_of_wire;
};

struct NecklaceOptions {
  /// Direction slopes; empty selects 0, 1, ..., m-1.
  std::vector<Rational> slopes;
  int max_halvings = 64;
};

class EpsilonExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requires m >= 3. Throws EpsilonExhaustedError when no tested epsilon
/// gives a simple arrangement in Im whose (>=5)-gon has 2m edges and every
/// pair crossing on its prescribed side.
NecklaceArrangement build_arrangement(const SelfDualNecklace& c, const NecklaceOptions& options = {});

}  // namespace psl
