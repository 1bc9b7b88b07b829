#pragma once

// Stretching of arrangements in which every wire carries an edge of the
// unique (>=5)-gon P. Wires a, b, c with consecutive non-critical edges on P
// are chosen; b is removed, the rest is realized recursively and b is put
// back as a straight line d* through the crossing of a* and c* whose slope
// lies strictly between two consecutive slopes of the lines crossing both
// a and c on the far side, then d* is shifted slightly towards P. Small
// inputs are realized by a seeded random search over convex polygons whose
// edge lines are taken as the arrangement. Every returned arrangement is
// checked exactly against the input.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psl/cell_complex.hpp"
#include "psl/lines.hpp"

namespace psl {

/// Regions cut out by the directed wires a and c: R1 lies left of both,
/// R2 right of a and left of c, R3 right of both, R4 left of a and right
/// of c. P lies in R1.
enum class Region { R1 = 1, R2 = 2, R3 = 3, R4 = 4 };

struct RealizerFrame {
  FaceId p = -1;
  WireId a = 0, b = 0, c = 0;
  /// true when the wire is directed left to right (P lies above it).
  bool a_forward = true, b_forward = true, c_forward = true;
  /// 1-based crossing orders along the directed wires (index 0 unused).
  std::vector<WireId> a_order, b_order, c_order;
  int k = 0, t = 0, r = 0;
  std::vector<WireId> h;  // a_1 .. a_{k-r-1}
  FaceId tri_a = -1, tri_b = -1, tri_c = -1;
  /// Region sequence of every other wire along its sweep direction,
  /// indexed by wire - 1 (empty for a and c).
  std::vector<std::vector<Region>> regions;
};

enum class RealizerErrorKind { NotInIm, NoConsecutiveTriple, BaseCaseExhausted, FrameInvariant, InsertionFailed };

class RealizerError : public std::runtime_error {
 public:
  RealizerError(RealizerErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  RealizerErrorKind kind() const { return kind_; }

 private:
  RealizerErrorKind kind_;
};

/// Picks the first run of three consecutive non-critical edges of P in
/// counterclockwise boundary order and derives the frame. Throws
/// RealizerError(NotInIm | NoConsecutiveTriple | FrameInvariant).
RealizerFrame select_insertion_frame(const CellComplex& c);

/// Empty when the index ranges, both relabeling identities and the order of
/// H along c hold; otherwise the first failure.
std::optional<std::string> check_frame(const RealizerFrame& f, int n);

struct RealizerOptions {
  std::uint64_t seed = 1;
  /// Inputs with at most this many wires go straight to the search.
  int base_case_max_wires = 6;
  /// Random polygons tried per base case.
  int base_case_budget = 200000;
  int max_halvings = 64;
};

struct RealizerLevel {
  int n = 0;
  bool base_case = false;
  int base_case_attempts = 0;
  WireId a = 0, b = 0, c = 0;
  int k = 0, t = 0, r = 0;
  /// Slope parameters of a*, the lines of H in order, and c*, in the frame
  /// where a* has parameter 0 and c* has parameter 1; then the chosen one.
  std::vector<Rational> slope_parameters;
  Rational chosen_parameter;
  /// 1 when the midpoint of the bracketing pair worked.
  int parameter_attempt = 0;
  int halvings = 0;
  /// The diagram realized at this level and its lines (wire w as line w - 1).
  WiringDiagram diagram = WiringDiagram::validate(1, {});
  LineArrangement lines;
};

struct Realization {
  /// lines.lines[w - 1] realizes wire w of the input.
  LineArrangement lines;
  std::vector<RealizerLevel> levels;
};

/// Throws RealizerError(NotInIm | BaseCaseExhausted | FrameInvariant |
/// InsertionFailed).
Realization realize_im(const WiringDiagram& d, const RealizerOptions& options = {});

/// Exact check that the lines induce the diagram with line w - 1 as wire w.
bool realizes(const LineArrangement& lines, const WiringDiagram& d);

}  // namespace psl
