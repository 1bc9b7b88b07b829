#pragma once

// Straight-line arrangements with exact rational coefficients and their
// conversion to wiring diagrams by a left-to-right sweep.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "psl/rational.hpp"
#include "psl/wiring.hpp"

namespace psl {

/// y = slope * x + intercept
struct Line {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return slope * x + intercept; }
  friend bool operator==(const Line& a, const Line& b) { return a.slope == b.slope && a.intercept == b.intercept; }
};

struct LineArrangement {
  std::vector<Line> lines;

  int size() const { return static_cast<int>(lines.size()); }
};

/// Intersection of two non-parallel lines.
Point intersection(const Line& a, const Line& b);

enum class LineErrorKind { DuplicateSlope, ConcurrentLines, Empty };

class LineError : public std::invalid_argument {
 public:
  LineError(LineErrorKind kind, const std::string& message) : std::invalid_argument(message), kind_(kind) {}
  LineErrorKind kind() const { return kind_; }

 private:
  LineErrorKind kind_;
};

struct LinesDiagram {
  WiringDiagram diagram;
  /// line_of_wire[w - 1]: index into LineArrangement::lines drawn as wire w.
  std::vector<int> line_of_wire;
  /// wire_of_line[i]: wire carrying line i.
  std::vector<WireId> wire_of_line;
};

/// Far to the left the lines are ordered top to bottom by increasing slope;
/// wire w is the w-th line in that order. Crossings are swept by increasing
/// x (ties broken top first). Throws LineError.
LinesDiagram lines_to_diagram(const LineArrangement& la);

/// [{"slope": "p/q", "intercept": "p/q"}, ...]
nlohmann::ordered_json lines_to_json(const LineArrangement& la);
/// Accepts the format written by lines_to_json, or an object with a
/// "lines" member in that format.
LineArrangement lines_from_json(const nlohmann::ordered_json& j);

}  // namespace psl
