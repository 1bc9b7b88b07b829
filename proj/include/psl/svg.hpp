#pragma once

// SVG drawings of arrangements. Bounded faces are filled by side count
// (triangles, quadrilaterals, pentagons, larger), wires are drawn on top.

#include <string>

#include "psl/cell_complex.hpp"
#include "psl/lines.hpp"

namespace psl {

/// Wiring-diagram drawing from the grid embedding.
std::string render_grid_svg(const CellComplex& c);

/// Straight-line drawing. `c` must be the complex of
/// lines_to_diagram(lines).diagram and `line_of_wire` its wire mapping.
std::string render_lines_svg(const CellComplex& c, const LineArrangement& lines, const std::vector<int>& line_of_wire);

const char* face_fill(int sides);

}  // namespace psl
