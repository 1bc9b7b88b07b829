#pragma once

// Per-diagram structural checks used by the exhaustive sweeps. Each check
// returns std::nullopt when the property holds and a short description of
// the first violation otherwise. Checks whose hypothesis does not apply to
// the diagram (for example the Im structure checks on a diagram outside Im)
// hold vacuously.

#include <cstddef>
#include <optional>
#include <string>

#include "psl/cell_complex.hpp"

namespace psl {

using Violation = std::optional<std::string>;

/// Bounded-face count, Euler relation V - E + F = 1 (rays counted as edges,
/// no vertex at infinity), twin consistency, closed boundary cycles.
Violation check_cell_structure(const CellComplex& c);

/// Triangles = n - k and quadrilaterals = k + n(n-5)/2 when there is exactly
/// one (>=5)-gon.
Violation check_counting_theorem(const CellComplex& c);

/// Every wire carries an edge of some triangle (n >= 3).
Violation check_triangle_per_wire(const CellComplex& c);

/// Some wire carries an edge of exactly one triangle.
bool has_wire_with_single_triangle(const CellComplex& c);

/// Bounded faces with >= 4 sides have at most two critical edges.
Violation check_critical_edge_bound(const CellComplex& c);

/// For arrangements in Im: P is an n-gon, every non-critical edge of P is an
/// edge of a triangle, every triangle shares an edge with P, p3 = n - k.
Violation check_im_structure(const CellComplex& c);

/// Triangular region T of wires p, q, r whose edge on r is crossed by no
/// wire: p and q each carry an edge of a triangle contained in T.
/// `applied`, when given, is incremented once per region meeting the
/// hypothesis.
Violation check_triangular_region_lemma(const CellComplex& c, std::size_t* applied = nullptr);

/// (>=5)-gon Q of a subarrangement with an edge w crossed by no wire: each
/// edge of Q next to w contains an edge of a (>=5)-gon of the full
/// arrangement lying inside Q. `applied` counts (Q, w) pairs whose induced
/// wire set is a proper subset.
Violation check_uncrossed_edge_lemma(const CellComplex& c, std::size_t* applied = nullptr);

/// No bounded edge separates two triangles.
Violation check_no_adjacent_triangles(const CellComplex& c);

}  // namespace psl
