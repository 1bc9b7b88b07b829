#pragma once

// Canonical labeling of the vertex/edge/face incidence structure of a cell
// complex, unbounded cells included. Two diagrams receive equal certificates
// exactly when some dimension-preserving bijection of their cells preserves
// incidence. The labeling is found by colour refinement with
// individualization and backtracking; the certificate is the smallest
// relabeled incidence code over all leaves of the search tree.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "psl/cell_complex.hpp"

namespace psl {

struct IncidenceGraph {
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  /// Node ids: vertices [0, V), edges [V, V + E), faces [V + E, V + E + F).
  std::vector<std::vector<int>> adjacency;
  /// Initial colour per node: the dimension, optionally refined by a label.
  std::vector<int> color;

  int size() const { return static_cast<int>(adjacency.size()); }
};

/// Builds the incidence graph. With `edge_labels` (indexed by wire - 1),
/// every edge node is additionally coloured by the label of its wire, so
/// only label-preserving isomorphisms are admitted.
IncidenceGraph incidence_graph(const CellComplex& c, const std::vector<int>* edge_labels = nullptr);

struct CanonicalCertificate {
  std::vector<int> code;

  friend bool operator==(const CanonicalCertificate&, const CanonicalCertificate&) = default;
  friend auto operator<=>(const CanonicalCertificate&, const CanonicalCertificate&) = default;
};

struct CanonicalCertificateHash {
  std::size_t operator()(const CanonicalCertificate& c) const;
};

struct CanonicalLabeling {
  CanonicalCertificate certificate;
  /// order[i]: node of the input graph placed at canonical position i.
  std::vector<int> order;
};

CanonicalLabeling canonical_labeling(const IncidenceGraph& g);

CanonicalCertificate canonical_form(const CellComplex& c);
CanonicalCertificate canonical_form(const WiringDiagram& d);

/// Certificate equality, after a cheap invariant comparison.
bool isomorphic(const CellComplex& a, const CellComplex& b);
bool isomorphic(const WiringDiagram& a, const WiringDiagram& b);

/// An isomorphism as a wire correspondence: result[w - 1] is the wire of `b`
/// that wire w of `a` is sent to. nullopt when not isomorphic.
std::optional<std::vector<WireId>> isomorphism_wire_map(const CellComplex& a, const CellComplex& b);

/// Isomorphism that sends wire w of `a` to wire map[w - 1] of `b`.
bool isomorphic_with_wire_map(const CellComplex& a, const CellComplex& b, const std::vector<WireId>& map);

}  // namespace psl
