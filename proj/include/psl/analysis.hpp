#pragma once

// Face statistics of a cell complex: census, critical edges, the unique
// (>=5)-gon, k-criticality, membership in the family of arrangements whose
// every wire touches that (>=5)-gon, and the triangle / quadrilateral counts
// predicted for arrangements with exactly one (>=5)-gon.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "psl/cell_complex.hpp"

namespace psl {

struct FaceCensus {
  /// side count -> number of bounded faces with that many sides
  std::map<int, int> tally;
  int total = 0;

  int count(int sides) const {
    auto it = tally.find(sides);
    return it == tally.end() ? 0 : it->second;
  }
  int count_at_least(int sides) const;
};

FaceCensus face_census(const CellComplex& c);

/// All bounded faces with at least five sides.
std::vector<FaceId> ge5_faces(const CellComplex& c);

enum class AnalysisErrorKind { NoGe5Gon, MultipleGe5Gons, UnboundedFace };

class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(AnalysisErrorKind kind, std::string message, std::vector<FaceId> faces = {})
      : std::runtime_error(std::move(message)), kind_(kind), faces_(std::move(faces)) {}
  AnalysisErrorKind kind() const { return kind_; }
  const std::vector<FaceId>& faces() const { return faces_; }

 private:
  AnalysisErrorKind kind_;
  std::vector<FaceId> faces_;
};

/// The unique bounded face with >= 5 sides, nullopt if there is none.
/// Throws AnalysisError(MultipleGe5Gons) listing every such face.
std::optional<FaceId> find_unique_ge5(const CellComplex& c);

struct EdgeFlag {
  EdgeId edge = -1;
  WireId wire = 0;
  bool critical = false;
};

/// Boundary edges of bounded face f in counterclockwise order, flagged when
/// the face across the edge is unbounded.
std::vector<EdgeFlag> critical_edges(const CellComplex& c, FaceId f);

struct CriticalityReport {
  FaceId face = -1;
  WireMask wires_of_p = 0;
  int k = 0;
  /// Edges of P in boundary order; `critical` refers to the subarrangement
  /// induced by the wires of P.
  std::vector<EdgeFlag> edges;

  std::vector<WireId> critical_wires() const;
};

/// Throws AnalysisError(NoGe5Gon | MultipleGe5Gons).
CriticalityReport criticality_k(const CellComplex& c);
CriticalityReport criticality_k(const WiringDiagram& d);

struct ImMembership {
  bool in_im = false;
  std::optional<FaceId> ge5_face;
  /// A wire without an edge on the (>=5)-gon, when there is a unique one.
  std::optional<WireId> missing_wire;
};

ImMembership is_in_im(const CellComplex& c);

struct TheoremReport {
  int n = 0;
  int k = 0;
  int p3 = 0;
  int p4 = 0;
  int expected_p3 = 0;
  int expected_p4 = 0;
  bool pass = false;
};

/// Compares the census with n - k triangles and k + n(n-5)/2 quadrilaterals.
/// Throws AnalysisError(NoGe5Gon | MultipleGe5Gons).
TheoremReport verify_counting_theorem(const CellComplex& c);

/// triangles[w - 1]: triangle faces with an edge on wire w.
std::vector<std::vector<FaceId>> triangle_adjacency(const CellComplex& c);

/// {n, k, census, pass, im, critical_edges} with a fixed key order.
nlohmann::ordered_json analysis_report(const CellComplex& c);

}  // namespace psl
