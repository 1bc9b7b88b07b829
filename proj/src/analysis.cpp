#include "psl/analysis.hpp"

#include <algorithm>
#include <bit>

namespace psl {

int FaceCensus::count_at_least(int sides) const {
  int total_at_least = 0;
  for (auto [s, cnt] : tally) {
    if (s >= sides) total_at_least += cnt;
  }
  return total_at_least;
}

FaceCensus face_census(const CellComplex& c) {
  FaceCensus census;
  for (const Face& f : c.faces()) {
    if (!f.bounded) continue;
    ++census.tally[f.side_count()];
    ++census.total;
  }
  return census;
}

std::vector<FaceId> ge5_faces(const CellComplex& c) {
  std::vector<FaceId> out;
  for (const Face& f : c.faces()) {
    if (f.bounded && f.side_count() >= 5) out.push_back(f.id);
  }
  return out;
}

std::optional<FaceId> find_unique_ge5(const CellComplex& c) {
  auto faces = ge5_faces(c);
  if (faces.empty()) return std::nullopt;
  if (faces.size() > 1) {
    std::string ids;
    for (FaceId f : faces) ids += (ids.empty() ? "" : ", ") + std::to_string(f);
    throw AnalysisError(AnalysisErrorKind::MultipleGe5Gons, "several (>=5)-gons: faces " + ids, faces);
  }
  return faces.front();
}

std::vector<EdgeFlag> critical_edges(const CellComplex& c, FaceId f) {
  const Face& face = c.face(f);
  if (!face.bounded) {
    throw AnalysisError(AnalysisErrorKind::UnboundedFace, "face " + std::to_string(f) + " is unbounded", {f});
  }
  std::vector<EdgeFlag> flags;
  flags.reserve(face.boundary.size());
  for (EdgeId e : face.boundary) {
    const Edge& edge = c.edge(e);
    flags.push_back({e, edge.wire, !c.face(edge.other_face(f)).bounded});
  }
  return flags;
}

std::vector<WireId> CriticalityReport::critical_wires() const {
  std::vector<WireId> out;
  for (const EdgeFlag& f : edges) {
    if (f.critical) out.push_back(f.wire);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

FaceId require_unique_ge5(const CellComplex& c) {
  auto p = find_unique_ge5(c);
  if (!p) throw AnalysisError(AnalysisErrorKind::NoGe5Gon, "arrangement has no (>=5)-gon");
  return *p;
}

}  // namespace

CriticalityReport criticality_k(const CellComplex& c) {
  CriticalityReport report;
  report.face = require_unique_ge5(c);
  report.wires_of_p = c.wires_of(report.face);

  const InducedSubarrangement sub = induced_subarrangement(c.diagram(), report.wires_of_p);
  const CellComplex subc(sub.diagram);
  const int sub_steps = sub.diagram.num_steps();
  const int steps = c.diagram().num_steps();

  auto parent_of = [&](int sub_step) {
    if (sub_step == 0) return 0;
    if (sub_step == sub_steps + 1) return steps + 1;
    return sub.parent_step[sub_step];
  };

  FaceId containing = -1;
  for (EdgeId e : c.face(report.face).boundary) {
    const Edge& edge = c.edge(e);
    WireId sw = sub.sub_wire[edge.wire - 1];
    // Sub-edge on the same wire whose crossing span contains the edge.
    EdgeId hat = -1;
    for (EdgeId se : subc.wire_edges(sw)) {
      const Edge& sedge = subc.edge(se);
      if (parent_of(sedge.from_step) <= edge.from_step && edge.to_step <= parent_of(sedge.to_step)) {
        hat = se;
        break;
      }
    }
    if (hat < 0) throw std::logic_error("edge of P has no super-edge in the induced subarrangement");
    const Edge& sedge = subc.edge(hat);
    bool p_above = edge.left_face == report.face;
    FaceId inner = p_above ? sedge.left_face : sedge.right_face;
    FaceId outer = p_above ? sedge.right_face : sedge.left_face;
    if (containing < 0) containing = inner;
    if (inner != containing) throw std::logic_error("edges of P map into different faces of the subarrangement");
    bool critical = !subc.face(outer).bounded;
    report.edges.push_back({e, edge.wire, critical});
    if (critical) ++report.k;
  }
  return report;
}

CriticalityReport criticality_k(const WiringDiagram& d) { return criticality_k(CellComplex(d)); }

ImMembership is_in_im(const CellComplex& c) {
  ImMembership out;
  std::optional<FaceId> p;
  try {
    p = find_unique_ge5(c);
  } catch (const AnalysisError&) {
    return out;
  }
  if (!p) return out;
  out.ge5_face = p;
  WireMask on_p = c.wires_of(*p);
  for (WireId w = 1; w <= c.n(); ++w) {
    if (!(on_p & wire_bit(w))) {
      out.missing_wire = w;
      return out;
    }
  }
  out.in_im = true;
  return out;
}

TheoremReport verify_counting_theorem(const CellComplex& c) {
  CriticalityReport crit = criticality_k(c);
  FaceCensus census = face_census(c);
  TheoremReport r;
  r.n = c.n();
  r.k = crit.k;
  r.p3 = census.count(3);
  r.p4 = census.count(4);
  r.expected_p3 = r.n - r.k;
  r.expected_p4 = r.k + r.n * (r.n - 5) / 2;
  r.pass = r.p3 == r.expected_p3 && r.p4 == r.expected_p4;
  return r;
}

std::vector<std::vector<FaceId>> triangle_adjacency(const CellComplex& c) {
  std::vector<std::vector<FaceId>> out(c.n());
  for (const Face& f : c.faces()) {
    if (!f.bounded || f.side_count() != 3) continue;
    for (EdgeId e : f.boundary) out[c.edge(e).wire - 1].push_back(f.id);
  }
  return out;
}

nlohmann::ordered_json analysis_report(const CellComplex& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n();
  FaceCensus census = face_census(c);
  std::optional<CriticalityReport> crit;
  bool multiple = false;
  try {
    if (find_unique_ge5(c)) crit = criticality_k(c);
  } catch (const AnalysisError&) {
    multiple = true;
  }
  j["k"] = crit ? nlohmann::ordered_json(crit->k) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json cj = nlohmann::ordered_json::object();
  for (auto [sides, cnt] : census.tally) cj[std::to_string(sides)] = cnt;
  j["census"] = cj;
  if (crit) {
    j["pass"] = census.count(3) == c.n() - crit->k && census.count(4) == crit->k + c.n() * (c.n() - 5) / 2;
  } else {
    j["pass"] = nullptr;
  }
  j["im"] = !multiple && is_in_im(c).in_im;
  j["critical_edges"] = crit ? nlohmann::ordered_json(crit->critical_wires()) : nlohmann::ordered_json::array();
  return j;
}

}  // namespace psl
