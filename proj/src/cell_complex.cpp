#include "psl/cell_complex.hpp"

#include <algorithm>
#include <numeric>

namespace psl {

CellComplex::CellComplex(WiringDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.n();
  const int steps = diagram_.num_steps();

  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);

  faces_.reserve(n + 1 + steps);
  std::vector<FaceId> gap_face(n + 1);
  WireMask above = 0;
  for (int g = 0; g <= n; ++g) {
    if (g > 0) above |= wire_bit(g);
    Face f;
    f.id = g;
    f.gap = g;
    f.open_step = 0;
    f.close_step = steps + 1;
    f.wires_above = above;
    faces_.push_back(f);
    gap_face[g] = g;
  }

  std::vector<std::vector<EdgeId>> lower(n + 1 + steps), upper(n + 1 + steps);
  wire_edges_.assign(n, {});
  std::vector<EdgeId> current(n, -1);

  auto open_edge = [&](WireId w, int position, int step) {
    Edge e;
    e.wire = w;
    e.index = static_cast<int>(wire_edges_[w - 1].size());
    e.from_step = step;
    e.unbounded_left = step == 0;
    e.left_face = gap_face[position - 1];
    e.right_face = gap_face[position];
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    wire_edges_[w - 1].push_back(id);
    lower[e.left_face].push_back(id);
    upper[e.right_face].push_back(id);
    current[w - 1] = id;
    return id;
  };

  for (int p = 1; p <= n; ++p) open_edge(order[p - 1], p, 0);

  vertices_.reserve(steps);
  for (const Crossing& c : diagram_.crossings()) {
    const int t = c.track;
    const int s = c.step;
    WireId a = order[t - 1];
    WireId b = order[t];

    Vertex v;
    v.crossing = c;
    v.edges[0] = current[a - 1];
    v.edges[2] = current[b - 1];
    edges_[current[a - 1]].to_step = s;
    edges_[current[b - 1]].to_step = s;

    FaceId closed = gap_face[t];
    faces_[closed].close_step = s;
    if (faces_[closed].open_step > 0) {
      faces_[closed].bounded = true;
      ++num_bounded_;
    }

    std::swap(order[t - 1], order[t]);
    Face opened;
    opened.id = static_cast<FaceId>(faces_.size());
    opened.gap = t;
    opened.open_step = s;
    opened.close_step = steps + 1;
    opened.wires_above = 0;
    for (int p = 0; p < t; ++p) opened.wires_above |= wire_bit(order[p]);
    faces_.push_back(opened);
    gap_face[t] = opened.id;

    v.faces = {closed, opened.id, gap_face[t - 1], gap_face[t + 1]};
    v.edges[3] = open_edge(b, t, s);
    v.edges[1] = open_edge(a, t + 1, s);
    vertices_.push_back(v);
  }

  for (EdgeId e : current) {
    edges_[e].to_step = steps + 1;
    edges_[e].unbounded_right = true;
  }

  for (Face& f : faces_) {
    f.boundary = lower[f.id];
    f.boundary.insert(f.boundary.end(), upper[f.id].rbegin(), upper[f.id].rend());
  }
}

std::vector<FaceId> CellComplex::bounded_faces() const {
  std::vector<FaceId> out;
  out.reserve(num_bounded_);
  for (const Face& f : faces_) {
    if (f.bounded) out.push_back(f.id);
  }
  return out;
}

WireMask CellComplex::wires_of(FaceId f) const {
  WireMask m = 0;
  for (EdgeId e : faces_[f].boundary) m |= wire_bit(edges_[e].wire);
  return m;
}

FaceId CellComplex::face_with_sign(WireMask above) const {
  for (const Face& f : faces_) {
    if (f.wires_above == above) return f.id;
  }
  return -1;
}

}  // namespace psl
