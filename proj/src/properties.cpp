#include "psl/properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "psl/analysis.hpp"

namespace psl {

namespace {

std::string face_str(FaceId f) { return "face " + std::to_string(f); }

bool share_vertex(const CellComplex& c, const Edge& e1, const Edge& e2) {
  if (e1.wire == e2.wire) return false;
  int s = c.diagram().crossing_step(e1.wire, e2.wire);
  bool on1 = (!e1.unbounded_left && e1.from_step == s) || (!e1.unbounded_right && e1.to_step == s);
  bool on2 = (!e2.unbounded_left && e2.from_step == s) || (!e2.unbounded_right && e2.to_step == s);
  return on1 && on2;
}

/// positions[(s * n) + (w - 1)]: 1-based position of w after s swaps.
std::vector<int> position_table(const WiringDiagram& d) {
  const int n = d.n();
  std::vector<int> table(static_cast<std::size_t>(d.num_steps() + 1) * n);
  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);
  for (int s = 0; s <= d.num_steps(); ++s) {
    if (s > 0) {
      int t = d.swaps()[s - 1];
      std::swap(order[t - 1], order[t]);
    }
    for (int p = 0; p < n; ++p) table[static_cast<std::size_t>(s) * n + (order[p] - 1)] = p + 1;
  }
  return table;
}

/// True when the crossings of wire x with y and z are consecutive along x.
bool consecutive_on(const WiringDiagram& d, WireId x, int step1, int step2) {
  const auto& steps = d.wire_steps(x);
  auto i = std::find(steps.begin(), steps.end(), step1) - steps.begin();
  auto j = std::find(steps.begin(), steps.end(), step2) - steps.begin();
  return std::abs(i - j) == 1;
}

}  // namespace

Violation check_cell_structure(const CellComplex& c) {
  const int n = c.n();
  if (c.num_bounded_faces() != expected_bounded_faces(n)) {
    return "bounded faces " + std::to_string(c.num_bounded_faces()) + " != " +
           std::to_string(expected_bounded_faces(n));
  }
  long v = static_cast<long>(c.vertices().size());
  long e = static_cast<long>(c.edges().size());
  long f = static_cast<long>(c.faces().size());
  if (v - e + f != 1) return "V - E + F = " + std::to_string(v - e + f);
  if (v != full_length(n)) return "vertex count " + std::to_string(v);

  for (WireId w = 1; w <= n; ++w) {
    if (static_cast<int>(c.wire_edges(w).size()) != n) {
      return "wire " + std::to_string(w) + " carries " + std::to_string(c.wire_edges(w).size()) + " edges";
    }
  }

  std::size_t incidences = 0;
  for (const Face& face : c.faces()) {
    incidences += face.boundary.size();
    bool has_ray = false;
    for (EdgeId id : face.boundary) {
      const Edge& edge = c.edge(id);
      if (edge.left_face != face.id && edge.right_face != face.id) {
        return face_str(face.id) + " lists edge " + std::to_string(id) + " that does not bound it";
      }
      has_ray = has_ray || edge.is_ray();
    }
    if (face.bounded == has_ray) return face_str(face.id) + ": bounded flag disagrees with rays";
    if (face.bounded) {
      if (face.side_count() < 3) return face_str(face.id) + " has fewer than 3 sides";
      const auto& b = face.boundary;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (!share_vertex(c, c.edge(b[i]), c.edge(b[(i + 1) % b.size()]))) {
          return face_str(face.id) + ": boundary is not a closed cycle";
        }
      }
    }
  }
  for (const Edge& edge : c.edges()) {
    if (edge.left_face == edge.right_face) return "edge with the same face on both sides";
    for (FaceId side : {edge.left_face, edge.right_face}) {
      const auto& b = c.face(side).boundary;
      if (std::count_if(b.begin(), b.end(), [&](EdgeId id) { return &c.edge(id) == &edge; }) != 1) {
        return face_str(side) + " does not list its edge exactly once";
      }
    }
  }
  if (incidences != 2 * c.edges().size()) return "edge-face incidence count mismatch";
  return std::nullopt;
}

Violation check_counting_theorem(const CellComplex& c) {
  if (ge5_faces(c).size() != 1) return std::nullopt;
  TheoremReport r = verify_counting_theorem(c);
  if (r.pass) return std::nullopt;
  return "k = " + std::to_string(r.k) + ": (p3, p4) = (" + std::to_string(r.p3) + ", " + std::to_string(r.p4) +
         "), expected (" + std::to_string(r.expected_p3) + ", " + std::to_string(r.expected_p4) + ")";
}

Violation check_triangle_per_wire(const CellComplex& c) {
  if (c.n() < 3) return std::nullopt;
  auto adj = triangle_adjacency(c);
  for (WireId w = 1; w <= c.n(); ++w) {
    if (adj[w - 1].empty()) return "wire " + std::to_string(w) + " touches no triangle";
  }
  return std::nullopt;
}

bool has_wire_with_single_triangle(const CellComplex& c) {
  auto adj = triangle_adjacency(c);
  return std::any_of(adj.begin(), adj.end(), [](const auto& list) { return list.size() == 1; });
}

Violation check_critical_edge_bound(const CellComplex& c) {
  for (const Face& f : c.faces()) {
    if (!f.bounded || f.side_count() < 4) continue;
    auto flags = critical_edges(c, f.id);
    auto crit = std::count_if(flags.begin(), flags.end(), [](const EdgeFlag& e) { return e.critical; });
    if (crit > 2) return face_str(f.id) + " (" + std::to_string(f.side_count()) + " sides) has " +
                         std::to_string(crit) + " critical edges";
  }
  return std::nullopt;
}

Violation check_im_structure(const CellComplex& c) {
  ImMembership im = is_in_im(c);
  if (!im.in_im) return std::nullopt;
  const Face& p = c.face(*im.ge5_face);
  if (p.side_count() != c.n()) return "(>=5)-gon has " + std::to_string(p.side_count()) + " sides, not n";

  int direct_k = 0;
  for (const EdgeFlag& flag : critical_edges(c, p.id)) {
    if (flag.critical) {
      ++direct_k;
      continue;
    }
    const Face& across = c.face(c.edge(flag.edge).other_face(p.id));
    if (across.side_count() != 3) {
      return "non-critical edge on wire " + std::to_string(flag.wire) + " borders a " +
             std::to_string(across.side_count()) + "-gon";
    }
  }
  int triangles = 0;
  for (const Face& t : c.faces()) {
    if (!t.bounded || t.side_count() != 3) continue;
    ++triangles;
    bool shares = std::any_of(t.boundary.begin(), t.boundary.end(),
                              [&](EdgeId e) { return c.edge(e).other_face(t.id) == p.id; });
    if (!shares) return "triangle " + face_str(t.id) + " shares no edge with the (>=5)-gon";
  }
  int k = criticality_k(c).k;
  if (k != direct_k) return "induced criticality differs from direct count";
  if (triangles != c.n() - k) return "p3 = " + std::to_string(triangles) + " != n - k";
  return std::nullopt;
}

Violation check_triangular_region_lemma(const CellComplex& c, std::size_t* applied) {
  const WiringDiagram& d = c.diagram();
  const int n = c.n();
  if (n < 3) return std::nullopt;
  const std::vector<int> pos = position_table(d);
  std::vector<FaceId> triangles;
  for (const Face& f : c.faces()) {
    if (f.bounded && f.side_count() == 3) triangles.push_back(f.id);
  }

  for (WireId w1 = 1; w1 <= n; ++w1) {
    for (WireId w2 = w1 + 1; w2 <= n; ++w2) {
      for (WireId w3 = w2 + 1; w3 <= n; ++w3) {
        const std::array<WireId, 3> tri{w1, w2, w3};
        // Side of the region T w.r.t. each wire u: the crossing of the
        // other two lies on T's side of u.
        WireMask region_below = 0;  // wires having T below them
        for (int i = 0; i < 3; ++i) {
          WireId u = tri[i], v = tri[(i + 1) % 3], w = tri[(i + 2) % 3];
          int s = d.crossing_step(v, w);
          int pos_u = pos[static_cast<std::size_t>(s - 1) * n + (u - 1)];
          if (pos_u < d.crossing_at(s).track) region_below |= wire_bit(u);
        }
        const WireMask tri_mask = wire_bit(w1) | wire_bit(w2) | wire_bit(w3);
        auto inside = [&](const Face& f) { return (f.wires_above & tri_mask) == region_below; };

        for (int i = 0; i < 3; ++i) {
          WireId r = tri[i], p = tri[(i + 1) % 3], q = tri[(i + 2) % 3];
          if (!consecutive_on(d, r, d.crossing_step(r, p), d.crossing_step(r, q))) continue;
          if (applied) ++*applied;
          for (WireId ell : {p, q}) {
            bool found = std::any_of(triangles.begin(), triangles.end(), [&](FaceId t) {
              const Face& f = c.face(t);
              if (!inside(f)) return false;
              return std::any_of(f.boundary.begin(), f.boundary.end(),
                                 [&](EdgeId e) { return c.edge(e).wire == ell; });
            });
            if (!found) {
              return "region (" + std::to_string(p) + ", " + std::to_string(q) + ", " + std::to_string(r) +
                     "): wire " + std::to_string(ell) + " has no triangle inside";
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

Violation check_uncrossed_edge_lemma(const CellComplex& c, std::size_t* applied) {
  const WiringDiagram& d = c.diagram();
  const int n = c.n();
  if (n < 5) return std::nullopt;
  const std::vector<FaceId> big = ge5_faces(c);
  const WireMask all = n == kMaxWires ? ~WireMask{0} : (WireMask{1} << n) - 1;

  for (WireMask m = 1; m <= all; ++m) {
    if (std::popcount(m) < 5) continue;
    const InducedSubarrangement sub = induced_subarrangement(d, m);
    const CellComplex subc(sub.diagram);
    const int sub_steps = sub.diagram.num_steps();
    auto parent_step = [&](int s) { return s == 0 || s > sub_steps ? -1 : sub.parent_step[s]; };

    for (const Face& q : subc.faces()) {
      if (!q.bounded || q.side_count() < 5) continue;
      WireMask q_above = 0;
      for (WireId sw = 1; sw <= sub.diagram.n(); ++sw) {
        if (q.wires_above & wire_bit(sw)) q_above |= wire_bit(sub.parent_wire[sw - 1]);
      }
      const auto& b = q.boundary;
      const std::size_t len = b.size();
      for (std::size_t i = 0; i < len; ++i) {
        const Edge& w = subc.edge(b[i]);
        WireId x = sub.parent_wire[w.wire - 1];
        if (!consecutive_on(d, x, parent_step(w.from_step), parent_step(w.to_step))) continue;
        if (applied && m != all) ++*applied;
        for (std::size_t j : {(i + len - 1) % len, (i + 1) % len}) {
          const Edge& adj = subc.edge(b[j]);
          WireId y = sub.parent_wire[adj.wire - 1];
          int lo = parent_step(adj.from_step), hi = parent_step(adj.to_step);
          bool found = std::any_of(big.begin(), big.end(), [&](FaceId fid) {
            const Face& f = c.face(fid);
            if ((f.wires_above & m) != q_above) return false;
            return std::any_of(f.boundary.begin(), f.boundary.end(), [&](EdgeId e) {
              const Edge& edge = c.edge(e);
              return edge.wire == y && edge.from_step >= lo && edge.to_step <= hi;
            });
          });
          if (!found) {
            return "subarrangement face with " + std::to_string(q.side_count()) + " sides: edge on wire " +
                   std::to_string(y) + " next to uncrossed edge on wire " + std::to_string(x) +
                   " holds no (>=5)-gon edge";
          }
        }
      }
    }
  }
  return std::nullopt;
}

Violation check_no_adjacent_triangles(const CellComplex& c) {
  for (const Edge& e : c.edges()) {
    if (e.is_ray()) continue;
    const Face& l = c.face(e.left_face);
    const Face& r = c.face(e.right_face);
    if (l.bounded && r.bounded && l.side_count() == 3 && r.side_count() == 3) {
      return "triangles " + std::to_string(l.id) + " and " + std::to_string(r.id) + " share an edge";
    }
  }
  return std::nullopt;
}

}  // namespace psl
