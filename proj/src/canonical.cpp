#include "psl/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace psl {

IncidenceGraph incidence_graph(const CellComplex& c, const std::vector<int>* edge_labels) {
  IncidenceGraph g;
  g.num_vertices = static_cast<int>(c.vertices().size());
  g.num_edges = static_cast<int>(c.edges().size());
  g.num_faces = static_cast<int>(c.faces().size());
  const int e0 = g.num_vertices;
  const int f0 = g.num_vertices + g.num_edges;
  g.adjacency.assign(f0 + g.num_faces, {});
  g.color.assign(g.adjacency.size(), 0);

  auto link = [&](int u, int v) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  };
  for (int v = 0; v < g.num_vertices; ++v) {
    for (EdgeId e : c.vertices()[v].edges) link(v, e0 + e);
  }
  for (int e = 0; e < g.num_edges; ++e) {
    const Edge& edge = c.edge(e);
    link(e0 + e, f0 + edge.left_face);
    link(e0 + e, f0 + edge.right_face);
    g.color[e0 + e] = 1;
    if (edge_labels) g.color[e0 + e] = 3 + (*edge_labels)[edge.wire - 1];
  }
  for (int f = 0; f < g.num_faces; ++f) g.color[f0 + f] = 2;
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::size_t CanonicalCertificateHash::operator()(const CanonicalCertificate& c) const {
  std::size_t h = c.code.size();
  for (int x : c.code) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

namespace {

/// Replaces colours by their ranks among distinct values; returns the
/// number of distinct colours.
int rank_colors(std::vector<int>& colors) {
  std::vector<int> values = colors;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (int& c : colors) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  return static_cast<int>(values.size());
}

/// Colour refinement to the coarsest equitable partition finer than
/// `colors`. New colours are ranks of (old colour, sorted neighbour colours),
/// which keeps the result invariant under relabeling of the nodes.
void refine(const IncidenceGraph& g, std::vector<int>& colors) {
  const int size = g.size();
  int classes = rank_colors(colors);
  std::vector<std::vector<int>> sig(size);
  std::vector<int> idx(size);
  while (true) {
    for (int v = 0; v < size; ++v) {
      sig[v].clear();
      sig[v].push_back(colors[v]);
      for (int u : g.adjacency[v]) sig[v].push_back(colors[u]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    for (int i = 0; i < size; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
      colors[idx[i]] = next;
    }
    if (next + 1 == classes) return;
    classes = next + 1;
  }
}

struct Search {
  const IncidenceGraph& g;
  std::vector<int> best_code;
  std::vector<int> best_order;
  bool have_best = false;

  void leaf(const std::vector<int>& colors) {
    const int size = g.size();
    std::vector<int> order(size);
    for (int v = 0; v < size; ++v) order[colors[v]] = v;
    std::vector<int> code;
    code.reserve(size * 4);
    code.push_back(g.num_vertices);
    code.push_back(g.num_edges);
    code.push_back(g.num_faces);
    std::vector<int> nbrs;
    for (int i = 0; i < size; ++i) {
      int v = order[i];
      code.push_back(g.color[v]);
      nbrs.clear();
      for (int u : g.adjacency[v]) nbrs.push_back(colors[u]);
      std::sort(nbrs.begin(), nbrs.end());
      code.push_back(static_cast<int>(nbrs.size()));
      code.insert(code.end(), nbrs.begin(), nbrs.end());
    }
    if (!have_best || code < best_code) {
      best_code = std::move(code);
      best_order = std::move(order);
      have_best = true;
    }
  }

  void run(std::vector<int> colors) {
    refine(g, colors);
    const int size = g.size();
    std::vector<int> cell_size(size, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < size; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < size; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> child(size);
      for (int u = 0; u < size; ++u) child[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      run(std::move(child));
    }
  }
};

bool same_invariants(const CellComplex& a, const CellComplex& b) {
  if (a.n() != b.n() || a.edges().size() != b.edges().size() || a.faces().size() != b.faces().size()) return false;
  auto sides = [](const CellComplex& c) {
    std::vector<std::pair<bool, int>> out;
    for (const Face& f : c.faces()) out.emplace_back(f.bounded, f.side_count());
    std::sort(out.begin(), out.end());
    return out;
  };
  return sides(a) == sides(b);
}

}  // namespace

CanonicalLabeling canonical_labeling(const IncidenceGraph& g) {
  Search search{g, {}, {}, false};
  search.run(g.color);
  return {CanonicalCertificate{std::move(search.best_code)}, std::move(search.best_order)};
}

CanonicalCertificate canonical_form(const CellComplex& c) {
  return canonical_labeling(incidence_graph(c)).certificate;
}

CanonicalCertificate canonical_form(const WiringDiagram& d) { return canonical_form(CellComplex(d)); }

bool isomorphic(const CellComplex& a, const CellComplex& b) {
  return same_invariants(a, b) && canonical_form(a) == canonical_form(b);
}

bool isomorphic(const WiringDiagram& a, const WiringDiagram& b) {
  return isomorphic(CellComplex(a), CellComplex(b));
}

std::optional<std::vector<WireId>> isomorphism_wire_map(const CellComplex& a, const CellComplex& b) {
  if (!same_invariants(a, b)) return std::nullopt;
  IncidenceGraph ga = incidence_graph(a);
  IncidenceGraph gb = incidence_graph(b);
  CanonicalLabeling la = canonical_labeling(ga);
  CanonicalLabeling lb = canonical_labeling(gb);
  if (la.certificate != lb.certificate) return std::nullopt;
  std::vector<WireId> map(a.n(), 0);
  const int e0 = ga.num_vertices;
  for (std::size_t i = 0; i < la.order.size(); ++i) {
    int u = la.order[i], v = lb.order[i];
    if (u < e0 || u >= e0 + ga.num_edges) continue;
    map[a.edge(u - e0).wire - 1] = b.edge(v - e0).wire;
  }
  return map;
}

bool isomorphic_with_wire_map(const CellComplex& a, const CellComplex& b, const std::vector<WireId>& map) {
  if (!same_invariants(a, b) || static_cast<int>(map.size()) != a.n()) return false;
  std::vector<int> labels_a(a.n()), labels_b(b.n(), -1);
  std::iota(labels_a.begin(), labels_a.end(), 1);
  for (WireId w = 1; w <= a.n(); ++w) {
    WireId target = map[w - 1];
    if (target < 1 || target > b.n() || labels_b[target - 1] != -1) return false;
    labels_b[target - 1] = w;
  }
  return canonical_labeling(incidence_graph(a, &labels_a)).certificate ==
         canonical_labeling(incidence_graph(b, &labels_b)).certificate;
}

}  // namespace psl
