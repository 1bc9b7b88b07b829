#pragma once

// Brute-force reference implementations used by the tests. They work on raw
// swap words and line coefficients and share no code with the library.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Side counts of the bounded faces read straight off a swap word. A face in
/// gap t lives between two consecutive swaps on track t; each swap on track
/// t-1 or t+1 in between adds a corner to its upper or lower chain.
inline std::vector<int> bounded_face_sides(int n, const std::vector<int>& swaps) {
  std::vector<int> sides;
  for (int t = 1; t < n; ++t) {
    int open = -1, extra = 0;
    for (int s = 0; s < static_cast<int>(swaps.size()); ++s) {
      if (swaps[s] == t) {
        if (open >= 0) sides.push_back(2 + extra);
        open = s;
        extra = 0;
      } else if (open >= 0 && (swaps[s] == t - 1 || swaps[s] == t + 1)) {
        ++extra;
      }
    }
  }
  return sides;
}

inline std::map<int, int> census(const std::vector<int>& sides) {
  std::map<int, int> m;
  for (int s : sides) ++m[s];
  return m;
}

/// Crossing sequence of every wire (1-based wires, index w - 1).
inline std::vector<std::vector<int>> local_sequences(int n, const std::vector<int>& swaps) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<int>> seq(n);
  for (int t : swaps) {
    int a = order[t - 1], b = order[t];
    seq[a - 1].push_back(b);
    seq[b - 1].push_back(a);
    std::swap(order[t - 1], order[t]);
  }
  return seq;
}

/// Isomorphism of the cell complexes by exhaustive search over wire
/// bijections. Adding one point at infinity where all rays end, the complex
/// is determined by its graph, and the graph by the crossing sequences read
/// in either direction along each wire.
inline bool isomorphic(int n, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (census(bounded_face_sides(n, a)) != census(bounded_face_sides(n, b))) return false;
  auto sa = local_sequences(n, a), sb = local_sequences(n, b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int w = 1; w <= n && ok; ++w) {
      std::vector<int> mapped;
      for (int x : sa[w - 1]) mapped.push_back(perm[x - 1]);
      const std::vector<int>& target = sb[perm[w - 1] - 1];
      if (mapped != target) {
        std::reverse(mapped.begin(), mapped.end());
        ok = mapped == target;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of orbits of self-dual 2m-bead strings under rotation and
/// reflection, by union-find over all 2^(2m) strings.
inline int selfdual_orbits(int m) {
  const int len = 2 * m;
  const unsigned total = 1u << len;
  std::vector<unsigned> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto bit = [&](unsigned s, int i) { return (s >> i) & 1u; };
  auto selfdual = [&](unsigned s) {
    for (int i = 0; i < m; ++i) {
      if (bit(s, i) == bit(s, i + m)) return false;
    }
    return true;
  };
  for (unsigned s = 0; s < total; ++s) {
    if (!selfdual(s)) continue;
    unsigned rot = 0, ref = 0;
    for (int i = 0; i < len; ++i) {
      rot |= bit(s, i) << ((i + 1) % len);
      ref |= bit(s, i) << (len - 1 - i);
    }
    parent[find(s)] = find(rot);
    parent[find(s)] = find(ref);
  }
  int orbits = 0;
  for (unsigned s = 0; s < total; ++s) {
    if (selfdual(s) && find(s) == s) ++orbits;
  }
  return orbits;
}

/// y = slope * x + intercept
struct GeoLine {
  mpq_class slope, intercept;
};

struct GeoFace {
  /// Bit i set when line i passes above the face.
  std::vector<bool> above;
  int sides = 0;
  bool bounded = true;
};

/// Faces of a line arrangement from sign vectors. Every edge is sampled at
/// an interior point; the faces on its two sides differ only in the sign of
/// its own line. Side counts are the number of edges seen from each face.
inline std::vector<GeoFace> line_faces(const std::vector<GeoLine>& lines) {
  const int n = static_cast<int>(lines.size());
  std::map<std::vector<bool>, GeoFace> faces;
  for (int i = 0; i < n; ++i) {
    std::vector<mpq_class> xs;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      xs.push_back(mpq_class(lines[j].intercept - lines[i].intercept) / mpq_class(lines[i].slope - lines[j].slope));
    }
    std::sort(xs.begin(), xs.end());
    std::vector<std::pair<mpq_class, bool>> samples;  // x, on a ray
    if (xs.empty()) {
      samples.emplace_back(mpq_class(0), true);
    } else {
      samples.emplace_back(mpq_class(xs.front() - 1), true);
      for (std::size_t k = 0; k + 1 < xs.size(); ++k) samples.emplace_back(mpq_class((xs[k] + xs[k + 1]) / 2), false);
      samples.emplace_back(mpq_class(xs.back() + 1), true);
    }
    for (const auto& [x, ray] : samples) {
      mpq_class y = lines[i].slope * x + lines[i].intercept;
      std::vector<bool> sign(n);
      for (int j = 0; j < n; ++j) {
        if (j != i) sign[j] = lines[j].slope * x + lines[j].intercept > y;
      }
      for (bool line_above : {false, true}) {
        sign[i] = line_above;
        GeoFace& f = faces[sign];
        f.above = sign;
        ++f.sides;
        if (ray) f.bounded = false;
      }
    }
  }
  std::vector<GeoFace> out;
  for (auto& [key, f] : faces) out.push_back(f);
  return out;
}

}  // namespace oracle
