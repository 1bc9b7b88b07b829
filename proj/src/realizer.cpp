#include "psl/realizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "psl/analysis.hpp"
#include "psl/canonical.hpp"

namespace psl {

namespace {

std::vector<WireId> directed_order(const WiringDiagram& d, WireId w, bool forward) {
  const auto& seq = d.local_sequence(w);
  std::vector<WireId> out{0};
  if (forward) {
    out.insert(out.end(), seq.begin(), seq.end());
  } else {
    out.insert(out.end(), seq.rbegin(), seq.rend());
  }
  return out;
}

int index_of(const std::vector<WireId>& order, WireId w) {
  auto it = std::find(order.begin() + 1, order.end(), w);
  return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

FaceId triangle_across(const CellComplex& c, FaceId p, EdgeId e) {
  FaceId f = c.edge(e).other_face(p);
  if (!c.face(f).bounded || c.face(f).side_count() != 3) {
    throw RealizerError(RealizerErrorKind::FrameInvariant,
                        "non-critical edge on wire " + std::to_string(c.edge(e).wire) + " borders no triangle");
  }
  return f;
}

}  // namespace

RealizerFrame select_insertion_frame(const CellComplex& c) {
  ImMembership im = is_in_im(c);
  if (!im.in_im) throw RealizerError(RealizerErrorKind::NotInIm, "arrangement is not in Im");
  const WiringDiagram& d = c.diagram();
  const int n = c.n();
  RealizerFrame f;
  f.p = *im.ge5_face;
  const Face& p = c.face(f.p);
  auto flags = critical_edges(c, f.p);
  const int len = static_cast<int>(flags.size());
  int start = -1;
  for (int i = 0; i < len && start < 0; ++i) {
    if (!flags[i].critical && !flags[(i + 1) % len].critical && !flags[(i + 2) % len].critical) start = i;
  }
  if (start < 0) {
    throw RealizerError(RealizerErrorKind::NoConsecutiveTriple, "P has no three consecutive non-critical edges");
  }
  EdgeId ea = flags[start].edge, eb = flags[(start + 1) % len].edge, ec = flags[(start + 2) % len].edge;
  f.a = c.edge(ea).wire;
  f.b = c.edge(eb).wire;
  f.c = c.edge(ec).wire;
  // P to the left: wires below P run left to right.
  f.a_forward = p.is_above(f.a);
  f.b_forward = p.is_above(f.b);
  f.c_forward = p.is_above(f.c);
  f.a_order = directed_order(d, f.a, f.a_forward);
  f.b_order = directed_order(d, f.b, f.b_forward);
  f.c_order = directed_order(d, f.c, f.c_forward);
  f.k = index_of(f.a_order, f.c);
  f.t = index_of(f.b_order, f.a);
  f.r = index_of(f.c_order, f.a);
  for (int l = 1; l <= f.k - f.r - 1; ++l) f.h.push_back(f.a_order[l]);
  f.tri_a = triangle_across(c, f.p, ea);
  f.tri_b = triangle_across(c, f.p, eb);
  f.tri_c = triangle_across(c, f.p, ec);

  f.regions.assign(n, {});
  for (WireId x = 1; x <= n; ++x) {
    if (x == f.a || x == f.c) continue;
    // Far left, x lies above a exactly when its label is smaller.
    bool left_a = (x < f.a) == f.a_forward;
    bool left_c = (x < f.c) == f.c_forward;
    auto region = [&] {
      if (left_a) return left_c ? Region::R1 : Region::R4;
      return left_c ? Region::R2 : Region::R3;
    };
    f.regions[x - 1].push_back(region());
    for (WireId y : d.local_sequence(x)) {
      if (y == f.a) left_a = !left_a;
      if (y == f.c) left_c = !left_c;
      if (y == f.a || y == f.c) f.regions[x - 1].push_back(region());
    }
  }
  if (auto bad = check_frame(f, n)) throw RealizerError(RealizerErrorKind::FrameInvariant, *bad);
  return f;
}

std::optional<std::string> check_frame(const RealizerFrame& f, int n) {
  const int k = f.k, t = f.t, r = f.r;
  if (!(3 <= k && k <= n - 1)) return "k = " + std::to_string(k) + " outside [3, n-1]";
  if (!(2 <= t && t <= n - 3)) return "t = " + std::to_string(t) + " outside [2, n-3]";
  if (!(1 <= r && r <= n - 3)) return "r = " + std::to_string(r) + " outside [1, n-3]";
  if (!(r <= t && t <= k - 1)) return "r <= t <= k-1 fails";
  if (f.a_order[k - 1] != f.b) return "b is not a_{k-1}";
  if (f.b_order[t + 1] != f.c) return "c is not b_{t+1}";
  if (f.c_order[r + 1] != f.b) return "b is not c_{r+1}";
  for (int j = 1; j <= t - 1; ++j) {
    if (f.b_order[t - j] != f.a_order[k - 1 - j]) return "b_{t-j} != a_{k-1-j} at j = " + std::to_string(j);
    if (j <= r - 1 && f.b_order[t - j] != f.c_order[r - j]) return "b_{t-j} != c_{r-j} at j = " + std::to_string(j);
  }
  for (int i = 1; i <= n - t - 2; ++i) {
    if (f.b_order[t + 1 + i] != f.c_order[r + 1 + i]) return "b_{t+1+i} != c_{r+1+i} at i = " + std::to_string(i);
    if (i <= n - k - 1 && f.b_order[t + 1 + i] != f.a_order[k + i]) {
      return "b_{t+1+i} != a_{k+i} at i = " + std::to_string(i);
    }
  }
  for (int l = 1; l <= k - r - 1; ++l) {
    if (f.c_order[n + r - k + l] != f.a_order[l]) return "c_{n+r-k+l} != a_l at l = " + std::to_string(l);
  }
  return std::nullopt;
}

bool realizes(const LineArrangement& lines, const WiringDiagram& d) {
  if (lines.size() != d.n()) return false;
  LinesDiagram ld = [&] {
    try {
      return std::optional<LinesDiagram>(lines_to_diagram(lines));
    } catch (const LineError&) {
      return std::optional<LinesDiagram>();
    }
  }().value_or(LinesDiagram{WiringDiagram::validate(1, {}), {}, {}});
  if (ld.wire_of_line.empty()) return false;
  return isomorphic_with_wire_map(CellComplex(d), CellComplex(ld.diagram), ld.wire_of_line);
}

namespace {

struct Vec {
  Rational x, y;
};

Rational cross(const Vec& u, const Vec& v) { return u.x * v.y - u.y * v.x; }

Vec direction(const Line& l) { return {1, l.slope}; }

class Realizer {
 public:
  explicit Realizer(const RealizerOptions& options) : options_(options), rng_(options.seed) {}

  Realization run(const WiringDiagram& d) {
    Realization out;
    out.lines = realize(d, out.levels);
    if (!realizes(out.lines, d)) {
      throw RealizerError(RealizerErrorKind::InsertionFailed, "final arrangement does not match the input");
    }
    return out;
  }

 private:
  LineArrangement realize(const WiringDiagram& d, std::vector<RealizerLevel>& levels) {
    const CellComplex cc(d);
    if (!is_in_im(cc).in_im) throw RealizerError(RealizerErrorKind::NotInIm, "arrangement is not in Im");
    if (d.n() <= options_.base_case_max_wires) return base_case(cc, levels);

    RealizerFrame frame;
    try {
      frame = select_insertion_frame(cc);
    } catch (const RealizerError& e) {
      if (e.kind() != RealizerErrorKind::NoConsecutiveTriple) throw;
      return base_case(cc, levels);
    }
    std::vector<WireId> keep;
    for (WireId w = 1; w <= d.n(); ++w) {
      if (w != frame.b) keep.push_back(w);
    }
    InducedSubarrangement sub = induced_subarrangement(d, keep);
    if (!is_in_im(CellComplex(sub.diagram)).in_im) return base_case(cc, levels);

    LineArrangement inner = realize(sub.diagram, levels);
    std::vector<std::optional<Line>> lines(d.n());
    for (WireId w : keep) lines[w - 1] = inner.lines[sub.sub_wire[w - 1] - 1];
    return insert(d, frame, lines, levels);
  }

  /// Direction of the line of wire x along which it meets the other lines
  /// in the order `order` (1-based, absent wires skipped).
  static Vec oriented(const std::vector<std::optional<Line>>& lines, WireId x, const std::vector<WireId>& order) {
    std::vector<WireId> present;
    for (std::size_t i = 1; i < order.size() && present.size() < 2; ++i) {
      if (lines[order[i] - 1]) present.push_back(order[i]);
    }
    const Line& l = *lines[x - 1];
    Point p = intersection(l, *lines[present[0] - 1]);
    Point q = intersection(l, *lines[present[1] - 1]);
    Vec v = direction(l);
    if (q.x < p.x) {
      v.x = -v.x;
      v.y = -v.y;
    }
    return v;
  }

  /// Wires met by the line through `origin` with direction u, sorted along u.
  static std::optional<std::vector<WireId>> order_along(const std::vector<std::optional<Line>>& lines,
                                                        const Point& origin, const Vec& u,
                                                        const std::vector<WireId>& skip) {
    std::vector<std::pair<Rational, WireId>> hits;
    for (WireId w = 1; w <= static_cast<int>(lines.size()); ++w) {
      if (!lines[w - 1] || std::find(skip.begin(), skip.end(), w) != skip.end()) continue;
      const Line& l = *lines[w - 1];
      // origin + s u on l: origin.y + s u.y = m (origin.x + s u.x) + q
      Rational denom = u.y - l.slope * u.x;
      if (denom == 0) return std::nullopt;
      hits.emplace_back((l.at(origin.x) - origin.y) / denom, w);
    }
    std::sort(hits.begin(), hits.end());
    std::vector<WireId> out;
    for (std::size_t i = 0; i < hits.size(); ++i) {
      if (i > 0 && hits[i].first == hits[i - 1].first) return std::nullopt;
      out.push_back(hits[i].second);
    }
    return out;
  }

  LineArrangement insert(const WiringDiagram& d, const RealizerFrame& f, std::vector<std::optional<Line>> lines,
                         std::vector<RealizerLevel>& levels) {
    const int n = d.n();
    RealizerLevel level;
    level.n = n;
    level.a = f.a;
    level.b = f.b;
    level.c = f.c;
    level.k = f.k;
    level.t = f.t;
    level.r = f.r;

    const Line& la = *lines[f.a - 1];
    const Line& lc = *lines[f.c - 1];
    const Point v = intersection(la, lc);
    Vec dir_a = oriented(lines, f.a, f.a_order);
    Vec dir_c = oriented(lines, f.c, f.c_order);
    const Vec ra{-dir_a.x, -dir_a.y};
    const Vec rc = dir_c;
    const Vec sum{ra.x + rc.x, ra.y + rc.y};
    const Rational denom_sign = cross(ra, rc);
    if (denom_sign == 0) throw RealizerError(RealizerErrorKind::FrameInvariant, "a* and c* are parallel");

    // Parameter of a direction h: 0 along a*, 1 along c*.
    auto parameter = [&](const Vec& h) -> Rational { return cross(h, ra) / cross(h, sum); };
    std::vector<Rational> m{0};
    for (WireId w : f.h) m.push_back(parameter(direction(*lines[w - 1])));
    m.push_back(1);
    for (std::size_t i = 1; i < m.size(); ++i) {
      if (!(m[i - 1] < m[i])) {
        throw RealizerError(RealizerErrorKind::FrameInvariant, "slopes of H are not increasing from a* to c*");
      }
    }
    level.slope_parameters = m;

    // The bracketing pair read off b's crossing order: H lines crossed by b
    // before a come last in H.
    int before_a = 0;
    for (int i = 1; i < f.t; ++i) {
      if (std::find(f.h.begin(), f.h.end(), f.b_order[i]) != f.h.end()) ++before_a;
    }
    const int split = static_cast<int>(f.h.size()) - before_a;
    if (split != f.k - f.t - 1) {
      throw RealizerError(RealizerErrorKind::FrameInvariant, "b splits H at " + std::to_string(split) +
                                                                  ", expected k - t - 1 = " +
                                                                  std::to_string(f.k - f.t - 1));
    }
    const Rational lo = m[split], hi = m[split + 1];

    std::vector<Rational> candidates{(lo + hi) / 2};
    for (int den = 4; den <= 64; den *= 2) {
      for (int num = 1; num < den; num += 2) {
        if (2 * num != den) candidates.push_back(lo + (hi - lo) * Rational(num, den));
      }
    }

    std::vector<WireId> expected_inner, expected_full;
    for (int i = 1; i <= n - 1; ++i) {
      expected_full.push_back(f.b_order[i]);
      if (f.b_order[i] != f.a && f.b_order[i] != f.c) expected_inner.push_back(f.b_order[i]);
    }

    // Nearest other vertex of the realized lines, in the L-infinity norm.
    std::optional<Rational> nearest;
    for (WireId p = 1; p <= n; ++p) {
      for (WireId q = p + 1; q <= n; ++q) {
        if (!lines[p - 1] || !lines[q - 1] || (p == std::min(f.a, f.c) && q == std::max(f.a, f.c))) continue;
        Point x = intersection(*lines[p - 1], *lines[q - 1]);
        Rational dist = std::max(Rational(abs(x.x - v.x)), Rational(abs(x.y - v.y)));
        if (!nearest || dist < *nearest) nearest = dist;
      }
    }
    const Rational sum_norm = std::max(Rational(abs(sum.x)), Rational(abs(sum.y)));

    for (std::size_t attempt = 0; attempt < candidates.size(); ++attempt) {
      const Rational& lambda = candidates[attempt];
      // Direction of b: from the ray of a towards the ray of c.
      Vec u{lambda * rc.x - (1 - lambda) * ra.x, lambda * rc.y - (1 - lambda) * ra.y};
      if (u.x == 0) continue;
      auto at_v = order_along(lines, v, u, {f.a, f.c});
      if (!at_v || *at_v != expected_inner) continue;

      Rational tau = *nearest / 2 / sum_norm;
      for (int h = 0; h <= options_.max_halvings; ++h, tau /= 2) {
        Point origin{v.x + tau * sum.x, v.y + tau * sum.y};
        auto along = order_along(lines, origin, u, {});
        if (!along || *along != expected_full) continue;
        Rational slope = u.y / u.x;
        lines[f.b - 1] = Line{slope, origin.y - slope * origin.x};
        LineArrangement out;
        for (const auto& l : lines) out.lines.push_back(*l);
        if (realizes(out, d)) {
          level.chosen_parameter = lambda;
          level.parameter_attempt = static_cast<int>(attempt) + 1;
          level.halvings = h;
          level.diagram = d;
          level.lines = out;
          levels.push_back(level);
          return out;
        }
        lines[f.b - 1].reset();
      }
    }
    throw RealizerError(RealizerErrorKind::InsertionFailed,
                        "no inserted line for wire " + std::to_string(f.b) + " reproduced the arrangement");
  }

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  static Rational to_rational(double x) {
    constexpr long kScale = 1L << 24;
    return Rational(static_cast<long>(std::llround(x * kScale)), kScale);
  }

  LineArrangement base_case(const CellComplex& cc, std::vector<RealizerLevel>& levels) {
    const int n = cc.n();
    RealizerLevel level;
    level.n = n;
    level.base_case = true;
    for (int attempt = 1; attempt <= options_.base_case_budget; ++attempt) {
      std::vector<double> gaps(n);
      double total = 0;
      for (double& g : gaps) total += (g = 0.25 + uniform());
      double theta = 2 * std::numbers::pi * uniform();
      LineArrangement la;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        theta += 2 * std::numbers::pi * gaps[i] / total;
        double half = std::remainder(theta, 2 * std::numbers::pi) / 2;
        if (std::abs(std::cos(half)) < 1e-3) {
          ok = false;
          break;
        }
        Rational tt = to_rational(std::tan(half));
        Rational den = 1 + tt * tt;
        Rational ux = (1 - tt * tt) / den, uy = 2 * tt / den;
        if (uy == 0) {
          ok = false;
          break;
        }
        Rational support = 1 + Rational(static_cast<long>(uniform() * 1024), 1024);
        la.lines.push_back({-ux / uy, support / uy});
      }
      if (!ok) continue;
      LinesDiagram ld = [&] {
        try {
          return std::optional<LinesDiagram>(lines_to_diagram(la));
        } catch (const LineError&) {
          return std::optional<LinesDiagram>();
        }
      }().value_or(LinesDiagram{WiringDiagram::validate(1, {}), {}, {}});
      if (ld.line_of_wire.empty()) continue;
      auto map = isomorphism_wire_map(cc, CellComplex(ld.diagram));
      if (!map) continue;
      LineArrangement out;
      for (WireId w = 1; w <= n; ++w) out.lines.push_back(la.lines[ld.line_of_wire[(*map)[w - 1] - 1]]);
      level.base_case_attempts = attempt;
      level.diagram = cc.diagram();
      level.lines = out;
      levels.push_back(level);
      return out;
    }
    throw RealizerError(RealizerErrorKind::BaseCaseExhausted,
                        "no realization of the " + std::to_string(n) + "-wire base case in " +
                            std::to_string(options_.base_case_budget) + " attempts");
  }

  RealizerOptions options_;
  std::mt19937_64 rng_;
};

}  // namespace

Realization realize_im(const WiringDiagram& d, const RealizerOptions& options) {
  return Realizer(options).run(d);
}

}  // namespace psl
