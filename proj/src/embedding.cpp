#include "psl/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psl {

namespace {

Rational level(int n, int position) { return Rational(n - position); }

const Rational kHalf(1, 2);

}  // namespace

GridEmbedding grid_embedding(const CellComplex& c) {
  const WiringDiagram& d = c.diagram();
  const int n = d.n();
  const int steps = d.num_steps();

  GridEmbedding emb;
  emb.n = n;
  emb.wires.resize(n);

  std::vector<int> position(n);
  std::iota(position.begin(), position.end(), 1);
  for (WireId w = 1; w <= n; ++w) emb.wires[w - 1].vertices.push_back({Rational(0), level(n, w)});

  auto push = [](Polyline& pl, Point p) {
    if (pl.vertices.empty() || !(pl.vertices.back() == p)) pl.vertices.push_back(std::move(p));
  };
  for (const Crossing& cr : d.crossings()) {
    Rational s(cr.step);
    for (WireId w : {cr.wire_a, cr.wire_b}) {
      int from = position[w - 1];
      int to = (w == cr.wire_a) ? cr.track + 1 : cr.track;
      push(emb.wires[w - 1], {s - kHalf, level(n, from)});
      push(emb.wires[w - 1], {s + kHalf, level(n, to)});
      position[w - 1] = to;
    }
  }
  for (WireId w = 1; w <= n; ++w) push(emb.wires[w - 1], {Rational(steps + 1), level(n, position[w - 1])});

  emb.witness.resize(c.faces().size());
  for (const Face& f : c.faces()) {
    if (f.gap == 0) {
      emb.witness[f.id] = {Rational(0), Rational(n)};
    } else if (f.gap == n) {
      emb.witness[f.id] = {Rational(0), Rational(-1)};
    } else {
      Rational x = f.open_step > 0 ? Rational(Rational(f.open_step) + kHalf) : Rational(Rational(f.close_step) - kHalf);
      emb.witness[f.id] = {x, level(n, f.gap) - kHalf};
    }
  }
  return emb;
}

Rational GridEmbedding::height(WireId w, const Rational& x) const {
  const auto& v = wires[w - 1].vertices;
  if (x <= v.front().x) return v.front().y;
  if (x >= v.back().x) return v.back().y;
  auto it = std::upper_bound(v.begin(), v.end(), x, [](const Rational& value, const Point& p) { return value < p.x; });
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

Point GridEmbedding::crossing_point(const WiringDiagram& d, int step) const {
  const Crossing& cr = d.crossing_at(step);
  Rational x(step);
  return {x, height(cr.wire_a, x)};
}

FaceId face_containing(const CellComplex& c, const Point& point, const GridEmbedding& emb) {
  WireMask above = 0;
  for (WireId w = 1; w <= c.n(); ++w) {
    Rational y = emb.height(w, point.x);
    if (y == point.y) throw OnBoundaryError(w);
    if (y > point.y) above |= wire_bit(w);
  }
  FaceId f = c.face_with_sign(above);
  if (f < 0) throw std::logic_error("sign vector matches no face");
  return f;
}

WiringDiagram extract_diagram(const GridEmbedding& emb) {
  const int n = emb.n;
  struct Event {
    Point at;
    WireId upper, lower;
  };
  std::vector<Event> events;
  for (WireId i = 1; i <= n; ++i) {
    for (WireId j = i + 1; j <= n; ++j) {
      std::vector<Rational> xs;
      for (const auto& p : emb.wires[i - 1].vertices) xs.push_back(p.x);
      for (const auto& p : emb.wires[j - 1].vertices) xs.push_back(p.x);
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      // Wire i starts above wire j; find where the difference changes sign.
      Rational prev_x = xs.front();
      Rational prev_diff = emb.height(i, prev_x) - emb.height(j, prev_x);
      if (sgn(prev_diff) <= 0) throw std::logic_error("wires out of order at the left end");
      bool found = false;
      for (std::size_t k = 1; k < xs.size() && !found; ++k) {
        Rational diff = emb.height(i, xs[k]) - emb.height(j, xs[k]);
        if (sgn(diff) <= 0) {
          Rational x = diff == 0 ? xs[k] : prev_x + (xs[k] - prev_x) * prev_diff / (prev_diff - diff);
          events.push_back({{x, emb.height(i, x)}, i, j});
          found = true;
        }
        prev_x = xs[k];
        prev_diff = diff;
      }
      if (!found) throw std::logic_error("wires never cross");
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.at.x != b.at.x) return a.at.x < b.at.x;
    return a.at.y > b.at.y;
  });
  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> swaps;
  for (const Event& e : events) {
    auto it = std::find(order.begin(), order.end(), e.upper);
    auto jt = std::find(order.begin(), order.end(), e.lower);
    int pi = static_cast<int>(it - order.begin());
    int pj = static_cast<int>(jt - order.begin());
    if (std::abs(pi - pj) != 1) throw std::logic_error("crossing between non-adjacent wires");
    int t = std::min(pi, pj) + 1;
    swaps.push_back(t);
    std::swap(order[t - 1], order[t]);
  }
  return WiringDiagram::validate(n, std::move(swaps));
}

}  // namespace psl
