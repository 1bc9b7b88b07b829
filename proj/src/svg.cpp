#include "psl/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "psl/embedding.hpp"

namespace psl {

const char* face_fill(int sides) {
  switch (sides) {
    case 3:
      return "#f4a6a6";
    case 4:
      return "#f6e3a1";
    case 5:
      return "#a8dba8";
    default:
      return "#9cc3e6";
  }
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Canvas {
  double min_x, max_x, min_y, max_y;
  double scale;
  double margin = 20;

  double sx(double x) const { return margin + (x - min_x) * scale; }
  double sy(double y) const { return margin + (max_y - y) * scale; }
  double width() const { return 2 * margin + (max_x - min_x) * scale; }
  double height() const { return 2 * margin + (max_y - min_y) * scale; }
};

std::string header(const Canvas& cv) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width()) + "\" height=\"" +
         num(cv.height()) + "\" viewBox=\"0 0 " + num(cv.width()) + " " + num(cv.height()) + "\">\n" +
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string polygon(const Canvas& cv, const std::vector<std::pair<double, double>>& pts, const char* fill) {
  std::string s = "<polygon fill=\"" + std::string(fill) + "\" stroke=\"none\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s += (i ? " " : "") + num(cv.sx(pts[i].first)) + "," + num(cv.sy(pts[i].second));
  }
  return s + "\"/>\n";
}

std::string label(const Canvas& cv, double x, double y, WireId w) {
  return "<text x=\"" + num(cv.sx(x)) + "\" y=\"" + num(cv.sy(y)) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\" dy=\"4\">" + std::to_string(w) +
         "</text>\n";
}

}  // namespace

std::string render_grid_svg(const CellComplex& c) {
  const GridEmbedding emb = grid_embedding(c);
  const int n = c.n();
  const int steps = c.diagram().num_steps();
  Canvas cv{-0.5, steps + 1.5, -0.5, n - 0.5, 40};
  std::string out = header(cv);

  // The g-th highest wire at x; heights change only at half-integers.
  auto gth_height = [&](int g, const Rational& x) {
    std::vector<Rational> hs;
    for (WireId w = 1; w <= n; ++w) hs.push_back(emb.height(w, x));
    std::sort(hs.begin(), hs.end(), std::greater<>());
    return to_double(hs[g - 1]);
  };
  for (const Face& f : c.faces()) {
    if (!f.bounded) continue;
    std::vector<std::pair<double, double>> upper, lower;
    for (Rational x(f.open_step); x <= f.close_step; x += Rational(1, 2)) {
      upper.emplace_back(to_double(x), gth_height(f.gap, x));
      lower.emplace_back(to_double(x), gth_height(f.gap + 1, x));
    }
    std::vector<std::pair<double, double>> pts(lower.begin(), lower.end());
    pts.insert(pts.end(), upper.rbegin(), upper.rend());
    out += polygon(cv, pts, face_fill(f.side_count()));
  }
  for (WireId w = 1; w <= n; ++w) {
    const auto& v = emb.wires[w - 1].vertices;
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? " " : "") + num(cv.sx(to_double(v[i].x))) + "," + num(cv.sy(to_double(v[i].y)));
    }
    out += "\"/>\n";
    out += label(cv, -0.1, n - w, w);
  }
  return out + "</svg>\n";
}

std::string render_lines_svg(const CellComplex& c, const LineArrangement& lines, const std::vector<int>& line_of_wire) {
  const WiringDiagram& d = c.diagram();
  auto vertex = [&](int step) {
    const Crossing& cr = d.crossing_at(step);
    Point p = intersection(lines.lines[line_of_wire[cr.wire_a - 1]], lines.lines[line_of_wire[cr.wire_b - 1]]);
    return std::make_pair(to_double(p.x), to_double(p.y));
  };

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (int s = 1; s <= d.num_steps(); ++s) {
    auto [x, y] = vertex(s);
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double pad = 0.15 * std::max({max_x - min_x, max_y - min_y, 1.0});
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  double scale = 600.0 / std::max(max_x - min_x, max_y - min_y);
  Canvas cv{min_x, max_x, min_y, max_y, scale};
  std::string out = header(cv);

  for (const Face& f : c.faces()) {
    if (!f.bounded) continue;
    std::vector<std::pair<double, double>> pts;
    for (EdgeId e : f.boundary) {
      const Edge& edge = c.edge(e);
      pts.push_back(vertex(edge.from_step));
      pts.push_back(vertex(edge.to_step));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    double cx = 0, cy = 0;
    for (auto [x, y] : pts) {
      cx += x;
      cy += y;
    }
    cx /= pts.size();
    cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
      return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
    });
    out += polygon(cv, pts, face_fill(f.side_count()));
  }
  // Clip each line to the canvas box.
  for (WireId w = 1; w <= c.n(); ++w) {
    const Line& l = lines.lines[line_of_wire[w - 1]];
    double m = to_double(l.slope), q = to_double(l.intercept);
    double x0 = min_x, x1 = max_x;
    if (m != 0) {
      double xa = (min_y - q) / m, xb = (max_y - q) / m;
      x0 = std::max(x0, std::min(xa, xb));
      x1 = std::min(x1, std::max(xa, xb));
    }
    out += "<line stroke=\"black\" stroke-width=\"1.5\" x1=\"" + num(cv.sx(x0)) + "\" y1=\"" + num(cv.sy(m * x0 + q)) +
           "\" x2=\"" + num(cv.sx(x1)) + "\" y2=\"" + num(cv.sy(m * x1 + q)) + "\"/>\n";
    out += label(cv, x0, m * x0 + q, w);
  }
  return out + "</svg>\n";
}

}  // namespace psl
