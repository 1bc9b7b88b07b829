#include "psl/lines.hpp"

#include <algorithm>
#include <numeric>

namespace psl {

Point intersection(const Line& a, const Line& b) {
  Rational x = (b.intercept - a.intercept) / (a.slope - b.slope);
  return {x, a.at(x)};
}

LinesDiagram lines_to_diagram(const LineArrangement& la) {
  const int n = la.size();
  if (n == 0) throw LineError(LineErrorKind::Empty, "empty line arrangement");
  if (n > kMaxWires) throw LineError(LineErrorKind::Empty, "too many lines");

  std::vector<int> by_slope(n);
  std::iota(by_slope.begin(), by_slope.end(), 0);
  std::sort(by_slope.begin(), by_slope.end(), [&](int i, int j) { return la.lines[i].slope < la.lines[j].slope; });
  for (int i = 1; i < n; ++i) {
    if (la.lines[by_slope[i]].slope == la.lines[by_slope[i - 1]].slope) {
      throw LineError(LineErrorKind::DuplicateSlope, "lines " + std::to_string(by_slope[i - 1]) + " and " +
                                                         std::to_string(by_slope[i]) + " are parallel");
    }
  }
  LinesDiagram out{WiringDiagram::validate(1, {}), by_slope, std::vector<WireId>(n)};
  for (int w = 1; w <= n; ++w) out.wire_of_line[by_slope[w - 1]] = w;

  struct Event {
    Point at;
    WireId p, q;
  };
  std::vector<Event> events;
  events.reserve(static_cast<std::size_t>(full_length(n)));
  for (WireId p = 1; p <= n; ++p) {
    for (WireId q = p + 1; q <= n; ++q) {
      events.push_back({intersection(la.lines[by_slope[p - 1]], la.lines[by_slope[q - 1]]), p, q});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    int cx = cmp(a.at.x, b.at.x);
    if (cx != 0) return cx < 0;
    return a.at.y > b.at.y;
  });
  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].at == events[i - 1].at) {
      throw LineError(LineErrorKind::ConcurrentLines,
                      "three or more lines meet at (" + to_fraction_string(events[i].at.x) + ", " +
                          to_fraction_string(events[i].at.y) + ")");
    }
  }

  std::vector<int> pos(n);
  std::iota(pos.begin(), pos.end(), 1);
  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> swaps;
  swaps.reserve(events.size());
  for (const Event& e : events) {
    int a = pos[e.p - 1], b = pos[e.q - 1];
    int t = std::min(a, b);
    if (std::abs(a - b) != 1) throw std::logic_error("sweep event between non-adjacent wires");
    swaps.push_back(t);
    std::swap(order[t - 1], order[t]);
    pos[order[t - 1] - 1] = t;
    pos[order[t] - 1] = t + 1;
  }
  out.diagram = WiringDiagram::validate(n, std::move(swaps));
  return out;
}

nlohmann::ordered_json lines_to_json(const LineArrangement& la) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Line& l : la.lines) {
    nlohmann::ordered_json item;
    item["slope"] = to_fraction_string(l.slope);
    item["intercept"] = to_fraction_string(l.intercept);
    arr.push_back(item);
  }
  return arr;
}

LineArrangement lines_from_json(const nlohmann::ordered_json& j) {
  const nlohmann::ordered_json& arr = j.is_object() && j.contains("lines") ? j.at("lines") : j;
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of lines");
  LineArrangement la;
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("slope") || !item.contains("intercept")) {
      throw std::invalid_argument("each line needs \"slope\" and \"intercept\"");
    }
    auto field = [](const nlohmann::ordered_json& v) {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<long>());
      throw std::invalid_argument("rational values must be strings \"p/q\" or integers");
    };
    la.lines.push_back({field(item.at("slope")), field(item.at("intercept"))});
  }
  return la;
}

}  // namespace psl
