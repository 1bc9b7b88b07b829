#include "psl/wiring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace psl {

WiringDiagram WiringDiagram::validate(int n, std::vector<int> swaps) {
  if (n < 1 || n > kMaxWires) {
    throw WiringError(WiringErrorKind::InvalidWireCount,
                      "wire count must be in [1, " + std::to_string(kMaxWires) + "], got " +
                          std::to_string(n));
  }
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    if (swaps[i] < 1 || swaps[i] > n - 1) {
      throw WiringError(WiringErrorKind::TrackOutOfRange,
                        "track " + std::to_string(swaps[i]) + " at step " + std::to_string(i + 1) +
                            " outside [1, " + std::to_string(n - 1) + "]",
                        {0, 0}, static_cast<int>(i + 1));
    }
  }

  WiringDiagram d;
  d.n_ = n;
  d.pair_step_.assign(static_cast<std::size_t>(n * n), 0);
  d.local_.resize(n);
  d.wire_steps_.resize(n);
  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);

  // Simulate before the length check so a double crossing inside a short or
  // long word is reported with its pair.
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    int t = swaps[i];
    int step = static_cast<int>(i + 1);
    WireId a = order[t - 1];
    WireId b = order[t];
    int& slot = d.pair_step_[(a - 1) * n + (b - 1)];
    if (slot != 0) {
      WireId lo = std::min(a, b), hi = std::max(a, b);
      throw WiringError(WiringErrorKind::DoubleCross,
                        "wires " + std::to_string(lo) + " and " + std::to_string(hi) +
                            " cross twice (again at step " + std::to_string(step) + ")",
                        {lo, hi}, step);
    }
    slot = step;
    d.pair_step_[(b - 1) * n + (a - 1)] = step;
    std::swap(order[t - 1], order[t]);
    d.crossings_.push_back(Crossing{a, b, step, t});
    d.local_[a - 1].push_back(b);
    d.local_[b - 1].push_back(a);
    d.wire_steps_[a - 1].push_back(step);
    d.wire_steps_[b - 1].push_back(step);
  }
  if (static_cast<int>(swaps.size()) != full_length(n)) {
    throw WiringError(WiringErrorKind::WrongLength,
                      "expected " + std::to_string(full_length(n)) + " swaps for n = " +
                          std::to_string(n) + ", got " + std::to_string(swaps.size()));
  }
  d.swaps_ = std::move(swaps);
  return d;
}

int WiringDiagram::crossing_step(WireId p, WireId q) const { return pair_step_[(p - 1) * n_ + (q - 1)]; }

std::vector<WireId> WiringDiagram::order_after(int step) const {
  std::vector<WireId> order(n_);
  std::iota(order.begin(), order.end(), 1);
  for (int s = 0; s < step; ++s) std::swap(order[swaps_[s] - 1], order[swaps_[s]]);
  return order;
}

WiringDiagram normal_form(const WiringDiagram& d) {
  const int n = d.n();
  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::size_t> next(n, 0);  // index into local sequence
  std::vector<int> out;
  out.reserve(d.num_steps());
  for (int s = 0; s < d.num_steps(); ++s) {
    int chosen = 0;
    for (int t = 1; t < n; ++t) {
      WireId a = order[t - 1], b = order[t];
      const auto& la = d.local_sequence(a);
      const auto& lb = d.local_sequence(b);
      if (next[a - 1] < la.size() && la[next[a - 1]] == b && next[b - 1] < lb.size() &&
          lb[next[b - 1]] == a) {
        chosen = t;
        break;
      }
    }
    // A valid diagram always has an available swap until it is exhausted.
    WireId a = order[chosen - 1], b = order[chosen];
    ++next[a - 1];
    ++next[b - 1];
    std::swap(order[chosen - 1], order[chosen]);
    out.push_back(chosen);
  }
  return WiringDiagram::validate(n, std::move(out));
}

WiringDiagram mirror_top_bottom(const WiringDiagram& d) {
  std::vector<int> swaps = d.swaps();
  for (int& t : swaps) t = d.n() - t;
  return WiringDiagram::validate(d.n(), std::move(swaps));
}

WiringDiagram mirror_left_right(const WiringDiagram& d) {
  std::vector<int> swaps(d.swaps().rbegin(), d.swaps().rend());
  return WiringDiagram::validate(d.n(), std::move(swaps));
}

InducedSubarrangement induced_subarrangement(const WiringDiagram& d, WireMask keep) {
  const int n = d.n();
  if (n < kMaxWires) keep &= (WireMask{1} << n) - 1;
  if (keep == 0) throw EmptySubsetError();

  InducedSubarrangement out{WiringDiagram::validate(1, {}), {}, {}, {}, {}};
  out.sub_wire.assign(n, 0);
  for (WireId w = 1; w <= n; ++w) {
    if (keep & wire_bit(w)) {
      out.parent_wire.push_back(w);
      out.sub_wire[w - 1] = static_cast<WireId>(out.parent_wire.size());
    }
  }
  out.sub_step.assign(d.num_steps() + 1, 0);
  out.parent_step.push_back(0);

  std::vector<WireId> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> swaps;
  for (const Crossing& c : d.crossings()) {
    if ((keep & wire_bit(c.wire_a)) && (keep & wire_bit(c.wire_b))) {
      // Track in the sub diagram = number of kept wires strictly above wire_a, plus one.
      int rank = 1;
      for (int p = 0; p < c.track - 1; ++p) {
        if (keep & wire_bit(order[p])) ++rank;
      }
      swaps.push_back(rank);
      out.parent_step.push_back(c.step);
      out.sub_step[c.step] = static_cast<int>(swaps.size());
    }
    std::swap(order[c.track - 1], order[c.track]);
  }
  out.diagram = WiringDiagram::validate(static_cast<int>(out.parent_wire.size()), std::move(swaps));
  return out;
}

InducedSubarrangement induced_subarrangement(const WiringDiagram& d, const std::vector<WireId>& keep) {
  WireMask mask = 0;
  for (WireId w : keep) {
    if (w < 1 || w > d.n()) throw std::out_of_range("wire " + std::to_string(w) + " not in diagram");
    mask |= wire_bit(w);
  }
  return induced_subarrangement(d, mask);
}

// ---- text format --------------------------------------------------------

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
  }
  return tokens;
}

int parse_int(const Token& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(line, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace

WiringDiagram parse_wiring(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  // Trailing blank lines are tolerated; anything else after line 2 is not.
  while (!lines.empty() && tokenize(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, 1, "missing wire count");
  if (lines.size() > 2) throw ParseError(3, 1, "unexpected content after the swap line");

  auto head = tokenize(lines[0]);
  if (head.size() != 1) {
    throw ParseError(1, head.empty() ? 1 : head[1].column, "line 1 must hold exactly the wire count");
  }
  int n = parse_int(head[0], 1);
  if (n < 1 || n > kMaxWires) {
    throw ParseError(1, head[0].column, "wire count must be in [1, " + std::to_string(kMaxWires) + "]");
  }

  std::vector<Token> body = lines.size() > 1 ? tokenize(lines[1]) : std::vector<Token>{};
  std::vector<int> swaps;
  swaps.reserve(body.size());
  for (const Token& tok : body) {
    int t = parse_int(tok, 2);
    if (t < 1 || t > n - 1) {
      throw ParseError(2, tok.column, "track " + std::to_string(t) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    swaps.push_back(t);
  }
  try {
    return WiringDiagram::validate(n, std::move(swaps));
  } catch (const WiringError& e) {
    int column = 1;
    if (e.kind() == WiringErrorKind::DoubleCross) {
      column = body[e.step() - 1].column;
    } else if (e.kind() == WiringErrorKind::WrongLength) {
      column = body.empty() ? 1 : body.back().column + static_cast<int>(body.back().text.size());
    }
    throw ParseError(2, column, e.what());
  }
}

std::string format_swaps(const WiringDiagram& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.swaps().size(); ++i) {
    if (i) os << ' ';
    os << d.swaps()[i];
  }
  return os.str();
}

std::string format_wiring(const WiringDiagram& d) { return std::to_string(d.n()) + "\n" + format_swaps(d) + "\n"; }

}  // namespace psl
