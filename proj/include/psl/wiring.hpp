#pragma once

// Wiring diagrams: the combinatorial encoding of a simple Euclidean
// pseudoline arrangement used throughout the library.
//
// Conventions
//   * wires are numbered 1..n; at x = -inf wire i sits at position i
//     (position 1 is the top track);
//   * a swap value t in [1, n-1] exchanges the wires at positions t, t+1;
//   * steps are numbered 1..n(n-1)/2 in sweep order (left to right).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psl {

using WireId = int;
using WireMask = std::uint64_t;

inline constexpr int kMaxWires = 64;

inline WireMask wire_bit(WireId w) { return WireMask{1} << (w - 1); }

/// One crossing v_{a,b}. wire_a is the wire on top immediately before the
/// swap, wire_b the one below it.
struct Crossing {
  WireId wire_a = 0;
  WireId wire_b = 0;
  int step = 0;
  int track = 0;
};

enum class WiringErrorKind {
  InvalidWireCount,
  TrackOutOfRange,
  WrongLength,
  DoubleCross,
};

class WiringError : public std::runtime_error {
 public:
  WiringError(WiringErrorKind kind, std::string message, std::pair<WireId, WireId> pair = {0, 0},
              int step = 0)
      : std::runtime_error(std::move(message)), kind_(kind), pair_(pair), step_(step) {}

  WiringErrorKind kind() const { return kind_; }
  /// Offending pair (smaller wire first) for DoubleCross.
  std::pair<WireId, WireId> pair() const { return pair_; }
  /// 1-based step for DoubleCross / TrackOutOfRange.
  int step() const { return step_; }

 private:
  WiringErrorKind kind_;
  std::pair<WireId, WireId> pair_;
  int step_;
};

class WiringDiagram {
 public:
  /// Validates and builds. Throws WiringError.
  static WiringDiagram validate(int n, std::vector<int> swaps);

  int n() const { return n_; }
  int num_steps() const { return static_cast<int>(swaps_.size()); }
  const std::vector<int>& swaps() const { return swaps_; }
  /// Crossing at 1-based step s is crossings()[s - 1].
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing_at(int step) const { return crossings_[step - 1]; }

  /// Step at which wires p and q cross.
  int crossing_step(WireId p, WireId q) const;

  /// Order (top to bottom) of wires after `step` swaps; step 0 is the identity.
  std::vector<WireId> order_after(int step) const;

  /// Wires crossed by w, in left-to-right order.
  const std::vector<WireId>& local_sequence(WireId w) const { return local_[w - 1]; }
  /// Steps of the crossings on w, in left-to-right order.
  const std::vector<int>& wire_steps(WireId w) const { return wire_steps_[w - 1]; }

  friend bool operator==(const WiringDiagram& a, const WiringDiagram& b) {
    return a.n_ == b.n_ && a.swaps_ == b.swaps_;
  }

 private:
  WiringDiagram() = default;

  int n_ = 0;
  std::vector<int> swaps_;
  std::vector<Crossing> crossings_;
  std::vector<std::vector<WireId>> local_;
  std::vector<std::vector<int>> wire_steps_;
  std::vector<int> pair_step_;  // n*n table, 0 on the diagonal
};

/// Number of swaps of a complete diagram on n wires.
inline int full_length(int n) { return n * (n - 1) / 2; }

/// Same labelled arrangement, written as the lexicographically smallest
/// word of its commutation class (greedy over available tracks).
WiringDiagram normal_form(const WiringDiagram& d);

/// Top-bottom mirror: track t becomes n - t, wire i becomes n + 1 - i.
WiringDiagram mirror_top_bottom(const WiringDiagram& d);
/// Left-right mirror: the swap sequence read backwards, wires relabelled so
/// the diagram again starts from the identity.
WiringDiagram mirror_left_right(const WiringDiagram& d);

struct InducedSubarrangement {
  WiringDiagram diagram;
  /// parent_wire[i] is the parent wire of sub-wire i + 1.
  std::vector<WireId> parent_wire;
  /// sub_wire[w - 1] is the sub-wire of parent wire w, or 0 if dropped.
  std::vector<WireId> sub_wire;
  /// sub_step[s] for parent step s (index 0 unused): sub step or 0.
  std::vector<int> sub_step;
  /// parent_step[s] for sub step s (index 0 unused).
  std::vector<int> parent_step;
};

class EmptySubsetError : public std::invalid_argument {
 public:
  EmptySubsetError() : std::invalid_argument("induced subarrangement of an empty wire set") {}
};

InducedSubarrangement induced_subarrangement(const WiringDiagram& d, const std::vector<WireId>& keep);
InducedSubarrangement induced_subarrangement(const WiringDiagram& d, WireMask keep);

// ---- text format --------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Line 1: n. Line 2: space separated 1-based swap tracks.
WiringDiagram parse_wiring(std::string_view text);
std::string format_wiring(const WiringDiagram& d);
/// Swap tracks on one line (no n).
std::string format_swaps(const WiringDiagram& d);

}  // namespace psl
