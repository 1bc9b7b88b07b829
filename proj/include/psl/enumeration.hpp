#pragma once

// Exhaustive generation of wiring diagrams for small n. Words are produced
// in lexicographic order of their track sequences; at every step the only
// admissible tracks are those whose two wires have not crossed yet.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "psl/cell_complex.hpp"

namespace psl {

inline constexpr int kMaxEnumerationWires = 7;

class NTooLargeError : public std::invalid_argument {
 public:
  explicit NTooLargeError(int n)
      : std::invalid_argument("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationWires) +
                              ", got " + std::to_string(n)) {}
};

enum class Filter { None, OneGe5, Im };

/// "one-ge5" | "im"; throws std::invalid_argument otherwise.
Filter parse_filter(std::string_view name);

bool passes_filter(const CellComplex& c, Filter filter);

/// Depth-first generator of the completions of a prefix, in lexicographic
/// order. With `length` below n(n-1)/2 it yields the admissible prefixes
/// of that length instead.
class WordGenerator {
 public:
  explicit WordGenerator(int n, std::vector<int> prefix = {}, int length = -1);

  /// Advances to the next word; false when exhausted.
  bool next();
  const std::vector<int>& word() const { return word_; }

 private:
  void push(int t);
  void pop();

  int n_;
  int base_;
  int length_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> order_;
  std::vector<int> word_;
  std::vector<int> cursor_;
};

struct EnumerationOptions {
  int n = 0;
  Filter filter = Filter::None;
  bool dedup = false;
  /// Worker threads; 0 uses the OpenMP default.
  int jobs = 0;
};

/// Lazy stream over the diagrams selected by `options` (the `jobs` field is
/// ignored). In dedup mode the first word of each isomorphism class, in
/// lexicographic order, represents the class.
class EnumerationStream {
 public:
  explicit EnumerationStream(const EnumerationOptions& options);
  ~EnumerationStream();
  EnumerationStream(EnumerationStream&&) noexcept;
  EnumerationStream& operator=(EnumerationStream&&) noexcept;

  std::optional<WiringDiagram> next();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// Same sequence as draining an EnumerationStream, computed in parallel over
/// word prefixes and merged in prefix order.
std::vector<WiringDiagram> enumerate_simple(const EnumerationOptions& options);

std::uint64_t count_simple(const EnumerationOptions& options);

/// Admissible prefixes of the given length, in lexicographic order.
std::vector<std::vector<int>> word_prefixes(int n, int length);

/// Prefix length giving enough independent work items for `threads`.
int partition_depth(int n, int threads);

}  // namespace psl
