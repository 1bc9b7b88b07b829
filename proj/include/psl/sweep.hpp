#pragma once

// Exhaustive property sweeps: every raw word for a given n is checked
// against each structural property. The serial sweep is the reference; the
// parallel sweep splits the words by prefix and merges per-prefix results in
// prefix order, so both return identical results.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psl/cell_complex.hpp"

namespace psl {

enum class Suite {
  CellStructure,
  CountingTheorem,
  TrianglePerWire,
  CriticalEdgeBound,
  ImStructure,
  TriangularRegion,
  UncrossedEdge,
  NoAdjacentTriangles,
};

inline constexpr int kNumSuites = 8;

const char* suite_name(Suite s);

struct Counterexample {
  std::vector<int> swaps;
  std::string message;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SuiteTally {
  /// Diagrams the property applied to.
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  /// Configurations meeting the hypothesis (region and uncrossed-edge suites only).
  std::uint64_t instances = 0;
  std::optional<Counterexample> first_failure;

  friend bool operator==(const SuiteTally&, const SuiteTally&) = default;
};

struct SweepResult {
  int n = 0;
  std::uint64_t words = 0;
  std::uint64_t one_ge5 = 0;
  std::uint64_t im = 0;
  /// k -> number of words with exactly one (>=5)-gon and that criticality.
  std::map<int, std::uint64_t> k_histogram;
  /// First word with a wire that carries an edge of exactly one triangle.
  std::optional<std::vector<int>> single_triangle_wire;
  std::array<SuiteTally, kNumSuites> suites{};

  const SuiteTally& tally(Suite s) const { return suites[static_cast<int>(s)]; }
  bool passed() const;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Runs every suite on one diagram and folds the outcome into `result`.
void sweep_diagram(const WiringDiagram& d, SweepResult& result);

SweepResult sweep_serial(int n);

/// jobs = 0 uses the OpenMP default.
SweepResult sweep_parallel(int n, int jobs = 0);

}  // namespace psl
