#include "psl/sweep.hpp"

#include <omp.h>

#include "psl/analysis.hpp"
#include "psl/enumeration.hpp"
#include "psl/properties.hpp"

namespace psl {

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::CellStructure:
      return "cell-structure";
    case Suite::CountingTheorem:
      return "triangle-quadrilateral-count";
    case Suite::TrianglePerWire:
      return "triangle-per-wire";
    case Suite::CriticalEdgeBound:
      return "critical-edge-bound";
    case Suite::ImStructure:
      return "im-structure";
    case Suite::TriangularRegion:
      return "triangular-region";
    case Suite::UncrossedEdge:
      return "uncrossed-edge";
    case Suite::NoAdjacentTriangles:
      return "no-adjacent-triangles";
  }
  return "?";
}

bool SweepResult::passed() const {
  for (const SuiteTally& t : suites) {
    if (t.failed > 0) return false;
  }
  return true;
}

void sweep_diagram(const WiringDiagram& d, SweepResult& result) {
  const CellComplex c(d);
  ++result.words;

  auto record = [&](Suite s, const Violation& v) {
    SuiteTally& t = result.suites[static_cast<int>(s)];
    ++t.checked;
    if (!v) return;
    ++t.failed;
    if (!t.first_failure) t.first_failure = Counterexample{d.swaps(), *v};
  };

  record(Suite::CellStructure, check_cell_structure(c));
  if (c.n() >= 3) record(Suite::TrianglePerWire, check_triangle_per_wire(c));
  record(Suite::CriticalEdgeBound, check_critical_edge_bound(c));
  std::size_t region_instances = 0, uncrossed_instances = 0;
  record(Suite::TriangularRegion, check_triangular_region_lemma(c, &region_instances));
  record(Suite::UncrossedEdge, check_uncrossed_edge_lemma(c, &uncrossed_instances));
  result.suites[static_cast<int>(Suite::TriangularRegion)].instances += region_instances;
  result.suites[static_cast<int>(Suite::UncrossedEdge)].instances += uncrossed_instances;
  record(Suite::NoAdjacentTriangles, check_no_adjacent_triangles(c));

  if (ge5_faces(c).size() == 1) {
    ++result.one_ge5;
    ++result.k_histogram[criticality_k(c).k];
    record(Suite::CountingTheorem, check_counting_theorem(c));
    if (is_in_im(c).in_im) {
      ++result.im;
      record(Suite::ImStructure, check_im_structure(c));
    }
  }
  if (!result.single_triangle_wire && has_wire_with_single_triangle(c)) result.single_triangle_wire = d.swaps();
}

namespace {

/// Appends `later` to `acc`; counterexamples and witnesses of `acc` come
/// first in word order and win.
void merge_into(SweepResult& acc, const SweepResult& later) {
  acc.words += later.words;
  acc.one_ge5 += later.one_ge5;
  acc.im += later.im;
  for (auto [k, cnt] : later.k_histogram) acc.k_histogram[k] += cnt;
  if (!acc.single_triangle_wire) acc.single_triangle_wire = later.single_triangle_wire;
  for (int i = 0; i < kNumSuites; ++i) {
    acc.suites[i].checked += later.suites[i].checked;
    acc.suites[i].instances += later.suites[i].instances;
    acc.suites[i].failed += later.suites[i].failed;
    if (!acc.suites[i].first_failure) acc.suites[i].first_failure = later.suites[i].first_failure;
  }
}

}  // namespace

SweepResult sweep_serial(int n) {
  SweepResult result;
  result.n = n;
  WordGenerator gen(n);
  while (gen.next()) sweep_diagram(WiringDiagram::validate(n, gen.word()), result);
  return result;
}

SweepResult sweep_parallel(int n, int jobs) {
  if (jobs <= 0) jobs = omp_get_max_threads();
  const auto prefixes = word_prefixes(n, partition_depth(n, jobs));
  std::vector<SweepResult> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    WordGenerator gen(n, prefixes[i]);
    while (gen.next()) sweep_diagram(WiringDiagram::validate(n, gen.word()), parts[i]);
  }
  SweepResult result;
  result.n = n;
  for (const SweepResult& part : parts) merge_into(result, part);
  return result;
}

}  // namespace psl
