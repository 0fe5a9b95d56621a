#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "enriques/fiber_types.hpp"
#include "enriques/graph_lattice.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

// v + (v.r) r. DomainError unless r^2 = -2.
IntVector reflect(const IntegralLattice& lattice, const IntVector& v, const IntVector& root);
LatticeVector reflect(const LatticeVector& v, const LatticeVector& root);

enum class ReflectionOrder {
  SmallestIndex,  // first root with negative pairing
  LargestIndex,
  MostNegative,   // most negative pairing, smallest index on ties
};

struct ReduceOptions {
  ReflectionOrder order = ReflectionOrder::SmallestIndex;
  // Vector with positive square pairing positively with every root; computed
  // by interior_vector when absent.
  std::optional<IntVector> interior;
  std::size_t max_steps = 1'000'000;
};

struct ReductionTrace {
  IntVector input;
  IntVector nef_rep;
  IntVector root_sum;               // coefficient per root, nonnegative
  std::vector<std::size_t> steps;   // root index of each reflection
};

// h with h^2 > 0 and h.r > 0 for all roots, oriented so that orient.h >= 0
// when the roots do not span. DomainError when no such vector is found.
IntVector interior_vector(const IntegralLattice& lattice, const std::vector<IntVector>& roots,
                          const IntVector& orient);

// Reflects v in roots with negative pairing until it pairs nonnegatively with
// all of them. DomainError when v^2 < 0 or v.h < 0; InternalError when the
// step bound is exceeded.
ReductionTrace nef_reduce(const IntegralLattice& lattice, const std::vector<IntVector>& roots, const IntVector& v,
                          const ReduceOptions& options = {});
ReductionTrace nef_reduce(const GraphLattice& gl, const IntVector& v, const ReduceOptions& options = {});
ReductionTrace nef_reduce(const LatticeVector& v, const CurveGraph& g, const ReduceOptions& options = {});

struct VinbergEvidence {
  bool finite_index = false;
  std::size_t span_rank = 0;
  Signature signature;
  std::vector<AffineDiagram> parabolics;
  // For each parabolic: indices of pairwise disjoint, non-adjacent parabolics
  // containing it with total rank 8; empty when none exists.
  std::vector<std::vector<std::size_t>> completions;
  std::string reason;
};

// Restricted combinatorial form of Vinberg's criterion for rank-10 hyperbolic
// spans: true iff the span has rank 10 and every connected parabolic
// subdiagram lies in a parabolic subdiagram of rank 8. A rank-deficient span
// gives false; a rank-10 span of the wrong signature is a DomainError.
VinbergEvidence vinberg_finite_index(const CurveGraph& g);

struct CompletenessReport {
  std::string graph;
  VinbergEvidence evidence;
  std::string statement;
};

// RefusalError carrying the failing evidence when the criterion does not hold.
CompletenessReport curve_completeness_check(const CurveGraph& g);

std::string to_string(ReflectionOrder o);

}  // namespace enriques
