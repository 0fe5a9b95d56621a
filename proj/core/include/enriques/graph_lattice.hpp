#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "enriques/curve_graph.hpp"
#include "enriques/lattice.hpp"

namespace enriques {

// Where class computations for a graph take place.
//
// When the vertex Gram has rank 10 and signature (1,9) the vertex classes
// span a hyperbolic lattice M = Z^n / radical, which is saturated to the even
// unimodular lattice N containing it. Otherwise the free lattice on the
// vertices is used as is and a warning is recorded.
struct GraphLattice {
  CurveGraph graph;
  IntegralLattice vertex_lattice;
  Signature vertex_signature;
  std::size_t span_rank = 0;
  bool full_rank = false;  // span is hyperbolic of rank 10

  IntegralLattice span;           // M
  IntMatrix vertex_to_span;       // column i: vertex i in M coordinates
  std::optional<OverlatticeEmbedding> saturation;  // M inside N
  std::string saturation_note;    // how an ambiguous saturation was resolved
  std::shared_ptr<const IntegralLattice> ambient;  // N, or M when unsaturated

  std::vector<IntVector> roots;   // vertex classes in ambient coordinates
  std::vector<std::string> warnings;

  bool saturated() const { return saturation.has_value(); }
  // Class of an integer combination of vertices, in ambient coordinates.
  IntVector to_ambient(const IntVector& vertex_combination) const;
  LatticeVector vector(IntVector ambient_coords) const;
};

// Annotations consulted when several unimodular overlattices exist:
//   "half_fibers":   [[label, ...], ...]  supports whose null class is primitive
//   "simple_fibers": [[label, ...], ...]  supports whose null class is divisible by 2
// Remaining ambiguity is accepted when all candidates are related by graph
// automorphisms; otherwise AmbiguityError.
GraphLattice analyze_graph_lattice(const CurveGraph& g);

}  // namespace enriques
