#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "enriques/curve_graph.hpp"

namespace enriques {

enum class RootType { A, D, E };

// A connected Dynkin diagram; `vertices` lists graph vertices in Bourbaki order.
struct AdeComponent {
  RootType type = RootType::A;
  std::size_t rank = 0;
  std::vector<std::size_t> vertices;

  std::string name() const;
  Integer determinant() const;  // |det| of the root lattice
};

struct AdeDiagram {
  std::vector<AdeComponent> components;  // sorted by smallest vertex

  std::string name() const;  // e.g. "A1+E7"; "0" for the empty diagram
  std::size_t rank() const;
  Integer determinant() const;
  // (component, Bourbaki position) for a graph vertex; LookupError if absent.
  std::pair<std::size_t, std::size_t> position_of(std::size_t vertex) const;
};

// ADE decomposition of the induced subdiagram. ClassificationError carrying a
// vector with nonnegative square when the induced Gram is not negative definite.
AdeDiagram classify_root_diagram(const CurveGraph& g, const std::vector<std::size_t>& subset);

struct AffineType {
  RootType type = RootType::A;
  std::size_t rank = 0;
  std::string name() const;  // "~A7", "~D8", "~E8"
  friend bool operator==(const AffineType&, const AffineType&) = default;
};

// Connected parabolic subdiagram with its null-class multiplicities.
struct AffineDiagram {
  std::vector<std::size_t> vertices;  // increasing graph indices
  std::vector<Integer> marks;         // positive, gcd 1, parallel to `vertices`
  AffineType base;

  std::size_t rank() const { return vertices.size() - 1; }
  // Null class in graph-vertex coordinates (length = graph size).
  IntVector null_class(std::size_t graph_size) const;
  bool contains(std::size_t vertex) const;
  friend bool operator==(const AffineDiagram& a, const AffineDiagram& b) {
    return a.vertices == b.vertices && a.marks == b.marks && a.base == b.base;
  }
};

// Affine type from the mark multiset; StructuralError if it matches no affine
// ADE diagram.
AffineType affine_type_from_marks(const std::vector<Integer>& marks);

// Validates that `subset` induces a connected parabolic diagram with a
// one-dimensional radical; StructuralError otherwise.
AffineDiagram make_affine_diagram(const CurveGraph& g, std::vector<std::size_t> subset);

// All connected parabolic subdiagrams, sorted by vertex list. These are
// automatically maximal among connected parabolic subdiagrams.
std::vector<AffineDiagram> find_parabolic_subdiagrams(const CurveGraph& g);

struct KodairaSymbol {
  std::string name;  // "I8", "I2", "III", "II*", "I4*", ...
  bool multiplicative = false;
};

struct KodairaLabel {
  std::vector<KodairaSymbol> candidates;
  AffineDiagram affine;

  std::string str() const;  // "II*", "I2|III"
  bool may_be_multiplicative() const;
  bool may_be_additive() const;
};

KodairaLabel kodaira_label(const AffineDiagram& d);

// Standard diagrams (vertices v1..vn in Bourbaki order) and their lattices
// in the negative definite convention.
CurveGraph dynkin_graph(RootType type, std::size_t rank);
CurveGraph affine_dynkin_graph(RootType type, std::size_t rank);
IntegralLattice root_lattice(const std::vector<AdeComponent>& components);
IntegralLattice root_lattice(RootType type, std::size_t rank);

// Every multiset of ADE components of total rank `rank` (E only up to 8,
// D from 4, A from 1). Components carry no vertices.
std::vector<std::vector<AdeComponent>> root_systems_of_rank(std::size_t rank);

std::string to_string(RootType t);

}  // namespace enriques
