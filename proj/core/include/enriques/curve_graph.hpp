#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "enriques/lattice.hpp"

namespace enriques {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  int multiplicity = 1;  // 1 or 2
};

// Dual graph of a finite set of (-2)-curves. Vertex order is significant only
// as the coordinate order of the associated Gram matrix.
class CurveGraph {
 public:
  using LabeledEdge = std::tuple<std::string, std::string, int>;

  CurveGraph() = default;
  // Throws StructuralError on self-loops, repeated pairs, multiplicities
  // outside {1,2}, duplicate or empty labels, or out-of-range endpoints.
  CurveGraph(std::string name, std::vector<std::string> vertices, std::vector<Edge> edges,
             nlohmann::json annotations = nlohmann::json::object());

  static CurveGraph from_labels(std::string name, std::vector<std::string> vertices,
                                const std::vector<LabeledEdge>& edges,
                                nlohmann::json annotations = nlohmann::json::object());

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const nlohmann::json& annotations() const { return annotations_; }
  std::size_t size() const { return vertices_.size(); }

  // LookupError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  int multiplicity(std::size_t i, std::size_t j) const { return adjacency_[i * size() + j]; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return neighbors_[i]; }
  bool is_connected() const;

  CurveGraph induced(const std::vector<std::size_t>& subset, std::string name) const;
  CurveGraph without_vertex(std::size_t i) const;

  friend bool operator==(const CurveGraph& a, const CurveGraph& b);

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  nlohmann::json annotations_;
  std::vector<int> adjacency_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

// Reads the JSON graph format
//   {"name": str, "vertices": [str], "edges": [[str, str, int]], "annotations": {...}}
// Errors carry the line of the offending element.
CurveGraph parse_graph(std::string_view text);
CurveGraph load_graph_file(const std::string& path);

// Canonical text form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const CurveGraph& g);

// Diagonal -2, off-diagonal entries the edge multiplicities.
IntegralLattice gram_from_graph(const CurveGraph& g);

// Inverse of gram_from_graph: StructuralError unless the diagonal is -2 and
// the off-diagonal entries lie in {0,1,2}.
CurveGraph graph_from_gram(const IntegralLattice& lattice, std::string name = "reconstructed");

// DOT document; a double edge is drawn as two parallel edges.
std::string export_dot(const CurveGraph& g);

// Vertex permutations preserving all multiplicities (perm[i] = image of i).
std::vector<std::vector<std::size_t>> graph_automorphisms(const CurveGraph& g);

}  // namespace enriques
