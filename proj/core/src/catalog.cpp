#include "enriques/catalog.hpp"

#include <filesystem>

#include "enriques/errors.hpp"

namespace enriques {
namespace {

using nlohmann::json;
using Edges = std::vector<CurveGraph::LabeledEdge>;

void add_chain(Edges& edges, const std::vector<std::string>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.emplace_back(chain[i], chain[i + 1], 1);
}

ExpectedFact literature(std::string key, json value, std::string provenance) {
  return {std::move(key), std::move(value), FactSource::kLiterature, std::move(provenance)};
}

ExpectedFact derived(std::string key, json value, std::string provenance) {
  return {std::move(key), std::move(value), FactSource::kDerived, std::move(provenance)};
}

json characteristic(std::vector<std::string> classes) { return json{{"p", 2}, {"classes", std::move(classes)}}; }

// Ẽ8 fiber R2..RX (branch R5 at R4) with R11 attached to the simple end.
CatalogEntry e8_extra_special() {
  Edges edges;
  add_chain(edges, {"R2", "R3", "R4", "R6", "R7", "R8", "R9", "RX", "R11"});
  edges.emplace_back("R4", "R5", 1);
  CatalogEntry e{CurveGraph::from_labels(kE8ExtraSpecial, {"R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "RX", "R11"}, edges), {}};
  e.expected = {
      literature("fibrations", 1, "genus one fibration count, extra-special type E8"),
      literature("one_sequences", 1, "the single half-fiber class forms the only 1-sequence"),
      literature("two_sequences", 0, "no 2-sequence on extra-special type E8"),
      literature("characteristic", characteristic({"classical", "supersingular"}),
                 "additive half-fiber forces p = 2, classical or supersingular"),
      literature("vinberg_finite_index", true, "reflection group of the graph has finite index"),
  };
  return e;
}

// 8-chain R2..RX with branches R5 (third node) and R1 (seventh node).
CatalogEntry d8_extra_special() {
  Edges edges;
  add_chain(edges, {"R2", "R3", "R4", "R6", "R7", "R8", "R9", "RX"});
  edges.emplace_back("R4", "R5", 1);
  edges.emplace_back("R9", "R1", 1);
  CatalogEntry e{CurveGraph::from_labels(kD8ExtraSpecial, {"R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "RX", "R1"}, edges), {}};
  e.expected = {
      literature("fibrations", 3, "genus one fibration count, extra-special type D8"),
      literature("two_sequences", 2, "two distinct 2-sequences on extra-special type D8"),
      literature("three_sequences", 0, "both 2-sequences are non-extendable"),
      literature("characteristic", characteristic({"classical", "supersingular"}),
                 "additive half-fiber forces p = 2, classical or supersingular"),
      literature("vinberg_finite_index", true, "reflection group of the graph has finite index"),
  };
  return e;
}

Edges e7_edges() {
  Edges edges;
  add_chain(edges, {"R1", "R2", "R3", "R4", "R6", "R7", "R8", "R9", "RX"});
  edges.emplace_back("R4", "R5", 1);
  edges.emplace_back("RX", "R11", 2);
  return edges;
}

const std::vector<std::string> kE7Vertices = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "RX", "R11"};

// 9-chain R1..RX with branch R5 at R4 and a double edge RX=R11.
CatalogEntry e7_extra_special() {
  CatalogEntry e{CurveGraph::from_labels(kE7ExtraSpecial, kE7Vertices, e7_edges()), {}};
  e.expected = {
      literature("fibrations", 2, "genus one fibration count, extra-special type E7"),
      literature("two_sequences", 1, "a single 2-sequence on extra-special type E7"),
      literature("three_sequences", 0, "the 2-sequence is non-extendable"),
      literature("characteristic", characteristic({"classical"}),
                 "two additive half-fibers in one fibration force p = 2 and a classical surface"),
      literature("vinberg_finite_index", true, "reflection group of the graph has finite index"),
  };
  return e;
}

// The E7 graph with an extra edge R9-R11 closing a triangle on RX=R11.
CatalogEntry e7_two() {
  Edges edges = e7_edges();
  edges.emplace_back("R9", "R11", 1);
  CatalogEntry e{CurveGraph::from_labels(kE7Two, kE7Vertices, edges), {}};
  e.expected = {
      derived("fibrations", 3, "grouped parabolic subdiagrams, cross-checked by bounded isotropic enumeration"),
      literature("four_sequences", 0, "4-sequence count on the E7-2 graph"),
      literature("non_extendable_three_sequence", true, "some 3-sequence does not extend to a 4-sequence"),
      literature("vinberg_finite_index", true, "reflection group of the graph has finite index"),
  };
  return e;
}

// 8-cycle R8,R21..R27 with the chord path R8-R11=A=B=C-R24.
CatalogEntry type_i() {
  Edges edges;
  add_chain(edges, {"R8", "R21", "R22", "R23", "R24", "R25", "R26", "R27", "R8"});
  edges.emplace_back("R8", "R11", 1);
  edges.emplace_back("R11", "A", 2);
  edges.emplace_back("A", "B", 2);
  edges.emplace_back("B", "C", 2);
  edges.emplace_back("C", "R24", 1);
  CatalogEntry e{CurveGraph::from_labels(kTypeI, {"R8", "R21", "R22", "R23", "R24", "R25", "R26", "R27", "R11", "A", "B", "C"}, edges), {}};
  e.expected = {
      derived("fibrations", 9, "grouped parabolic subdiagrams, cross-checked by bounded isotropic enumeration"),
      literature("non_extendable_three_sequence", true, "some 3-sequence does not extend to a 4-sequence"),
      literature("half_fiber_I8", true, "the 8-cycle is an I8 half-fiber"),
      literature("vinberg_finite_index", true, "reflection group of the graph has finite index"),
  };
  return e;
}

}  // namespace

const ExpectedFact& CatalogEntry::fact(const std::string& key) const {
  for (const auto& f : expected)
    if (f.key == key) return f;
  throw LookupError("catalog entry '" + graph.name() + "' has no expected fact '" + key + "'");
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {kE8ExtraSpecial, kD8ExtraSpecial, kE7ExtraSpecial, kTypeI, kE7Two};
  return names;
}

bool is_extra_special_name(const std::string& name) {
  return name == kE8ExtraSpecial || name == kD8ExtraSpecial || name == kE7ExtraSpecial;
}

CatalogEntry catalog(const std::string& name) {
  if (name == kE8ExtraSpecial) return e8_extra_special();
  if (name == kD8ExtraSpecial) return d8_extra_special();
  if (name == kE7ExtraSpecial) return e7_extra_special();
  if (name == kTypeI) return type_i();
  if (name == kE7Two) return e7_two();
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw LookupError("unknown catalog entry '" + name + "' (valid: " + valid + ")");
}

CatalogEntry catalog_from_directory(const std::string& dir, const std::string& name) {
  CatalogEntry entry = catalog(name);
  const auto path = std::filesystem::path(dir) / (name + ".json");
  if (std::filesystem::exists(path)) entry.graph = load_graph_file(path.string());
  return entry;
}

std::string to_string(FactSource source) {
  return source == FactSource::kLiterature ? "literature" : "derived";
}

}  // namespace enriques
