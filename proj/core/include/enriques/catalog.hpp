#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "enriques/curve_graph.hpp"

namespace enriques {

enum class FactSource {
  kLiterature,  // stated in the published classification
  kDerived,     // computed here and frozen after a brute-force cross-check
};

struct ExpectedFact {
  std::string key;
  nlohmann::json value;
  FactSource source = FactSource::kLiterature;
  std::string provenance;
};

struct CatalogEntry {
  CurveGraph graph;
  std::vector<ExpectedFact> expected;

  // LookupError when the key is absent.
  const ExpectedFact& fact(const std::string& key) const;
};

inline constexpr const char* kE8ExtraSpecial = "E8-extra-special";
inline constexpr const char* kD8ExtraSpecial = "D8-extra-special";
inline constexpr const char* kE7ExtraSpecial = "E7-extra-special";
inline constexpr const char* kTypeI = "type-I";
inline constexpr const char* kE7Two = "E7-2";

const std::vector<std::string>& catalog_names();
bool is_extra_special_name(const std::string& name);

// Built-in entry; LookupError listing the valid names otherwise.
CatalogEntry catalog(const std::string& name);

// Entry whose graph is read from `<dir>/<name>.json`, keeping the built-in
// expected facts. Falls back to the built-in graph when the file is absent.
CatalogEntry catalog_from_directory(const std::string& dir, const std::string& name);

std::string to_string(FactSource source);

}  // namespace enriques
