#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace enriques::cli {

enum class ClaimStatus { Pass, Fail, DerivedFrozen };

struct ClaimResult {
  std::string claim_id;
  std::string citation;
  nlohmann::json expected;
  nlohmann::json computed;
  ClaimStatus status = ClaimStatus::Fail;
  std::string detail;
};

struct ClaimOptions {
  bool oracle = false;            // re-verify derived values by brute force
  std::string catalog_dir;        // empty: built-in catalog graphs
};

// Fixed claim-id order.
std::vector<ClaimResult> run_claims(const ClaimOptions& options);

bool passed(const ClaimResult& c);
std::string to_string(ClaimStatus s);
nlohmann::json to_json(const ClaimResult& c);

// The checked-in derived-value manifest, embedded at build time.
const nlohmann::json& derived_manifest();

}  // namespace enriques::cli
