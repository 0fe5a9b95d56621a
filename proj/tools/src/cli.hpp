#pragma once

#include <ostream>

namespace enriques::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `enriques` tool. Reads ENRIQUES_CATALOG_DIR for catalog
// overrides. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace enriques::cli
