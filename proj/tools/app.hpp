#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace telegraph::cli {

inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. JSON goes to out,
/// diagnostics to err. Returns 0, 1 (validation failure or runtime error)
/// or 2 (usage error).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace telegraph::cli
