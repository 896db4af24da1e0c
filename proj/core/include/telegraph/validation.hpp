#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace telegraph {

enum class Suite { Normalization, IntegralEquations, Duality, MonteCarloKs, Kac, Extrema };

/// Names as used on the command line: normalization, integral-equations,
/// duality, mc-ks, kac, extrema.
std::string_view to_string(Suite suite) noexcept;
/// Throws std::invalid_argument for an unknown name.
Suite suite_from_string(std::string_view name);
std::vector<Suite> all_suites();

struct ValidationOptions {
  std::uint64_t seed = 42;
  std::uint64_t paths = 100000;
  int kmax = 16;
  unsigned threads = 1;
};

/// One property check. passed means `measured <relation> tolerance`.
struct CheckResult {
  std::string name;
  std::string relation;  // "<=", "<" or ">"
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ValidationReport {
  Suite suite = Suite::Normalization;
  std::vector<CheckResult> checks;
  /// Named numeric sequences backing the checks (e.g. per-scale errors).
  std::vector<std::pair<std::string, std::vector<double>>> series;

  bool passed() const noexcept;
};

ValidationReport run_suite(Suite suite, const ValidationOptions& options = {});

}  // namespace telegraph
