#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "output.hpp"
#include "telegraph/params.hpp"

namespace telegraph::cli {

struct ProcessOptions {
  double l0 = 1.0;
  double l1 = 1.0;
  double g0 = 1.0;
  double g1 = -1.0;

  TelegraphParams params() const { return TelegraphParams(l0, l1, g0, g1); }
};

struct DensityOptions {
  ProcessOptions process;
  double t = 1.0;
  int i = 0;
  int grid = 101;
  std::optional<int> n;
  int per_n = 0;  // extra columns p(t,x;1..per_n)
};

struct FptOptions {
  ProcessOptions process;
  double y = 1.0;
  int i = 0;
  std::optional<double> tmax;
  int grid = 101;
  std::optional<int> n;
};

struct MeanderOptions {
  ProcessOptions process;
  std::string sign = "positive";
  double t = 1.0;
  int grid = 101;
  std::optional<int> n;
};

struct ExtremaOptions {
  ProcessOptions process;
  std::string kind = "min";
  int i = 0;
  double t = 1.0;
  int grid = 41;
  int sgrid = 21;
  double x = 0.0;
  std::optional<int> n;
};

struct ValidateOptions {
  std::string suite;
  std::uint64_t seed = 42;
  std::uint64_t paths = 100000;
  int kmax = 16;
  unsigned threads = 1;
};

struct CommandOutput {
  json result;
  Table table;
  int exit_code = 0;
};

json parameters(const DensityOptions& o);
json parameters(const FptOptions& o);
json parameters(const MeanderOptions& o);
json parameters(const ExtremaOptions& o);
/// Thread count is left out: it never changes the output.
json parameters(const ValidateOptions& o);

CommandOutput cmd_density(const DensityOptions& o);
CommandOutput cmd_fpt(const FptOptions& o);
CommandOutput cmd_meander(const MeanderOptions& o);
CommandOutput cmd_extrema(const ExtremaOptions& o);
CommandOutput cmd_validate(const ValidateOptions& o);

}  // namespace telegraph::cli
