#include "app.hpp"

#include <chrono>
#include <ctime>
#include <algorithm>
#include <functional>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "telegraph/version.hpp"

namespace telegraph::cli {

namespace {

struct Common {
  std::string csv;
  bool stamp = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& command, json params, const Common& common) {
  json m = {{"tool", "telegraph"},
            {"version", kVersion},
            {"schema_version", kSchemaVersion},
            {"command", command},
            {"parameters", std::move(params)},
            {"timestamp", nullptr}};
  if (common.stamp) m["timestamp"] = utc_timestamp();
  return m;
}

void add_process(CLI::App* cmd, ProcessOptions& p) {
  cmd->add_option("--l0", p.l0, "switching rate out of state 0")->capture_default_str();
  cmd->add_option("--l1", p.l1, "switching rate out of state 1")->capture_default_str();
  cmd->add_option("--g0", p.g0, "velocity in state 0")->capture_default_str();
  cmd->add_option("--g1", p.g1, "velocity in state 1 (< g0)")->capture_default_str();
}

void add_common(CLI::App* cmd, Common& c, bool csv) {
  if (csv) cmd->add_option("--csv", c.csv, "also write the main table as CSV to this file");
  cmd->add_flag("--stamp", c.stamp, "record the wall-clock time in the manifest");
}

// Rebuilds a command line from a manifest written by an earlier run.
std::vector<std::string> replay_args(const json& m) {
  std::vector<std::string> args{m.at("command").get<std::string>()};
  for (const auto& [key, value] : m.at("parameters").items()) {
    args.push_back("--" + key);
    args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  return args;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laws of the asymmetric telegraph process: densities, first passage, "
               "meanders, extrema, validation."};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  DensityOptions density;
  FptOptions fpt;
  MeanderOptions meander;
  ExtremaOptions extrema;
  ValidateOptions validate;
  std::string replay_file;

  auto* c_density = app.add_subcommand("density", "law of the position at time t");
  add_process(c_density, density.process);
  c_density->add_option("--t", density.t, "time")->capture_default_str();
  c_density->add_option("--i", density.i, "initial state (0 or 1)")->capture_default_str();
  c_density->add_option("--grid", density.grid, "number of x points")->capture_default_str();
  c_density->add_option("--n", density.n, "restrict to exactly n switches");
  c_density->add_option("--per-n", density.per_n, "add columns for n = 1..N")->capture_default_str();
  add_common(c_density, common, true);

  auto* c_fpt = app.add_subcommand("fpt", "law of the first passage time through y");
  add_process(c_fpt, fpt.process);
  c_fpt->add_option("--y", fpt.y, "threshold (nonzero)")->capture_default_str();
  c_fpt->add_option("--i", fpt.i, "initial state (0 or 1)")->capture_default_str();
  c_fpt->add_option("--tmax", fpt.tmax, "right end of the time grid");
  c_fpt->add_option("--grid", fpt.grid, "number of time points")->capture_default_str();
  c_fpt->add_option("--n", fpt.n, "restrict to exactly n switches before passage");
  add_common(c_fpt, common, true);

  auto* c_meander = app.add_subcommand("meander", "position law on the meander event");
  add_process(c_meander, meander.process);
  c_meander->add_option("--sign", meander.sign, "positive or negative")->capture_default_str();
  c_meander->add_option("--t", meander.t, "time")->capture_default_str();
  c_meander->add_option("--grid", meander.grid, "number of x points")->capture_default_str();
  c_meander->add_option("--n", meander.n, "restrict to exactly n switches");
  add_common(c_meander, common, true);

  auto* c_extrema = app.add_subcommand("extrema", "joint law of the running extremum");
  add_process(c_extrema, extrema.process);
  c_extrema->add_option("--kind", extrema.kind, "min or max")->capture_default_str();
  c_extrema->add_option("--i", extrema.i, "initial state (0 or 1)")->capture_default_str();
  c_extrema->add_option("--t", extrema.t, "time")->capture_default_str();
  c_extrema->add_option("--grid", extrema.grid, "number of x points")->capture_default_str();
  c_extrema->add_option("--sgrid", extrema.sgrid, "interior (s, y) points per axis")
      ->capture_default_str();
  c_extrema->add_option("--x", extrema.x, "terminal position for the (s, y) grid")
      ->capture_default_str();
  c_extrema->add_option("--n", extrema.n, "restrict to exactly n switches");
  add_common(c_extrema, common, true);

  auto* c_validate = app.add_subcommand("validate", "run a validation suite");
  c_validate
      ->add_option("--suite", validate.suite,
                   "normalization, integral-equations, duality, mc-ks, kac, extrema or all")
      ->required();
  c_validate->add_option("--seed", validate.seed, "random seed")->capture_default_str();
  c_validate->add_option("--paths", validate.paths, "Monte Carlo paths")->capture_default_str();
  c_validate->add_option("--kmax", validate.kmax, "largest Kac scale")->capture_default_str();
  c_validate->add_option("--threads", validate.threads, "worker threads, 0 = all cores")
      ->capture_default_str();
  add_common(c_validate, common, false);

  auto* c_replay = app.add_subcommand("replay", "re-run the command recorded in an output file");
  c_replay->add_option("file", replay_file, "JSON or CSV output of an earlier run")->required();
  c_replay->add_option("--csv", common.csv, "write the CSV table to this file");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_replay->parsed()) {
      std::vector<std::string> again = replay_args(read_manifest(replay_file));
      if (!common.csv.empty()) {
        again.push_back("--csv");
        again.push_back(common.csv);
      }
      return run(std::move(again), out, err);
    }

    std::string name;
    json params;
    CommandOutput result;
    if (c_density->parsed()) {
      name = "density";
      params = parameters(density);
      result = cmd_density(density);
    } else if (c_fpt->parsed()) {
      name = "fpt";
      params = parameters(fpt);
      result = cmd_fpt(fpt);
    } else if (c_meander->parsed()) {
      name = "meander";
      params = parameters(meander);
      result = cmd_meander(meander);
    } else if (c_extrema->parsed()) {
      name = "extrema";
      params = parameters(extrema);
      result = cmd_extrema(extrema);
    } else {
      name = "validate";
      params = parameters(validate);
      result = cmd_validate(validate);
    }

    const json m = manifest(name, std::move(params), common);
    if (!common.csv.empty()) write_csv(common.csv, m, result.table);
    const json doc = {{"manifest", m}, {"result", std::move(result.result)}};
    out << doc.dump(2) << '\n';
    return result.exit_code;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace telegraph::cli
