#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "telegraph/densities.hpp"
#include "telegraph/extrema.hpp"
#include "telegraph/first_passage.hpp"
#include "telegraph/meander.hpp"
#include "telegraph/validation.hpp"

namespace telegraph::cli {

namespace {

json process_json(const ProcessOptions& p) {
  return {{"l0", p.l0}, {"l1", p.l1}, {"g0", p.g0}, {"g1", p.g1}};
}

void put_optional(json& j, const char* key, const std::optional<int>& v) {
  if (v) j[key] = *v;
}

void require_count(const std::optional<int>& n) {
  if (n && *n < 0) throw std::invalid_argument("--n must be non-negative");
}

json interval_json(const Interval& s) { return json::array({s.lo, s.hi}); }

MeanderSign parse_sign(const std::string& s) {
  if (s == "positive") return MeanderSign::Positive;
  if (s == "negative") return MeanderSign::Negative;
  throw std::invalid_argument("--sign must be positive or negative");
}

ExtremumKind parse_kind(const std::string& s) {
  if (s == "min") return ExtremumKind::Min;
  if (s == "max") return ExtremumKind::Max;
  throw std::invalid_argument("--kind must be min or max");
}

json law_summary(const MixedLaw& law) {
  const double total = law.total_mass();
  return {{"atoms", to_json(law.atoms())},
          {"support", interval_json(law.support())},
          {"total_mass", total},
          {"defect", 1.0 - total}};
}

}  // namespace

json parameters(const DensityOptions& o) {
  json j = process_json(o.process);
  j.update({{"t", o.t}, {"i", o.i}, {"grid", o.grid}, {"per-n", o.per_n}});
  put_optional(j, "n", o.n);
  return j;
}

json parameters(const FptOptions& o) {
  json j = process_json(o.process);
  j.update({{"y", o.y}, {"i", o.i}, {"grid", o.grid}});
  if (o.tmax) j["tmax"] = *o.tmax;
  put_optional(j, "n", o.n);
  return j;
}

json parameters(const MeanderOptions& o) {
  json j = process_json(o.process);
  j.update({{"sign", o.sign}, {"t", o.t}, {"grid", o.grid}});
  put_optional(j, "n", o.n);
  return j;
}

json parameters(const ExtremaOptions& o) {
  json j = process_json(o.process);
  j.update({{"kind", o.kind}, {"i", o.i}, {"t", o.t}, {"grid", o.grid}, {"sgrid", o.sgrid},
            {"x", o.x}});
  put_optional(j, "n", o.n);
  return j;
}

json parameters(const ValidateOptions& o) {
  return {{"suite", o.suite}, {"seed", o.seed}, {"paths", o.paths}, {"kmax", o.kmax}};
}

CommandOutput cmd_density(const DensityOptions& o) {
  const TelegraphParams p = o.process.params();
  const State i = state_from_index(o.i);
  require_count(o.n);
  if (o.per_n < 0) throw std::invalid_argument("--per-n must be non-negative");

  MixedLaw law;
  if (!o.n) {
    law = position_law(p, i, o.t);
  } else if (*o.n == 0) {
    law = MixedLaw({position_atom(p, i, o.t)}, nullptr, {});
  } else {
    const int n = *o.n;
    law = MixedLaw({}, [p, i, t = o.t, n](double x) { return position_switch_density(p, i, t, x, n); },
                   Interval{p.gamma1() * o.t, p.gamma0() * o.t});
  }

  CommandOutput out;
  out.table.columns = {"x", "density"};
  for (int k = 1; k <= o.per_n; ++k) out.table.columns.push_back("n=" + std::to_string(k));
  for (double x : linspace(p.gamma1() * o.t, p.gamma0() * o.t, o.grid)) {
    std::vector<double> row{x, law.density(x)};
    for (int k = 1; k <= o.per_n; ++k) row.push_back(position_switch_density(p, i, o.t, x, k));
    out.table.rows.push_back(std::move(row));
  }
  out.result = law_summary(law);
  out.result["regime"] = to_string(p.regime());
  out.result["table"] = to_json(out.table);
  return out;
}

CommandOutput cmd_fpt(const FptOptions& o) {
  const TelegraphParams p = o.process.params();
  const State i = state_from_index(o.i);
  require_count(o.n);
  const ThresholdSpec spec = threshold_spec(p, o.y);

  MixedLaw law;
  if (!spec.reachable) {
    law = MixedLaw::zero();
  } else if (!o.n) {
    law = fpt_law(p, i, o.y);
  } else if (*o.n == 0) {
    std::vector<Atom> atoms;
    if (auto a = fpt_atom(p, i, o.y)) atoms.push_back(*a);
    law = MixedLaw(std::move(atoms), nullptr, {});
  } else {
    const int n = *o.n;
    law = MixedLaw({}, [p, i, y = o.y, n](double t) { return fpt_switch_density(p, i, t, y, n); },
                   spec.support);
  }

  double tmax = 1.0;
  if (o.tmax) {
    tmax = *o.tmax;
  } else if (spec.reachable && spec.bounded) {
    tmax = spec.support.hi;
  } else if (spec.reachable) {
    const double slow = std::min(std::abs(p.gamma0()), std::abs(p.gamma1()));
    tmax = 50.0 * std::max({1.0 / p.lambda0(), 1.0 / p.lambda1(), std::abs(o.y) / slow});
  }
  const double tmin = spec.reachable ? spec.support.lo : 0.0;
  if (!(tmax > tmin)) throw std::invalid_argument("--tmax must exceed the earliest passage time");

  CommandOutput out;
  out.table.columns = {"t", "density"};
  for (double t : linspace(tmin, tmax, o.grid)) {
    out.table.rows.push_back({t, t > 0.0 ? law.density(t) : 0.0});
  }
  out.result = law_summary(law);
  out.result["regime"] = to_string(p.regime());
  out.result["reachable"] = spec.reachable;
  out.result["bounded"] = spec.bounded;
  out.result["table"] = to_json(out.table);
  return out;
}

CommandOutput cmd_meander(const MeanderOptions& o) {
  const TelegraphParams p = o.process.params();
  const MeanderSign sign = parse_sign(o.sign);
  require_count(o.n);
  const Interval range = sign == MeanderSign::Positive ? Interval{0.0, p.gamma0() * o.t}
                                                       : Interval{p.gamma1() * o.t, 0.0};
  MixedLaw law;
  if (!o.n) {
    law = meander_law(p, sign, o.t);
  } else if (*o.n == 0) {
    law = MixedLaw({meander_atom(p, sign, o.t)}, nullptr, {});
  } else {
    const int n = *o.n;
    meander_switch_density(p, sign, o.t, 0.5 * (range.lo + range.hi), n);  // regime check
    law = MixedLaw({}, [p, sign, t = o.t, n](double x) { return meander_switch_density(p, sign, t, x, n); },
                   range);
  }

  CommandOutput out;
  out.table.columns = {"x", "density"};
  for (double x : linspace(p.gamma1() * o.t, p.gamma0() * o.t, o.grid)) {
    out.table.rows.push_back({x, law.density(x)});
  }
  out.result = law_summary(law);
  out.result["regime"] = to_string(p.regime());
  out.result["table"] = to_json(out.table);
  return out;
}

CommandOutput cmd_extrema(const ExtremaOptions& o) {
  const TelegraphParams p = o.process.params();
  const State i = state_from_index(o.i);
  const ExtremumKind kind = parse_kind(o.kind);
  require_count(o.n);
  if (o.sgrid < 1) throw std::invalid_argument("--sgrid must be at least 1");
  const JointExtremumLaw law(p, i, kind, o.t, o.n);
  const ComponentMasses m = law.masses();

  CommandOutput out;
  out.table.columns = {"x", "zeta_zero", "zeta_t", "marginal"};
  for (double x : linspace(p.gamma1() * o.t, p.gamma0() * o.t, o.grid)) {
    out.table.rows.push_back(
        {x, law.zeta_zero().density(x), law.zeta_t().density(x), law.x_marginal_density(x)});
  }

  // Regular density on an interior (s, y) grid at the requested terminal x.
  const bool min = kind == ExtremumKind::Min;
  const double ylo = min ? p.gamma1() * o.t : 0.0;
  const double yhi = min ? 0.0 : p.gamma0() * o.t;
  const double hs = o.t / (o.sgrid + 1);
  const double hy = (yhi - ylo) / (o.sgrid + 1);
  Table regular{{"s", "y", "density"}, {}};
  for (int a = 1; a <= o.sgrid; ++a) {
    for (int b = 1; b <= o.sgrid; ++b) {
      const double s = a * hs;
      const double y = ylo + b * hy;
      regular.rows.push_back({s, y, law.regular_density(s, y, o.x)});
    }
  }

  out.result = {
      {"regime", to_string(p.regime())},
      {"masses",
       {{"zeta_zero", m.zeta_zero}, {"zeta_t", m.zeta_t}, {"regular", m.regular}, {"total", m.total()}}},
      {"zeta_zero", law_summary(law.zeta_zero())},
      {"zeta_t", law_summary(law.zeta_t())},
      {"marginal_atoms", to_json(law.x_marginal_atoms())},
      {"table", to_json(out.table)},
      {"regular", {{"x", o.x}, {"table", to_json(regular)}}},
  };
  return out;
}

CommandOutput cmd_validate(const ValidateOptions& o) {
  ValidationOptions opts;
  opts.seed = o.seed;
  opts.paths = o.paths;
  opts.kmax = o.kmax;
  opts.threads = o.threads;
  if (opts.kmax < 1) throw std::invalid_argument("--kmax must be at least 1");
  if (opts.paths < 1) throw std::invalid_argument("--paths must be at least 1");

  std::vector<Suite> suites;
  if (o.suite == "all") {
    suites = all_suites();
  } else {
    suites.push_back(suite_from_string(o.suite));
  }

  CommandOutput out;
  json reports = json::array();
  bool ok = true;
  for (Suite s : suites) {
    const ValidationReport r = run_suite(s, opts);
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"relation", c.relation},
                        {"measured", c.measured},
                        {"tolerance", c.tolerance},
                        {"passed", c.passed}});
    }
    json series = json::object();
    for (const auto& [name, values] : r.series) series[name] = values;
    reports.push_back({{"suite", std::string(to_string(s))},
                       {"passed", r.passed()},
                       {"checks", checks},
                       {"series", series}});
    ok = ok && r.passed();
  }
  out.result = {{"passed", ok}, {"reports", reports}};
  out.exit_code = ok ? 0 : 1;
  return out;
}

}  // namespace telegraph::cli
