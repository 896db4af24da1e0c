#include "telegraph/validation.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "telegraph/densities.hpp"
#include "telegraph/extrema.hpp"
#include "telegraph/first_passage.hpp"
#include "telegraph/kac.hpp"
#include "telegraph/meander.hpp"
#include "telegraph/montecarlo.hpp"
#include "quadrature.hpp"

namespace telegraph {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuiteNames{{
    {Suite::Normalization, "normalization"},
    {Suite::IntegralEquations, "integral-equations"},
    {Suite::Duality, "duality"},
    {Suite::MonteCarloKs, "mc-ks"},
    {Suite::Kac, "kac"},
    {Suite::Extrema, "extrema"},
}};

CheckResult at_most(std::string name, double measured, double tolerance) {
  return {std::move(name), "<=", measured, tolerance, measured <= tolerance};
}

CheckResult below(std::string name, double measured, double tolerance) {
  return {std::move(name), "<", measured, tolerance, measured < tolerance};
}

double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  State state() { return integer(0, 1) == 0 ? State::Zero : State::One; }

  TelegraphParams opposite() {
    return TelegraphParams(uniform(0.3, 3.0), uniform(0.3, 3.0), uniform(0.3, 2.0),
                           -uniform(0.3, 2.0));
  }
  TelegraphParams same_sign(bool positive) {
    const double fast = uniform(0.5, 3.0);
    const double slow = fast * uniform(0.1, 0.9);
    return positive ? TelegraphParams(uniform(0.2, 5.0), uniform(0.2, 5.0), fast, slow)
                    : TelegraphParams(uniform(0.2, 5.0), uniform(0.2, 5.0), -slow, -fast);
  }
  TelegraphParams any() {
    switch (integer(0, 2)) {
      case 0: return same_sign(true);
      case 1: return same_sign(false);
      default:
        return TelegraphParams(uniform(0.2, 5.0), uniform(0.2, 5.0), uniform(0.2, 3.0),
                               -uniform(0.2, 3.0));
    }
  }

 private:
  std::mt19937_64 rng_;
};

ValidationReport normalization(const ValidationOptions& opt) {
  ValidationReport r{Suite::Normalization, {}, {}};
  Sampler rng(opt.seed);

  double worst = 0.0;
  for (int c = 0; c < 50; ++c) {
    const TelegraphParams p = rng.any();
    const State i = rng.state();
    for (double t : {0.1, 1.0, 5.0}) {
      worst = std::max(worst, std::abs(position_law(p, i, t).total_mass() - 1.0));
    }
  }
  r.checks.push_back(at_most("position law mass", worst, 1e-8));

  worst = 0.0;
  for (int c = 0; c < 20; ++c) {
    const bool positive = rng.integer(0, 1) == 0;
    const TelegraphParams p = rng.same_sign(positive);
    const double y = (positive ? 1.0 : -1.0) * rng.uniform(0.2, 3.0);
    worst = std::max(worst, std::abs(fpt_law(p, rng.state(), y).total_mass() - 1.0));
  }
  r.checks.push_back(at_most("same-sign first passage mass", worst, 1e-8));

  // Opposite signs: the passage law may be defective but never exceeds one.
  double excess = 0.0;
  for (int c = 0; c < 20; ++c) {
    const TelegraphParams p = rng.opposite();
    const double y = (rng.integer(0, 1) == 0 ? 1.0 : -1.0) * rng.uniform(0.2, 2.0);
    excess = std::max(excess, fpt_law(p, rng.state(), y).total_mass(1e-10) - 1.0);
  }
  r.checks.push_back(at_most("opposite-sign first passage mass excess", excess, 1e-8));
  return r;
}

ValidationReport integral_equations(const ValidationOptions& opt) {
  ValidationReport r{Suite::IntegralEquations, {}, {}};
  Sampler rng(opt.seed);
  for (int n = 1; n <= 5; ++n) {
    double fpt = 0.0;
    double meander = 0.0;
    for (int c = 0; c < 20; ++c) {
      const TelegraphParams p = rng.opposite();
      const double t = rng.uniform(0.5, 3.0);
      const double y = p.gamma0() * t * rng.uniform(0.05, 0.95);
      const ResidualPair f = fpt_integral_equation_residual(p, t, y, n);
      fpt = std::max({fpt, f.first, f.second});
      const double x = p.gamma0() * t * rng.uniform(0.05, 0.95);
      const ResidualPair g = meander_integral_equation_residual(p, t, x, n);
      meander = std::max({meander, g.first, g.second});
    }
    r.checks.push_back(below("first passage renewal n=" + std::to_string(n), fpt, 1e-8));
    r.checks.push_back(below("meander renewal n=" + std::to_string(n), meander, 1e-8));
  }
  return r;
}

ValidationReport duality(const ValidationOptions& opt) {
  ValidationReport r{Suite::Duality, {}, {}};
  Sampler rng(opt.seed);

  double even = 0.0;
  double odd = 0.0;
  for (int c = 0; c < 100; ++c) {
    const TelegraphParams p = rng.opposite();
    const double t = rng.uniform(0.2, 4.0);
    const double x = p.gamma0() * t * rng.uniform(0.01, 0.99);
    const int n = rng.integer(0, 4);
    even = std::max(even, relative_error(
                              p.gamma0() * meander_switch_density(p, MeanderSign::Positive, t, x,
                                                                  2 * n + 2),
                              fpt_switch_density(p, State::Zero, t, x, 2 * n + 2)));
    odd = std::max(odd, relative_error(
                            p.gamma0() * p.lambda1() *
                                meander_switch_density(p, MeanderSign::Positive, t, x, 2 * n + 1),
                            p.lambda0() * fpt_switch_density(p, State::One, t, x, 2 * n + 1)));
  }
  r.checks.push_back(at_most("meander/passage duality, even counts", even, 1e-12));
  r.checks.push_back(at_most("meander/passage duality, odd counts", odd, 1e-12));

  double mirror = 0.0;
  for (int c = 0; c < 100; ++c) {
    const TelegraphParams p = rng.integer(0, 3) == 0 ? rng.same_sign(false) : rng.opposite();
    const State i = rng.state();
    const double t = rng.uniform(0.2, 4.0);
    const double y = p.regime() == VelocityRegime::OppositeSigns
                         ? p.gamma1() * t * rng.uniform(0.01, 0.99)
                         : p.gamma0() * t + (p.gamma1() - p.gamma0()) * t * rng.uniform(0.01, 0.99);
    const TelegraphParams q = p.mirrored();
    const int n = rng.integer(1, 6);
    mirror = std::max(mirror, relative_error(fpt_switch_density(p, i, t, y, n),
                                             fpt_switch_density(q, other(i), t, -y, n)));
    mirror = std::max(mirror,
                      relative_error(fpt_density(p, i, t, y), fpt_density(q, other(i), t, -y)));
  }
  r.checks.push_back(at_most("negative level by interchange", mirror, 1e-12));

  double mismatches = 0.0;
  for (int c = 0; c < 100; ++c) {
    const TelegraphParams p = rng.opposite();
    const State i = rng.state();
    const double t = rng.uniform(0.5, 4.0);
    const double y = p.gamma0() * t * rng.uniform(0.01, 0.99);
    const int n = rng.integer(1, 8);
    mismatches += fpt_with_reversal_density(p, i, t, y, n) !=
                  p.lambda0() * fpt_switch_density(p, i, t, y, n);
  }
  r.checks.push_back(at_most("reversal factor (bitwise mismatches)", mismatches, 0.0));
  return r;
}

// Chi-square p-value of the switch-count histogram against the exact counting
// law, with the tail pooled so that every expected count is at least 5.
double counting_law_p_value(const CampaignSummary& mc, const TelegraphParams& p, State i,
                            double t) {
  const auto total = static_cast<double>(mc.paths);
  std::vector<double> observed;
  std::vector<double> expected;
  double covered = 0.0;
  for (int n = 0;; ++n) {
    const double prob = switch_count_probability(p, i, t, n);
    if (prob * total < 5.0 || 1.0 - covered - prob < 5.0 / total) break;
    observed.push_back(static_cast<double>(mc.paths) * mc.switch_fraction(n));
    expected.push_back(prob * total);
    covered += prob;
  }
  double seen = 0.0;
  for (double o : observed) seen += o;
  observed.push_back(total - seen);
  expected.push_back((1.0 - covered) * total);
  double chi2 = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    const double d = observed[k] - expected[k];
    chi2 += d * d / expected[k];
  }
  const boost::math::chi_squared dist(static_cast<double>(observed.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, chi2));
}

ValidationReport monte_carlo(const ValidationOptions& opt) {
  ValidationReport r{Suite::MonteCarloKs, {}, {}};
  const TelegraphParams p(1.0, 1.0, 1.0, -1.0);
  const double t = 2.0;
  const double y = 1.0;
  const double fpt_horizon = 20.0;
  SimulationConfig cfg{p, State::Zero, t, y, fpt_horizon, opt.paths, opt.seed, opt.threads};
  const CampaignSummary mc = run_campaign(cfg);

  const CdfTable position = position_law(p, State::Zero, t).tabulate_cdf();
  const double ks_terminal = ks_statistic(
      mc.terminal_sorted, mc.paths, [&](double v) { return position(v); },
      [&](double v) { return position.left(v); }, 1.0);
  r.checks.push_back(at_most("KS terminal position", ks_terminal, 0.015));

  r.checks.push_back(at_most("no-switch fraction error",
                             std::abs(mc.switch_fraction(0) - std::exp(-p.lambda0() * t)),
                             0.005));

  const double meander_mass = meander_law(p, MeanderSign::Positive, t).total_mass();
  r.checks.push_back(at_most("meander mass error", std::abs(mc.min_at_start - meander_mass), 0.01));

  const CdfTable passage = fpt_law(p, State::Zero, y).tabulate_cdf(4096, fpt_horizon);
  const double ks_fpt = ks_statistic(
      mc.fpt_sorted, mc.paths, [&](double v) { return passage(v); },
      [&](double v) { return passage.left(v); }, passage(fpt_horizon));
  r.checks.push_back(at_most("KS first passage", ks_fpt, 0.015));

  // Four standard errors around the exact mean of the position law.
  const MixedLaw terminal = position_law(p, State::Zero, t);
  auto moment = [&](int power) {
    double m = 0.0;
    for (const Atom& a : terminal.atoms()) m += std::pow(a.location, power) * a.mass;
    const Interval s = terminal.support();
    return m + quad::integrate([&](double x) { return std::pow(x, power) * terminal.density(x); },
                               s.lo, s.hi);
  };
  const double mean = moment(1);
  const double sd = std::sqrt(moment(2) - mean * mean);
  r.checks.push_back(at_most("terminal mean error", std::abs(mc.terminal_mean - mean),
                             4.0 * sd / std::sqrt(static_cast<double>(mc.paths))));
  const double p_value = counting_law_p_value(mc, p, State::Zero, t);
  r.checks.push_back({"switch count chi-square p-value", ">", p_value, 0.001, p_value > 0.001});

  r.series.push_back({"switch_histogram", std::vector<double>(mc.switch_histogram.begin(),
                                                              mc.switch_histogram.end())});
  r.series.push_back({"censored_fraction", {mc.censored_fraction()}});
  return r;
}

ValidationReport kac(const ValidationOptions& opt) {
  ValidationReport r{Suite::Kac, {}, {}};
  const KacTargets targets{};
  const double y = 1.0;
  std::vector<double> ks;
  for (int k = 1; k <= opt.kmax; k *= 2) ks.push_back(k);
  const std::vector<double> grid = uniform_time_grid(0.01, 10.0, 1000);
  const std::vector<KacErrors> errors = convergence_check(targets, y, ks, grid);

  std::vector<double> e0, e1, atoms;
  for (const KacErrors& e : errors) {
    e0.push_back(e.error_f0);
    e1.push_back(e.error_f1);
    atoms.push_back(e.atom_mass);
  }
  // Largest step e_{j+1} - e_j; strictly decreasing means it is negative.
  double step = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < e0.size(); ++j) step = std::max(step, e0[j] - e0[j - 1]);
  r.checks.push_back(below("F0 error strictly decreasing (largest step)", step, 0.0));
  r.checks.push_back(at_most("F0 error at kmax", e0.back(), 0.02));
  // F1 shares the limit; its error must at least shrink over the last doubling.
  if (e1.size() >= 2) {
    r.checks.push_back(below("F1 error ratio over the last doubling",
                             e1.back() / e1[e1.size() - 2], 1.0));
  }
  r.checks.push_back(below("atom mass at kmax", atoms.back(), 1e-6));
  double drift = 0.0;
  for (double k : ks) {
    drift = std::max(drift, std::abs(kac_drift_expression(kac_family_member(targets, k)) -
                                     targets.delta));
  }
  r.checks.push_back(at_most("drift expression", drift, 1e-12));

  r.series.push_back({"k", ks});
  r.series.push_back({"error_f0", e0});
  r.series.push_back({"error_f1", e1});
  r.series.push_back({"atom_mass", atoms});
  return r;
}

ValidationReport extrema(const ValidationOptions& opt) {
  ValidationReport r{Suite::Extrema, {}, {}};
  const TelegraphParams p(1.0, 1.0, 1.0, -1.0);
  const double t = 2.0;
  for (ExtremumKind kind : {ExtremumKind::Min, ExtremumKind::Max}) {
    SimulationConfig cfg{p, State::Zero, t, std::nullopt, std::nullopt, opt.paths, opt.seed,
                         opt.threads};
    for (State i : {State::Zero, State::One}) {
      const std::string tag = std::string(kind == ExtremumKind::Min ? "min" : "max") +
                              " i=" + std::to_string(index(i));
      const JointExtremumLaw law(p, i, kind, t);
      const ComponentMasses m = law.masses();
      r.checks.push_back(at_most(tag + " total mass error", std::abs(m.total() - 1.0), 5e-6));

      double worst = 0.0;
      for (int j = 0; j < 20; ++j) {
        const double x = p.gamma1() * t + (p.gamma0() - p.gamma1()) * t * (j + 0.5) / 20.0;
        worst = std::max(worst, std::abs(law.x_marginal_density(x) - position_density(p, i, t, x)));
      }
      r.checks.push_back(at_most(tag + " x-marginal error", worst, 5e-6));

      cfg.initial_state = i;
      const CampaignSummary mc = run_campaign(cfg);
      const bool min = kind == ExtremumKind::Min;
      const double at_start = min ? mc.min_at_start : mc.max_at_start;
      const double at_end = min ? mc.min_at_end : mc.max_at_end;
      const double mc_error = std::max({std::abs(at_start - m.zeta_zero),
                                        std::abs(at_end - m.zeta_t),
                                        std::abs(1.0 - at_start - at_end - m.regular)});
      r.checks.push_back(at_most(tag + " Monte Carlo component masses", mc_error, 0.01));
      r.series.push_back({tag + " masses", {m.zeta_zero, m.zeta_t, m.regular}});
    }
  }
  return r;
}

}  // namespace

std::string_view to_string(Suite suite) noexcept {
  for (const auto& [s, name] : kSuiteNames) {
    if (s == suite) return name;
  }
  return "unknown";
}

Suite suite_from_string(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames) {
    if (n == name) return s;
  }
  throw std::invalid_argument("unknown validation suite: " + std::string(name));
}

std::vector<Suite> all_suites() {
  std::vector<Suite> out;
  for (const auto& entry : kSuiteNames) out.push_back(entry.first);
  return out;
}

bool ValidationReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ValidationReport run_suite(Suite suite, const ValidationOptions& options) {
  switch (suite) {
    case Suite::Normalization: return normalization(options);
    case Suite::IntegralEquations: return integral_equations(options);
    case Suite::Duality: return duality(options);
    case Suite::MonteCarloKs: return monte_carlo(options);
    case Suite::Kac: return kac(options);
    case Suite::Extrema: return extrema(options);
  }
  throw std::invalid_argument("unknown validation suite");
}

}  // namespace telegraph
