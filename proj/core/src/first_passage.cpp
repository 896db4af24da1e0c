#include "telegraph/first_passage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "quadrature.hpp"
#include "terms.hpp"

namespace telegraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_threshold(double y) {
  if (!std::isfinite(y) || y == 0.0) {
    throw std::domain_error("first passage: threshold must be finite and nonzero");
  }
}

void require_opposite(const TelegraphParams& params, const char* who) {
  if (params.regime() != VelocityRegime::OppositeSigns) {
    throw std::domain_error(std::string(who) + ": requires velocities of opposite signs");
  }
}

// Lower end closed (right limit at the earliest passage time), upper end open.
bool in_time_support(const ThresholdSpec& spec, double t) {
  return spec.reachable && t >= spec.support.lo && t < spec.support.hi;
}

double same_sign_switch_density(const TelegraphParams& p, State i, const Kinematics& kin,
                                int n) {
  const auto [odd, k] = detail::split_switches(n);
  if (odd) {
    return p.lambda(i) * std::abs(p.gamma(other(i))) * detail::theta_odd(kin, k);
  }
  const double xi = i == State::Zero ? kin.xi0 : kin.xi1;
  return p.lambda0() * p.lambda1() * std::abs(p.gamma(i)) * xi * detail::theta_even(kin, k);
}

// Opposite signs, y > 0. State 0 passes only after an even number of
// switches, state 1 after an odd number.
double positive_level_switch_density(const TelegraphParams& p, State i, const Kinematics& kin,
                                     double y, int n) {
  const auto [odd, k] = detail::split_switches(n);
  if (i == State::Zero) {
    if (odd) return 0.0;
    return p.lambda0() * p.lambda1() * y * detail::theta_even(kin, k);
  }
  if (!odd) return 0.0;
  return p.lambda1() / kin.xi0 * detail::theta_odd(kin, k) *
         (y - p.gamma1() * kin.xi1 / (k + 1.0));
}

// Opposite signs, y < 0: the reflection of the positive-level formulas with
// the roles of the two states exchanged.
double negative_level_switch_density(const TelegraphParams& p, State i, const Kinematics& kin,
                                     double y, int n) {
  const auto [odd, k] = detail::split_switches(n);
  if (i == State::One) {
    if (odd) return 0.0;
    return -p.lambda0() * p.lambda1() * y * detail::theta_even(kin, k);
  }
  if (!odd) return 0.0;
  return p.lambda0() / kin.xi1 * detail::theta_odd(kin, k) *
         (-y + p.gamma0() * kin.xi0 / (k + 1.0));
}

}  // namespace

ThresholdSpec threshold_spec(const TelegraphParams& params, double y) {
  require_threshold(y);
  ThresholdSpec spec;
  spec.y = y;
  const double g0 = params.gamma0();
  const double g1 = params.gamma1();
  switch (params.regime()) {
    case VelocityRegime::BothPositive:
      if (y > 0.0) spec = {y, Interval{y / g0, y / g1}, true, true};
      break;
    case VelocityRegime::BothNegative:
      if (y < 0.0) spec = {y, Interval{y / g1, y / g0}, true, true};
      break;
    case VelocityRegime::OppositeSigns:
      spec = {y, Interval{y > 0.0 ? y / g0 : y / g1, kInf}, true, false};
      break;
  }
  return spec;
}

std::optional<Atom> fpt_atom(const TelegraphParams& params, State initial, double y) {
  require_threshold(y);
  const double arrival = y / params.gamma(initial);
  if (!(arrival > 0.0)) return std::nullopt;
  return Atom{arrival, std::exp(-params.lambda(initial) * arrival)};
}

double fpt_switch_density(const TelegraphParams& params, State initial, double t, double y,
                          int n) {
  require_threshold(y);
  detail::require_positive_time(t, "fpt_switch_density");
  detail::split_switches(n);
  const ThresholdSpec spec = threshold_spec(params, y);
  if (!in_time_support(spec, t)) return 0.0;
  const Kinematics kin = kinematics(params, t, y);
  if (spec.bounded) return same_sign_switch_density(params, initial, kin, n);
  return y > 0.0 ? positive_level_switch_density(params, initial, kin, y, n)
                 : negative_level_switch_density(params, initial, kin, y, n);
}

double fpt_density(const TelegraphParams& params, State initial, double t, double y) {
  require_threshold(y);
  detail::require_positive_time(t, "fpt_density");
  const ThresholdSpec spec = threshold_spec(params, y);
  if (!in_time_support(spec, t)) return 0.0;
  const Kinematics kin = kinematics(params, t, y);
  const double l0 = params.lambda0();
  const double l1 = params.lambda1();
  const double g0 = params.gamma0();
  const double g1 = params.gamma1();

  if (spec.bounded) {
    const State partner = other(initial);
    const double xi = initial == State::Zero ? kin.xi0 : kin.xi1;
    return params.lambda(initial) *
           (std::abs(params.gamma(partner)) * detail::theta_I0(kin) +
            params.lambda(partner) * std::abs(params.gamma(initial)) * xi * detail::theta_I1(kin));
  }
  if (y > 0.0) {
    if (initial == State::Zero) return l0 * l1 * y * detail::theta_I1(kin);
    return l1 / kin.xi0 * (y * detail::theta_I0(kin) - g1 * kin.xi1 * detail::theta_I1(kin));
  }
  if (initial == State::Zero) {
    return l0 / kin.xi1 * (-y * detail::theta_I0(kin) + g0 * kin.xi0 * detail::theta_I1(kin));
  }
  return -l0 * l1 * y * detail::theta_I1(kin);
}

MixedLaw fpt_law(const TelegraphParams& params, State initial, double y) {
  const ThresholdSpec spec = threshold_spec(params, y);
  if (!spec.reachable) return MixedLaw::zero();
  std::vector<Atom> atoms;
  if (auto atom = fpt_atom(params, initial, y)) atoms.push_back(*atom);
  return MixedLaw(std::move(atoms),
                  [params, initial, y](double t) { return fpt_density(params, initial, t, y); },
                  spec.support);
}

double reversal_rate(const TelegraphParams& params, double y) {
  require_threshold(y);
  require_opposite(params, "reversal_rate");
  return y > 0.0 ? params.lambda0() : params.lambda1();
}

double fpt_with_reversal_density(const TelegraphParams& params, State initial, double t,
                                 double y, int n) {
  return reversal_rate(params, y) * fpt_switch_density(params, initial, t, y, n);
}

std::optional<Atom> fpt_with_reversal_atom(const TelegraphParams& params, State initial,
                                           double y) {
  const double rate = reversal_rate(params, y);
  auto atom = fpt_atom(params, initial, y);
  if (atom) atom->mass *= rate;
  return atom;
}

double fpt_first_switch_residual(const TelegraphParams& params, State initial, double t,
                                 double y, int m) {
  require_opposite(params, "fpt_first_switch_residual");
  if (!(y > 0.0)) throw std::domain_error("fpt_first_switch_residual: threshold must be positive");
  if (m < 2) throw std::domain_error("fpt_first_switch_residual: count must be at least 2");
  if (!(t > y / params.gamma0())) {
    throw std::domain_error("fpt_first_switch_residual: t must exceed y/gamma0");
  }
  const double rate = params.lambda(initial);
  const double velocity = params.gamma(initial);
  const State next = other(initial);
  // State 0 must switch before reaching y; state 1 before xi1(t, y), after
  // which the level can no longer be reached by time t.
  const double horizon = initial == State::Zero ? y / params.gamma0()
                                                : kinematics(params, t, y).xi1;
  auto integrand = [&](double tau) {
    const double level = y - velocity * tau;
    if (!(level > 0.0)) return 0.0;
    return rate * std::exp(-rate * tau) *
           fpt_switch_density(params, next, t - tau, level, m - 1);
  };
  const double rhs = quad::integrate(integrand, 0.0, horizon, {.tolerance = 1e-13});
  return std::abs(fpt_switch_density(params, initial, t, y, m) - rhs);
}

ResidualPair fpt_integral_equation_residual(const TelegraphParams& params, double t, double y,
                                            int n) {
  if (n < 1) throw std::domain_error("fpt_integral_equation_residual: n must be at least 1");
  return {fpt_first_switch_residual(params, State::Zero, t, y, 2 * n),
          fpt_first_switch_residual(params, State::One, t, y, 2 * n + 1)};
}

}  // namespace telegraph
