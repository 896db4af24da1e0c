#include "telegraph/meander.hpp"

#include <cmath>
#include <stdexcept>

#include "telegraph/densities.hpp"
#include "quadrature.hpp"
#include "terms.hpp"

namespace telegraph {

namespace {

void require_opposite(const TelegraphParams& params, const char* who) {
  if (params.regime() != VelocityRegime::OppositeSigns) {
    throw std::domain_error(std::string(who) + ": requires velocities of opposite signs");
  }
}

Interval meander_support(const TelegraphParams& p, MeanderSign sign, double t) {
  return sign == MeanderSign::Positive ? Interval{0.0, p.gamma0() * t}
                                       : Interval{p.gamma1() * t, 0.0};
}

}  // namespace

Atom meander_atom(const TelegraphParams& params, MeanderSign sign, double t) {
  require_opposite(params, "meander_atom");
  detail::require_positive_time(t, "meander_atom");
  const State s = meander_initial_state(sign);
  return Atom{params.gamma(s) * t, std::exp(-params.lambda(s) * t)};
}

double meander_switch_density(const TelegraphParams& params, MeanderSign sign, double t,
                              double x, int n) {
  require_opposite(params, "meander_switch_density");
  detail::require_positive_time(t, "meander_switch_density");
  const auto [odd, k] = detail::split_switches(n);
  if (!meander_support(params, sign, t).contains(x)) return 0.0;
  const Kinematics kin = kinematics(params, t, x);
  const double l0 = params.lambda0();
  const double l1 = params.lambda1();
  if (sign == MeanderSign::Positive) {
    if (odd) {
      return l0 / kin.xi0 * detail::theta_odd(kin, k) *
             (x - params.gamma1() * kin.xi1 / (k + 1.0)) / params.gamma0();
    }
    return l0 * l1 * detail::theta_even(kin, k) * x / params.gamma0();
  }
  if (odd) {
    return l1 / kin.xi1 * detail::theta_odd(kin, k) *
           (x - params.gamma0() * kin.xi0 / (k + 1.0)) / params.gamma1();
  }
  return l0 * l1 * detail::theta_even(kin, k) * x / params.gamma1();
}

double meander_density(const TelegraphParams& params, MeanderSign sign, double t, double x) {
  require_opposite(params, "meander_density");
  detail::require_positive_time(t, "meander_density");
  if (!meander_support(params, sign, t).contains(x)) return 0.0;
  const Kinematics kin = kinematics(params, t, x);
  const double l0 = params.lambda0();
  const double l1 = params.lambda1();
  const double tI0 = detail::theta_I0(kin);
  const double tI1 = detail::theta_I1(kin);
  if (sign == MeanderSign::Positive) {
    return l0 / params.gamma0() *
           (x / kin.xi0 * tI0 + (l1 * x - params.gamma1() * kin.xi1 / kin.xi0) * tI1);
  }
  return l1 / params.gamma1() *
         (x / kin.xi1 * tI0 + (l0 * x - params.gamma0() * kin.xi0 / kin.xi1) * tI1);
}

MixedLaw meander_law(const TelegraphParams& params, MeanderSign sign, double t) {
  detail::require_positive_time(t, "meander_law");
  switch (params.regime()) {
    case VelocityRegime::BothPositive:
      return sign == MeanderSign::Positive ? position_law(params, State::Zero, t)
                                           : MixedLaw::zero();
    case VelocityRegime::BothNegative:
      return sign == MeanderSign::Negative ? position_law(params, State::One, t)
                                           : MixedLaw::zero();
    case VelocityRegime::OppositeSigns:
      break;
  }
  return MixedLaw({meander_atom(params, sign, t)},
                  [params, sign, t](double x) { return meander_density(params, sign, t, x); },
                  meander_support(params, sign, t));
}

double meander_last_switch_residual(const TelegraphParams& params, double t, double x, int m) {
  require_opposite(params, "meander_last_switch_residual");
  detail::require_positive_time(t, "meander_last_switch_residual");
  if (m < 2) throw std::domain_error("meander_last_switch_residual: count must be at least 2");
  if (!(x > 0.0 && x < params.gamma0() * t)) {
    throw std::domain_error("meander_last_switch_residual: need 0 < x < gamma0 t");
  }
  // Even count: the last leg runs in state 0 (entered from state 1 at rate
  // lambda1); odd count: in state 1 (entered at rate lambda0).
  const bool last_in_zero = m % 2 == 0;
  const double entry_rate = last_in_zero ? params.lambda1() : params.lambda0();
  const double stay_rate = last_in_zero ? params.lambda0() : params.lambda1();
  const double velocity = last_in_zero ? params.gamma0() : params.gamma1();
  const double horizon = last_in_zero ? x / params.gamma0() : kinematics(params, t, x).xi1;
  auto integrand = [&](double s) {
    return entry_rate * std::exp(-stay_rate * s) *
           meander_switch_density(params, MeanderSign::Positive, t - s, x - velocity * s, m - 1);
  };
  const double rhs = quad::integrate(integrand, 0.0, horizon, {.tolerance = 1e-13});
  return std::abs(meander_switch_density(params, MeanderSign::Positive, t, x, m) - rhs);
}

ResidualPair meander_integral_equation_residual(const TelegraphParams& params, double t,
                                                double x, int n) {
  if (n < 1) throw std::domain_error("meander_integral_equation_residual: n must be at least 1");
  return {meander_last_switch_residual(params, t, x, 2 * n),
          meander_last_switch_residual(params, t, x, 2 * n + 1)};
}

}  // namespace telegraph
