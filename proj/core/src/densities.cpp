#include "telegraph/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"
#include "terms.hpp"

namespace telegraph {

namespace {

bool inside_support(const TelegraphParams& p, double t, double x) {
  return x > p.gamma1() * t && x < p.gamma0() * t;
}

double xi_of(const Kinematics& kin, State s) { return s == State::Zero ? kin.xi0 : kin.xi1; }

}  // namespace

Atom position_atom(const TelegraphParams& params, State initial, double t) {
  detail::require_positive_time(t, "position_atom");
  return Atom{params.gamma(initial) * t, std::exp(-params.lambda(initial) * t)};
}

double position_switch_density(const TelegraphParams& params, State initial, double t,
                               double x, int n) {
  detail::require_positive_time(t, "position_switch_density");
  const auto [odd, k] = detail::split_switches(n);
  if (!inside_support(params, t, x)) return 0.0;
  const Kinematics kin = kinematics(params, t, x);
  if (odd) return params.lambda(initial) * detail::theta_odd(kin, k);
  return params.lambda0() * params.lambda1() * xi_of(kin, initial) * detail::theta_even(kin, k);
}

double position_density(const TelegraphParams& params, State initial, double t, double x) {
  detail::require_positive_time(t, "position_density");
  if (!inside_support(params, t, x)) return 0.0;
  const Kinematics kin = kinematics(params, t, x);
  const double partner_rate = params.lambda(other(initial));
  return params.lambda(initial) *
         (detail::theta_I0(kin) + partner_rate * xi_of(kin, initial) * detail::theta_I1(kin));
}

MixedLaw position_law(const TelegraphParams& params, State initial, double t) {
  detail::require_positive_time(t, "position_law");
  return MixedLaw({position_atom(params, initial, t)},
                  [params, initial, t](double x) { return position_density(params, initial, t, x); },
                  Interval{params.gamma1() * t, params.gamma0() * t});
}

double switch_count_probability(const TelegraphParams& params, State initial, double t, int n) {
  detail::require_positive_time(t, "switch_count_probability");
  if (n < 0) throw std::domain_error("switch_count_probability: negative count");
  if (n == 0) return position_atom(params, initial, t).mass;
  return quad::integrate(
      [&](double x) { return position_switch_density(params, initial, t, x, n); },
      params.gamma1() * t, params.gamma0() * t);
}

}  // namespace telegraph
