#pragma once

#include "telegraph/mixed_law.hpp"
#include "telegraph/params.hpp"

namespace telegraph {

/// No-switch atom of the position law: mass exp(-lambda_i t) at gamma_i t.
/// Throws std::domain_error for t <= 0.
Atom position_atom(const TelegraphParams& params, State initial, double t);

/// Density of {Gamma(t) in dx, N(t) = n} for n >= 1, zero outside the open
/// interval (gamma1 t, gamma0 t):
///
///   p_i(t, x; 2k+1) = lambda_i z^k / (k!)^2 theta
///   p_i(t, x; 2k+2) = lambda0 lambda1 xi_i z^k / (k! (k+1)!) theta
///
/// Throws std::domain_error for n <= 0 (n = 0 is the atom) or t <= 0.
double position_switch_density(const TelegraphParams& params, State initial, double t,
                               double x, int n);

/// Continuous part of the law of Gamma(t) summed over n >= 1:
///   lambda_i [I0arg + lambda_{1-i} xi_i I1arg] theta.
double position_density(const TelegraphParams& params, State initial, double t, double x);

/// Full law of Gamma(t): the no-switch atom plus position_density on
/// (gamma1 t, gamma0 t). Proper (mass one) for every parameter set.
MixedLaw position_law(const TelegraphParams& params, State initial, double t);

/// P_i{N(t) = n}: the atom mass for n = 0, otherwise the integral of
/// position_switch_density over the support.
double switch_count_probability(const TelegraphParams& params, State initial, double t, int n);

}  // namespace telegraph
