#pragma once

#include "telegraph/first_passage.hpp"
#include "telegraph/mixed_law.hpp"
#include "telegraph/params.hpp"

namespace telegraph {

/// Positive meander: paths from state 0 whose running minimum stays at 0.
/// Negative meander: paths from state 1 whose running maximum stays at 0.
/// The other initial state cannot produce the respective meander when the
/// velocities have opposite signs.
enum class MeanderSign { Positive, Negative };

constexpr State meander_initial_state(MeanderSign sign) noexcept {
  return sign == MeanderSign::Positive ? State::Zero : State::One;
}

/// No-switch part: (gamma0 t, e^{-lambda0 t}) for Positive,
/// (gamma1 t, e^{-lambda1 t}) for Negative. Opposite-signs regime only;
/// throws std::domain_error otherwise or for t <= 0.
Atom meander_atom(const TelegraphParams& params, MeanderSign sign, double t);

/// Density of {Gamma(t) in dx, meander, N(t) = n}, n >= 1. Positive sign:
///
///   g+(t,x;2k+1) = lambda0/xi0 z^k/(k!)^2 theta (x - gamma1 xi1/(k+1)) / gamma0
///   g+(t,x;2k+2) = lambda0 lambda1 z^k/(k!(k+1)!) theta x / gamma0
///
/// on 0 < x < gamma0 t. The negative sign uses the same expressions with the
/// indices 0 and 1 exchanged, on gamma1 t < x < 0. Opposite-signs regime only.
double meander_switch_density(const TelegraphParams& params, MeanderSign sign, double t,
                              double x, int n);

/// Continuous part summed over n >= 1. Opposite-signs regime only.
double meander_density(const TelegraphParams& params, MeanderSign sign, double t, double x);

/// Law of Gamma(t) restricted to the meander event. Its total mass is
/// P0{m_t = 0} (Positive) or P1{M_t = 0} (Negative).
///
/// In same-sign regimes the path never changes sign, so the law is either
/// the full position law of the matching initial state or the zero law.
MixedLaw meander_law(const TelegraphParams& params, MeanderSign sign, double t);

/// Residual of the last-switch renewal equation of the positive meander at
/// count m >= 2:
///   m even: g+(t,x;m) = int_0^{x/gamma0} lambda1 e^{-lambda0 s} g+(t-s, x-gamma0 s; m-1) ds
///   m odd:  g+(t,x;m) = int_0^{xi1}      lambda0 e^{-lambda1 s} g+(t-s, x-gamma1 s; m-1) ds
/// Opposite signs, 0 < x < gamma0 t.
double meander_last_switch_residual(const TelegraphParams& params, double t, double x, int m);

/// The coupled pair for n >= 1: {count 2n, count 2n+1}.
ResidualPair meander_integral_equation_residual(const TelegraphParams& params, double t,
                                                double x, int n);

}  // namespace telegraph
