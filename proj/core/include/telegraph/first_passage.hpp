#pragma once

#include <optional>

#include "telegraph/mixed_law.hpp"
#include "telegraph/params.hpp"

namespace telegraph {

/// Where the first-passage time T(y) can live, for a given regime and level.
///
///  * both velocities share the sign of y: the segment with ends y/gamma0 and
///    y/gamma1, and T(y) is a.s. in it;
///  * opposite signs: the half-line (y/gamma0, inf) for y > 0, (y/gamma1, inf)
///    for y < 0; the law may be defective;
///  * both velocities point away from y: empty, T(y) = inf a.s.
struct ThresholdSpec {
  double y = 0.0;
  Interval support;
  bool reachable = false;
  bool bounded = false;
};

/// Throws std::domain_error for y == 0 or non-finite y.
ThresholdSpec threshold_spec(const TelegraphParams& params, double y);

/// No-switch atom of T(y) for initial state i: present iff gamma_i points
/// towards y; located at y/gamma_i with mass exp(-lambda_i y/gamma_i).
std::optional<Atom> fpt_atom(const TelegraphParams& params, State initial, double y);

/// Density in t of {T(y) in dt, N(T) = n}, n >= 1.
///
/// Same-sign regimes:
///   f_i(t,y;2k+1) = lambda_i |gamma_{1-i}| z^k/(k!)^2 theta        on Delta(y)
///   f_i(t,y;2k+2) = lambda0 lambda1 |gamma_i| xi_i z^k/(k!(k+1)!) theta
/// Opposite signs, y > 0 (f0 vanishes for odd n, f1 for even n):
///   f1(t,y;2k+1) = lambda1/xi0 z^k/(k!)^2 theta (y - gamma1 xi1/(k+1))
///   f0(t,y;2k+2) = lambda0 lambda1 y z^k/(k!(k+1)!) theta,   t > y/gamma0
/// Opposite signs, y < 0: the reflected formulas (f1 vanishes for odd n, f0
/// for even n), evaluated directly in the original parameters.
///
/// At the lower support end the right limit is returned. Throws
/// std::domain_error for n <= 0, t <= 0 or y == 0.
double fpt_switch_density(const TelegraphParams& params, State initial, double t, double y,
                          int n);

/// Continuous part of the law of T(y), summed over n >= 1.
double fpt_density(const TelegraphParams& params, State initial, double t, double y);

/// Law of T(y) over time: fpt_atom plus fpt_density on threshold_spec().support.
/// Proper on Delta(y) in the same-sign reachable case, possibly defective for
/// opposite signs (see MixedLaw::defect), the zero law when unreachable.
MixedLaw fpt_law(const TelegraphParams& params, State initial, double y);

/// Rate of the velocity reversal that accompanies passage: lambda0 for y > 0,
/// lambda1 for y < 0. Opposite-signs regime only (std::domain_error otherwise).
double reversal_rate(const TelegraphParams& params, double y);

/// Density of {T(y) in dt, N(T) = n, N(T+) = n+1}: reversal_rate(y) times
/// fpt_switch_density. Opposite-signs regime only.
double fpt_with_reversal_density(const TelegraphParams& params, State initial, double t,
                                 double y, int n);

/// The n = 0 counterpart of fpt_with_reversal_density: fpt_atom with its
/// mass multiplied by reversal_rate(y).
std::optional<Atom> fpt_with_reversal_atom(const TelegraphParams& params, State initial,
                                           double y);

struct ResidualPair {
  double first = 0.0;
  double second = 0.0;
};

/// |f_i(t,y;m) - int_0^{T_i} lambda_i e^{-lambda_i tau} f_{1-i}(t-tau, y-gamma_i tau; m-1) dtau|
/// with T_0 = y/gamma0 and T_1 = xi1(t,y): the first-switch renewal equation
/// for a positive level, evaluated by adaptive quadrature. m >= 2.
/// Opposite-signs regime, y > 0, t > y/gamma0.
double fpt_first_switch_residual(const TelegraphParams& params, State initial, double t,
                                 double y, int m);

/// The coupled pair for index n >= 1: {state 0 at count 2n, state 1 at 2n+1}.
ResidualPair fpt_integral_equation_residual(const TelegraphParams& params, double t, double y,
                                            int n);

}  // namespace telegraph
