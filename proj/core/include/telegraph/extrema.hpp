#pragma once

#include <optional>
#include <vector>

#include "telegraph/meander.hpp"
#include "telegraph/mixed_law.hpp"
#include "telegraph/params.hpp"

namespace telegraph {

// Joint law of (zeta, extremum, Gamma(t)) where zeta is the time at which the
// running minimum m_t (or maximum M_t) over [0, t] is attained.
//
// The law splits into three disjoint parts:
//   zeta = 0   the path never goes below (above) its start: a meander;
//   zeta = t   the extremum is the terminal position: a first passage at t;
//   0<zeta<t   first passage to the level y at time s, an immediate velocity
//              reversal, then a meander relative to y on [s, t].
//
// The regular part is a measure on (s, y, x). It has a volume density plus
// lower-dimensional pieces wherever one of the factors is a no-switch atom:
//   terminal sheet  meander without switches:   x = y + v (t - s)
//   passage sheet   passage without switches:   y = gamma_i s
//   curve           both without switches (exactly one switch in total)
// where v is the velocity after the reversal (gamma0 for Min, gamma1 for Max).
// Each piece is exposed separately.

enum class ExtremumKind { Min, Max };

/// nullopt means summed over all switch counts.
using SwitchCount = std::optional<int>;

struct JointExtremumPoint {
  double s = 0.0;  // time of the extremum
  double y = 0.0;  // extremum value
  double x = 0.0;  // terminal position
  SwitchCount n{};
};

/// Min: y <= 0 and y <= x; Max: y >= 0 and y >= x; s in [0, t];
/// s = 0 forces y = 0 and s = t forces y = x.
bool is_admissible(ExtremumKind kind, double t, const JointExtremumPoint& p);

/// Value of a singular component at x: a density in x, plus the atom of the
/// component when it has one for the requested count.
struct SingularContribution {
  double density = 0.0;
  std::optional<Atom> atom;
};

/// {zeta = 0}: the meander law for (i = 0, Min) and (i = 1, Max) when the
/// velocities have opposite signs, zero for the other pairs. In same-sign
/// regimes the degenerate structure applies (the whole position law sits on
/// zeta = 0 for Min with positive velocities and for Max with negative ones).
SingularContribution extremum_zeta_zero_component(const TelegraphParams& params, State initial,
                                                  ExtremumKind kind, double t, double x,
                                                  SwitchCount n = std::nullopt);

/// {zeta = t}: density f_i(t, x; n) / |arrival velocity| (gamma1 for Min,
/// gamma0 for Max) on x < 0 (Min) or x > 0 (Max); the no-switch path ending
/// at gamma_i t is the atom for (i = 1, Min) and (i = 0, Max).
SingularContribution extremum_zeta_t_component(const TelegraphParams& params, State initial,
                                               ExtremumKind kind, double t, double x,
                                               SwitchCount n = std::nullopt);

/// Volume density of the regular part at (s, y, x), in 1/(time space space):
///   rate/|u| * sum_m f_i(s, y; m) g(t - s, x - y; n - 1 - m)
/// with rate = lambda1, u = gamma1, g = g+ for Min and rate = lambda0,
/// u = gamma0, g = g- for Max. Zero outside 0 < s < t and the ordering
/// constraints; zero in same-sign regimes.
double extremum_regular_density(const TelegraphParams& params, State initial, ExtremumKind kind,
                                double t, double s, double y, double x,
                                SwitchCount n = std::nullopt);

/// Density in (s, y) on the terminal sheet x = y + v (t - s).
double extremum_terminal_sheet_density(const TelegraphParams& params, State initial,
                                       ExtremumKind kind, double t, double s, double y,
                                       SwitchCount n = std::nullopt);

/// Density in (s, x) on the passage sheet y = gamma_i s (only for
/// (i = 1, Min) and (i = 0, Max), where the initial velocity heads for y).
double extremum_passage_sheet_density(const TelegraphParams& params, State initial,
                                      ExtremumKind kind, double t, double s, double x,
                                      SwitchCount n = std::nullopt);

/// Density in s on the curve y = gamma_i s, x = y + v (t - s).
double extremum_curve_density(const TelegraphParams& params, State initial, ExtremumKind kind,
                              double t, double s, SwitchCount n = std::nullopt);

struct ComponentMasses {
  double zeta_zero = 0.0;
  double zeta_t = 0.0;
  double regular = 0.0;

  double total() const noexcept { return zeta_zero + zeta_t + regular; }
};

/// Joint law of (zeta, extremum, Gamma(t)) for one initial state and kind,
/// either for a fixed switch count or summed over counts.
class JointExtremumLaw {
 public:
  JointExtremumLaw(TelegraphParams params, State initial, ExtremumKind kind, double t,
                   SwitchCount n = std::nullopt);

  const TelegraphParams& params() const noexcept { return params_; }
  State initial() const noexcept { return initial_; }
  ExtremumKind kind() const noexcept { return kind_; }
  double horizon() const noexcept { return t_; }
  SwitchCount switches() const noexcept { return n_; }

  /// Law over x of {zeta = 0, extremum = 0, Gamma(t) in dx}.
  const MixedLaw& zeta_zero() const noexcept { return zeta_zero_; }
  /// Law over x of {zeta = t, extremum = Gamma(t) in dx}.
  const MixedLaw& zeta_t() const noexcept { return zeta_t_; }

  double regular_density(double s, double y, double x) const;
  double terminal_sheet_density(double s, double y) const;
  double passage_sheet_density(double s, double x) const;
  double curve_density(double s) const;

  /// Mass of {0 < zeta < t}: all four regular pieces integrated.
  double regular_mass() const;
  ComponentMasses masses() const;
  double total_mass() const { return masses().total(); }

  /// Density in x of the law of Gamma(t) recovered from all components
  /// (atoms excluded; see x_marginal_atoms).
  double x_marginal_density(double x) const;
  std::vector<Atom> x_marginal_atoms() const;

 private:
  TelegraphParams params_;
  State initial_;
  ExtremumKind kind_;
  double t_;
  SwitchCount n_;
  MixedLaw zeta_zero_;
  MixedLaw zeta_t_;
};

JointExtremumLaw extremum_joint_law(const TelegraphParams& params, State initial,
                                    ExtremumKind kind, double t, SwitchCount n = std::nullopt);

}  // namespace telegraph
