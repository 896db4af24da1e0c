#include "telegraph/extrema.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "telegraph/densities.hpp"
#include "telegraph/first_passage.hpp"
#include "quadrature.hpp"
#include "terms.hpp"

namespace telegraph {

namespace {

constexpr quad::Options kInner{.tolerance = 1e-11, .max_depth = 12};
constexpr quad::Options kOuter{.tolerance = 1e-10, .max_depth = 12};

bool opposite(const TelegraphParams& p) { return p.regime() == VelocityRegime::OppositeSigns; }

void require_count(const SwitchCount& n) {
  if (n && *n < 0) throw std::domain_error("extrema: switch count must be non-negative");
}

// How a path reaches an interior extremum and what it does afterwards.
struct Layout {
  double rate;            // intensity of the reversal at the extremum
  double arrival;         // velocity with which the extremum is approached
  MeanderSign after;      // meander followed relative to the extremum
  double after_velocity;  // velocity right after the reversal
  double after_rate;      // rate of leaving that state
  bool passage_atom;      // initial velocity heads straight for the extremum
  double initial_velocity;
  double initial_rate;
};

Layout layout(const TelegraphParams& p, State i, ExtremumKind kind) {
  const bool min = kind == ExtremumKind::Min;
  Layout l{};
  l.rate = min ? p.lambda1() : p.lambda0();
  l.arrival = min ? p.gamma1() : p.gamma0();
  l.after = min ? MeanderSign::Positive : MeanderSign::Negative;
  l.after_velocity = min ? p.gamma0() : p.gamma1();
  l.after_rate = min ? p.lambda0() : p.lambda1();
  l.passage_atom = (min && i == State::One) || (!min && i == State::Zero);
  l.initial_velocity = p.gamma(i);
  l.initial_rate = p.lambda(i);
  return l;
}

// Passage part at (s, y): continuous first-passage density for count m
// (m >= 1) or summed over m.
double passage_density(const TelegraphParams& p, State i, double s, double y, SwitchCount m) {
  if (y == 0.0) return 0.0;
  return m ? fpt_switch_density(p, i, s, y, *m) : fpt_density(p, i, s, y);
}

// Meander part at (t', x') relative to the extremum: density for count m
// (m >= 1) or summed.
double meander_part(const TelegraphParams& p, MeanderSign sign, double tp, double xp,
                    SwitchCount m) {
  if (!(tp > 0.0)) return 0.0;
  return m ? meander_switch_density(p, sign, tp, xp, *m) : meander_density(p, sign, tp, xp);
}

bool ordered(ExtremumKind kind, double y, double x) {
  return kind == ExtremumKind::Min ? (y < 0.0 && y < x) : (y > 0.0 && y > x);
}

// Interval of extremum levels y reachable by a first passage at time s.
Interval level_range(const TelegraphParams& p, ExtremumKind kind, double s) {
  return kind == ExtremumKind::Min ? Interval{p.gamma1() * s, 0.0}
                                   : Interval{0.0, p.gamma0() * s};
}

MixedLaw position_component(const TelegraphParams& p, State i, double t, SwitchCount n) {
  if (!n) return position_law(p, i, t);
  if (*n == 0) return MixedLaw({position_atom(p, i, t)}, nullptr, {});
  const int count = *n;
  return MixedLaw({},
                  [p, i, t, count](double x) { return position_switch_density(p, i, t, x, count); },
                  Interval{p.gamma1() * t, p.gamma0() * t});
}

MixedLaw build_zeta_zero(const TelegraphParams& p, State i, ExtremumKind kind, double t,
                         SwitchCount n) {
  const bool min = kind == ExtremumKind::Min;
  switch (p.regime()) {
    case VelocityRegime::BothPositive:
      return min ? position_component(p, i, t, n) : MixedLaw::zero();
    case VelocityRegime::BothNegative:
      return min ? MixedLaw::zero() : position_component(p, i, t, n);
    case VelocityRegime::OppositeSigns:
      break;
  }
  const bool meander_pair = (min && i == State::Zero) || (!min && i == State::One);
  if (!meander_pair) return MixedLaw::zero();
  const MeanderSign sign = min ? MeanderSign::Positive : MeanderSign::Negative;
  if (!n) return meander_law(p, sign, t);
  if (*n == 0) return MixedLaw({meander_atom(p, sign, t)}, nullptr, {});
  const int count = *n;
  const Interval support = min ? Interval{0.0, p.gamma0() * t} : Interval{p.gamma1() * t, 0.0};
  return MixedLaw({},
                  [p, sign, t, count](double x) {
                    return meander_switch_density(p, sign, t, x, count);
                  },
                  support);
}

MixedLaw build_zeta_t(const TelegraphParams& p, State i, ExtremumKind kind, double t,
                      SwitchCount n) {
  const bool min = kind == ExtremumKind::Min;
  switch (p.regime()) {
    case VelocityRegime::BothPositive:
      return min ? MixedLaw::zero() : position_component(p, i, t, n);
    case VelocityRegime::BothNegative:
      return min ? position_component(p, i, t, n) : MixedLaw::zero();
    case VelocityRegime::OppositeSigns:
      break;
  }
  // The extremum is the terminal point: a first passage through x at time t,
  // converted from a density in time to one in space by the arrival speed.
  const double speed = std::abs(min ? p.gamma1() : p.gamma0());
  const Interval support = min ? Interval{p.gamma1() * t, 0.0} : Interval{0.0, p.gamma0() * t};
  std::vector<Atom> atoms;
  const bool straight = (min && i == State::One) || (!min && i == State::Zero);
  if (straight && (!n || *n == 0)) atoms.push_back(position_atom(p, i, t));
  if (n && *n == 0) return MixedLaw(std::move(atoms), nullptr, {});
  return MixedLaw(std::move(atoms),
                  [p, i, t, n, speed](double x) { return passage_density(p, i, t, x, n) / speed; },
                  support);
}

SingularContribution evaluate(const MixedLaw& law, double x) {
  SingularContribution c;
  c.density = law.density(x);
  if (!law.atoms().empty()) c.atom = law.atoms().front();
  return c;
}

}  // namespace

bool is_admissible(ExtremumKind kind, double t, const JointExtremumPoint& p) {
  if (!(p.s >= 0.0 && p.s <= t)) return false;
  if (p.n && *p.n < 0) return false;
  const bool min = kind == ExtremumKind::Min;
  if (min ? (p.y > 0.0 || p.y > p.x) : (p.y < 0.0 || p.y < p.x)) return false;
  if (p.s == 0.0 && p.y != 0.0) return false;
  if (p.s == t && p.y != p.x) return false;
  return true;
}

SingularContribution extremum_zeta_zero_component(const TelegraphParams& params, State initial,
                                                  ExtremumKind kind, double t, double x,
                                                  SwitchCount n) {
  detail::require_positive_time(t, "extremum_zeta_zero_component");
  require_count(n);
  return evaluate(build_zeta_zero(params, initial, kind, t, n), x);
}

SingularContribution extremum_zeta_t_component(const TelegraphParams& params, State initial,
                                               ExtremumKind kind, double t, double x,
                                               SwitchCount n) {
  detail::require_positive_time(t, "extremum_zeta_t_component");
  require_count(n);
  return evaluate(build_zeta_t(params, initial, kind, t, n), x);
}

double extremum_regular_density(const TelegraphParams& params, State initial, ExtremumKind kind,
                                double t, double s, double y, double x, SwitchCount n) {
  detail::require_positive_time(t, "extremum_regular_density");
  require_count(n);
  if (!opposite(params) || !(s > 0.0 && s < t) || !ordered(kind, y, x)) return 0.0;
  const Layout l = layout(params, initial, kind);
  const double scale = l.rate / std::abs(l.arrival);
  if (!n) {
    return scale * passage_density(params, initial, s, y, std::nullopt) *
           meander_part(params, l.after, t - s, x - y, std::nullopt);
  }
  double sum = 0.0;
  for (int m = 1; m + 1 < *n; ++m) {
    const double f = passage_density(params, initial, s, y, m);
    if (f == 0.0) continue;
    sum += f * meander_part(params, l.after, t - s, x - y, *n - 1 - m);
  }
  return scale * sum;
}

double extremum_terminal_sheet_density(const TelegraphParams& params, State initial,
                                       ExtremumKind kind, double t, double s, double y,
                                       SwitchCount n) {
  detail::require_positive_time(t, "extremum_terminal_sheet_density");
  require_count(n);
  if (!opposite(params) || !(s > 0.0 && s < t)) return 0.0;
  const Layout l = layout(params, initial, kind);
  const double x = y + l.after_velocity * (t - s);
  if (!ordered(kind, y, x)) return 0.0;
  if (n && *n < 2) return 0.0;
  const SwitchCount m = n ? SwitchCount(*n - 1) : std::nullopt;
  return l.rate / std::abs(l.arrival) * passage_density(params, initial, s, y, m) *
         std::exp(-l.after_rate * (t - s));
}

double extremum_passage_sheet_density(const TelegraphParams& params, State initial,
                                      ExtremumKind kind, double t, double s, double x,
                                      SwitchCount n) {
  detail::require_positive_time(t, "extremum_passage_sheet_density");
  require_count(n);
  if (!opposite(params) || !(s > 0.0 && s < t)) return 0.0;
  const Layout l = layout(params, initial, kind);
  if (!l.passage_atom) return 0.0;
  const double y = l.initial_velocity * s;
  if (!ordered(kind, y, x)) return 0.0;
  if (n && *n < 2) return 0.0;
  const SwitchCount m = n ? SwitchCount(*n - 1) : std::nullopt;
  return l.rate * std::exp(-l.initial_rate * s) * meander_part(params, l.after, t - s, x - y, m);
}

double extremum_curve_density(const TelegraphParams& params, State initial, ExtremumKind kind,
                              double t, double s, SwitchCount n) {
  detail::require_positive_time(t, "extremum_curve_density");
  require_count(n);
  if (!opposite(params) || !(s > 0.0 && s < t)) return 0.0;
  const Layout l = layout(params, initial, kind);
  if (!l.passage_atom || (n && *n != 1)) return 0.0;
  return l.rate * std::exp(-l.initial_rate * s - l.after_rate * (t - s));
}

JointExtremumLaw::JointExtremumLaw(TelegraphParams params, State initial, ExtremumKind kind,
                                   double t, SwitchCount n)
    : params_(params), initial_(initial), kind_(kind), t_(t), n_(n) {
  detail::require_positive_time(t, "extremum_joint_law");
  require_count(n);
  zeta_zero_ = build_zeta_zero(params_, initial_, kind_, t_, n_);
  zeta_t_ = build_zeta_t(params_, initial_, kind_, t_, n_);
}

double JointExtremumLaw::regular_density(double s, double y, double x) const {
  return extremum_regular_density(params_, initial_, kind_, t_, s, y, x, n_);
}

double JointExtremumLaw::terminal_sheet_density(double s, double y) const {
  return extremum_terminal_sheet_density(params_, initial_, kind_, t_, s, y, n_);
}

double JointExtremumLaw::passage_sheet_density(double s, double x) const {
  return extremum_passage_sheet_density(params_, initial_, kind_, t_, s, x, n_);
}

double JointExtremumLaw::curve_density(double s) const {
  return extremum_curve_density(params_, initial_, kind_, t_, s, n_);
}

double JointExtremumLaw::regular_mass() const {
  if (!opposite(params_)) return 0.0;
  const Layout l = layout(params_, initial_, kind_);
  const double scale = l.rate / std::abs(l.arrival);

  // s-marginal of the passage factor for passage count m (nullopt: summed),
  // including the reversal intensity.
  auto passage_in_s = [&](double s, SwitchCount m) {
    double value = 0.0;
    if (l.passage_atom && (!m || *m == 0)) value += l.rate * std::exp(-l.initial_rate * s);
    if (m && *m == 0) return value;
    const Interval ys = level_range(params_, kind_, s);
    value += scale * quad::integrate(
                         [&](double y) { return passage_density(params_, initial_, s, y, m); },
                         ys.lo, ys.hi, kInner);
    return value;
  };
  // Mass of the meander factor over a remaining time tp for count m.
  auto meander_mass = [&](double tp, SwitchCount m) {
    if (!(tp > 0.0)) return m && *m > 0 ? 0.0 : 1.0;
    if (!m) return meander_law(params_, l.after, tp).total_mass(1e-11);
    if (*m == 0) return std::exp(-l.after_rate * tp);
    const Interval xs = l.after == MeanderSign::Positive ? Interval{0.0, l.after_velocity * tp}
                                                         : Interval{l.after_velocity * tp, 0.0};
    return quad::integrate(
        [&](double xp) { return meander_switch_density(params_, l.after, tp, xp, *m); }, xs.lo,
        xs.hi, kInner);
  };

  auto integrand = [&](double s) {
    if (!n_) return passage_in_s(s, std::nullopt) * meander_mass(t_ - s, std::nullopt);
    double sum = 0.0;
    for (int m = 0; m + 1 <= *n_; ++m) {
      const double a = passage_in_s(s, m);
      if (a == 0.0) continue;
      sum += a * meander_mass(t_ - s, *n_ - 1 - m);
    }
    return sum;
  };
  return quad::integrate(integrand, 0.0, t_, kOuter);
}

ComponentMasses JointExtremumLaw::masses() const {
  return ComponentMasses{zeta_zero_.total_mass(1e-12), zeta_t_.total_mass(1e-12), regular_mass()};
}

double JointExtremumLaw::x_marginal_density(double x) const {
  double value = zeta_zero_.density(x) + zeta_t_.density(x);
  if (!opposite(params_)) return value;

  const Layout l = layout(params_, initial_, kind_);
  const bool min = kind_ == ExtremumKind::Min;
  const double t = t_;
  const double v = l.after_velocity;
  const double u = l.arrival;

  // Levels y admissible for the volume part at time s: inside the passage
  // range and with x - y inside the meander support of length |v| (t - s).
  auto y_range = [&](double s) {
    const Interval ys = level_range(params_, kind_, s);
    if (min) return Interval{std::max(ys.lo, x - v * (t - s)), std::min(ys.hi, x)};
    return Interval{std::max(ys.lo, x), std::min(ys.hi, x - v * (t - s))};
  };
  // Times where the limits of y_range or the sheets change form.
  const std::array<double, 6> breaks{
      (x - v * t) / (u - v),
      t - (min ? std::max(x, 0.0) : std::min(x, 0.0)) / v,
      (min ? std::min(x, 0.0) : std::max(x, 0.0)) / u,
      t - x / v,
      x / l.initial_velocity,
      (x - v * t) / (l.initial_velocity - v),
  };

  auto volume = [&](double s) {
    const Interval ys = y_range(s);
    if (ys.empty()) return 0.0;
    return quad::integrate([&](double y) { return regular_density(s, y, x); }, ys.lo, ys.hi,
                           kInner);
  };
  auto sheets = [&](double s) {
    return terminal_sheet_density(s, x - v * (t - s)) + passage_sheet_density(s, x);
  };
  value += quad::integrate([&](double s) { return volume(s) + sheets(s); }, 0.0, t, breaks,
                           kOuter);

  if (l.passage_atom) {
    const double s = (x - v * t) / (l.initial_velocity - v);
    if (s > 0.0 && s < t) value += curve_density(s) / std::abs(l.initial_velocity - v);
  }
  return value;
}

std::vector<Atom> JointExtremumLaw::x_marginal_atoms() const {
  std::vector<Atom> atoms(zeta_zero_.atoms().begin(), zeta_zero_.atoms().end());
  atoms.insert(atoms.end(), zeta_t_.atoms().begin(), zeta_t_.atoms().end());
  return atoms;
}

JointExtremumLaw extremum_joint_law(const TelegraphParams& params, State initial,
                                    ExtremumKind kind, double t, SwitchCount n) {
  return JointExtremumLaw(params, initial, kind, t, n);
}

}  // namespace telegraph
