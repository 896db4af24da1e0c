#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "telegraph/densities.hpp"
#include "telegraph/extrema.hpp"
#include "telegraph/first_passage.hpp"
#include "telegraph/meander.hpp"
#include "telegraph/montecarlo.hpp"

using namespace telegraph;

namespace {

const TelegraphParams kUnit(1, 1, 1, -1);

// Integral over [a, b] split at interior points where the integrand jumps.
template <class F>
double integrate_split(F f, double a, double b, std::vector<double> cuts) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = std::max(a, cuts[k]), hi = std::min(b, cuts[k + 1]);
    if (hi > lo) total += oracle::integrate(f, lo, hi);
  }
  return total;
}

// x-marginal of the regular part at fixed n, by nested tanh-sinh quadrature
// over (s, y). Only the Min kind is handled.
double regular_marginal_min(const TelegraphParams& p, State i, double t, double x, int n) {
  const double g0 = p.gamma0(), g1 = p.gamma1();
  auto inner = [&](double s) {
    const double a = std::max(g1 * s, x - g0 * (t - s)), b = std::min(0.0, x);
    if (!(b > a)) return 0.0;
    return oracle::integrate(
        [&](double y) { return extremum_regular_density(p, i, ExtremumKind::Min, t, s, y, x, n); },
        a, b);
  };
  // s where x - g0 (t - s) meets g1 s, where it meets 0, and where x - g1 s meets 0
  const double kink = (x - g0 * t) / (g1 - g0);
  const double zero_cross = t - x / g0;
  const double passage_cross = x / g1;
  const double volume = integrate_split(inner, 0.0, t, {kink, zero_cross});
  const double terminal = integrate_split(
      [&](double s) {
        return extremum_terminal_sheet_density(p, i, ExtremumKind::Min, t, s, x - g0 * (t - s), n);
      },
      0.0, t, {kink, zero_cross});
  const double passage = integrate_split(
      [&](double s) { return extremum_passage_sheet_density(p, i, ExtremumKind::Min, t, s, x, n); },
      0.0, t, {kink, passage_cross});
  // curve: y = g1 s, x = g1 s + g0 (t - s)
  const double curve = kink > 0 && kink < t
                           ? extremum_curve_density(p, i, ExtremumKind::Min, t, kink, n) / (g0 - g1)
                           : 0.0;
  return volume + terminal + passage + curve;
}

double singular_marginal(const TelegraphParams& p, State i, ExtremumKind kind, double t, double x,
                         int n) {
  return extremum_zeta_zero_component(p, i, kind, t, x, n).density +
         extremum_zeta_t_component(p, i, kind, t, x, n).density;
}

}  // namespace

TEST(Admissible, Ordering) {
  EXPECT_TRUE(is_admissible(ExtremumKind::Min, 2, {.s = 1.0, .y = -0.5, .x = 0.3}));
  EXPECT_FALSE(is_admissible(ExtremumKind::Min, 2, {.s = 1.0, .y = 0.5, .x = 0.3}));
  EXPECT_FALSE(is_admissible(ExtremumKind::Min, 2, {.s = 1.0, .y = -0.5, .x = -0.7}));
  EXPECT_TRUE(is_admissible(ExtremumKind::Max, 2, {.s = 1.0, .y = 0.5, .x = 0.3}));
  EXPECT_FALSE(is_admissible(ExtremumKind::Max, 2, {.s = 3.0, .y = 0.5, .x = 0.3}));
  EXPECT_TRUE(is_admissible(ExtremumKind::Min, 2, {.s = 0.0, .y = 0.0, .x = 0.3}));
  EXPECT_FALSE(is_admissible(ExtremumKind::Min, 2, {.s = 0.0, .y = -0.1, .x = 0.3}));
  EXPECT_TRUE(is_admissible(ExtremumKind::Max, 2, {.s = 2.0, .y = 0.4, .x = 0.4}));
  EXPECT_FALSE(is_admissible(ExtremumKind::Max, 2, {.s = 2.0, .y = 0.4, .x = 0.3}));
}

TEST(ZetaZero, DelegatesToMeander) {
  const auto c = extremum_zeta_zero_component(kUnit, State::Zero, ExtremumKind::Min, 2, 1, 2);
  EXPECT_NEAR(c.density, std::exp(-2.0) / 2, 1e-16);
  EXPECT_FALSE(c.atom);
  for (double x : {-1.5, -0.2, 0.4, 1.8}) {
    const auto z = extremum_zeta_zero_component(kUnit, State::One, ExtremumKind::Min, 2, x);
    EXPECT_EQ(z.density, 0.0);
    EXPECT_FALSE(z.atom);
  }
  const TelegraphParams p(2, 0.5, 3, -1);
  for (double x : {0.3, 1.7, 5.2}) {
    EXPECT_DOUBLE_EQ(extremum_zeta_zero_component(p, State::Zero, ExtremumKind::Min, 2, x).density,
                     meander_density(p, MeanderSign::Positive, 2, x));
  }
  for (double x : {-0.3, -1.7}) {
    EXPECT_DOUBLE_EQ(extremum_zeta_zero_component(p, State::One, ExtremumKind::Max, 2, x).density,
                     meander_density(p, MeanderSign::Negative, 2, x));
  }
  const auto atom = extremum_zeta_zero_component(kUnit, State::Zero, ExtremumKind::Min, 2, 2, 0);
  ASSERT_TRUE(atom.atom);
  EXPECT_EQ(atom.atom->location, 2.0);
}

TEST(ZetaT, FirstPassageOverArrivalSpeed) {
  const auto c = extremum_zeta_t_component(kUnit, State::Zero, ExtremumKind::Max, 2, 1, 2);
  EXPECT_NEAR(c.density, std::exp(-2.0) / 2, 1e-16);
  EXPECT_EQ(extremum_zeta_t_component(kUnit, State::Zero, ExtremumKind::Max, 2, 1, 3).density, 0.0);
  EXPECT_EQ(extremum_zeta_t_component(kUnit, State::Zero, ExtremumKind::Min, 2, 0.5).density, 0.0);
  const TelegraphParams p(2, 0.5, 3, -1);
  EXPECT_DOUBLE_EQ(extremum_zeta_t_component(p, State::One, ExtremumKind::Min, 2, -0.8).density,
                   fpt_density(p, State::One, 2, -0.8) / 1.0);
  EXPECT_DOUBLE_EQ(extremum_zeta_t_component(p, State::Zero, ExtremumKind::Max, 2, 0.8).density,
                   fpt_density(p, State::Zero, 2, 0.8) / 3.0);
  const auto atom = extremum_zeta_t_component(p, State::One, ExtremumKind::Min, 2, -2, 0);
  ASSERT_TRUE(atom.atom);
  EXPECT_NEAR(atom.atom->mass, std::exp(-1.0), 1e-16);
}

TEST(Regular, ParityEmptyAndRanges) {
  for (double s : {0.3, 1.0, 1.7}) {
    for (double y : {-0.1, -0.5}) {
      EXPECT_EQ(extremum_regular_density(kUnit, State::Zero, ExtremumKind::Min, 2, s, y, 0.2, 1), 0.0);
    }
  }
  EXPECT_GT(extremum_regular_density(kUnit, State::Zero, ExtremumKind::Min, 2, 1.0, -0.3, 0.2, 3), 0.0);
  EXPECT_EQ(extremum_regular_density(kUnit, State::Zero, ExtremumKind::Min, 2, 1.0, 0.3, 0.5, 3), 0.0);
  EXPECT_EQ(extremum_regular_density(kUnit, State::Zero, ExtremumKind::Min, 2, 1.0, -0.3, -0.5, 3), 0.0);
  EXPECT_EQ(extremum_regular_density(kUnit, State::Zero, ExtremumKind::Min, 2, 2.5, -0.3, 0.2, 3), 0.0);
  EXPECT_EQ(extremum_regular_density(kUnit, State::Zero, ExtremumKind::Max, 2, 1.0, -0.3, -0.5, 3), 0.0);
  // (i=0, Min, n=2): f0(s, y; 1) meets the meander atom, so only the terminal sheet carries mass
  EXPECT_GT(extremum_terminal_sheet_density(kUnit, State::Zero, ExtremumKind::Min, 2, 1.0, -0.3, 2), 0.0);
}

TEST(Regular, MarginalizationRecoversSwitchDensity) {
  const double t = 2, x = 0.3;
  const double got = singular_marginal(kUnit, State::Zero, ExtremumKind::Min, t, x, 3) +
                     regular_marginal_min(kUnit, State::Zero, t, x, 3);
  EXPECT_NEAR(got, position_switch_density(kUnit, State::Zero, t, x, 3), 2e-6);
}

TEST(Regular, MarginalizationAsymmetricFromStateOne) {
  const TelegraphParams p(2, 0.5, 3, -1);
  const double t = 1.5;
  for (int n : {1, 2, 3, 4}) {
    for (double x : {-0.9, 0.4, 2.1}) {
      const double got = singular_marginal(p, State::One, ExtremumKind::Min, t, x, n) +
                         regular_marginal_min(p, State::One, t, x, n);
      const double want = position_switch_density(p, State::One, t, x, n);
      EXPECT_NEAR(got, want, 2e-6) << "n=" << n << " x=" << x;
    }
  }
}

TEST(JointLaw, UnitMassAndMarginal) {
  for (ExtremumKind kind : {ExtremumKind::Min, ExtremumKind::Max}) {
    for (State i : {State::Zero, State::One}) {
      const JointExtremumLaw law(kUnit, i, kind, 2.0);
      EXPECT_NEAR(law.total_mass(), 1.0, 5e-6);
      const MixedLaw pos = position_law(kUnit, i, 2.0);
      for (double x = -1.9; x < 2.0; x += 0.2) {
        EXPECT_NEAR(law.x_marginal_density(x), pos.density(x), 5e-6) << x;
      }
      double atoms = 0.0;
      for (const Atom& a : law.x_marginal_atoms()) atoms += a.mass;
      EXPECT_NEAR(atoms, pos.atom_mass(), 1e-15);
    }
  }
}

TEST(JointLaw, AsymmetricMass) {
  const TelegraphParams p(2, 0.5, 3, -1);
  for (ExtremumKind kind : {ExtremumKind::Min, ExtremumKind::Max}) {
    for (State i : {State::Zero, State::One}) {
      EXPECT_NEAR(extremum_joint_law(p, i, kind, 1.5).total_mass(), 1.0, 5e-6);
    }
  }
}

TEST(JointLaw, PerCountMassesMatchCountingLaw) {
  const TelegraphParams p(2, 0.5, 3, -1);
  for (int n = 0; n < 5; ++n) {
    const double want = switch_count_probability(p, State::Zero, 1.5, n);
    EXPECT_NEAR(JointExtremumLaw(p, State::Zero, ExtremumKind::Max, 1.5, n).total_mass(), want, 5e-7)
        << n;
  }
}

TEST(JointLaw, RegularVanishesBelowMinimalCount) {
  EXPECT_EQ(JointExtremumLaw(kUnit, State::Zero, ExtremumKind::Min, 2, 1).masses().regular, 0.0);
  EXPECT_GT(JointExtremumLaw(kUnit, State::Zero, ExtremumKind::Min, 2, 2).masses().regular, 0.0);
  EXPECT_EQ(JointExtremumLaw(kUnit, State::One, ExtremumKind::Min, 2, 0).masses().regular, 0.0);
  EXPECT_GT(JointExtremumLaw(kUnit, State::One, ExtremumKind::Min, 2, 1).masses().regular, 0.0);
}

TEST(JointLaw, SameSignDegenerates) {
  const TelegraphParams up(2, 1, 3, 1);
  const JointExtremumLaw min(up, State::Zero, ExtremumKind::Min, 1.0);
  EXPECT_NEAR(min.masses().zeta_zero, 1.0, 1e-10);
  EXPECT_EQ(min.masses().zeta_t, 0.0);
  EXPECT_EQ(min.masses().regular, 0.0);
  const JointExtremumLaw max(up, State::One, ExtremumKind::Max, 1.0);
  EXPECT_EQ(max.masses().zeta_zero, 0.0);
  EXPECT_NEAR(max.masses().zeta_t, 1.0, 1e-10);
  EXPECT_EQ(max.masses().regular, 0.0);
  EXPECT_EQ(max.regular_density(0.5, 2.0, 1.9), 0.0);
  const TelegraphParams down = up.mirrored();
  EXPECT_NEAR(JointExtremumLaw(down, State::Zero, ExtremumKind::Max, 1.0).masses().zeta_zero, 1.0,
              1e-10);
  EXPECT_NEAR(JointExtremumLaw(down, State::Zero, ExtremumKind::Min, 1.0).masses().zeta_t, 1.0,
              1e-10);
}

TEST(JointLaw, ComponentMassesMatchSimulation) {
  const TelegraphParams p(2, 0.5, 3, -1);
  for (State i : {State::Zero, State::One}) {
    SimulationConfig config{.params = p};
    config.initial_state = i;
    config.horizon = 1.5;
    config.paths = 100000;
    config.seed = 5;
    config.threads = 0;
    const CampaignSummary s = run_campaign(config);
    const ComponentMasses min = JointExtremumLaw(p, i, ExtremumKind::Min, 1.5).masses();
    const ComponentMasses max = JointExtremumLaw(p, i, ExtremumKind::Max, 1.5).masses();
    EXPECT_NEAR(s.min_at_start, min.zeta_zero, 0.01);
    EXPECT_NEAR(s.min_at_end, min.zeta_t, 0.01);
    EXPECT_NEAR(s.max_at_start, max.zeta_zero, 0.01);
    EXPECT_NEAR(s.max_at_end, max.zeta_t, 0.01);
  }
}
