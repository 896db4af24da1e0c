#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "telegraph/densities.hpp"
#include "telegraph/first_passage.hpp"
#include "telegraph/meander.hpp"
#include "telegraph/montecarlo.hpp"

using namespace telegraph;

namespace {

const TelegraphParams kUnit(1, 1, 1, -1);

SimulationConfig unit_config(std::uint64_t paths, std::uint64_t seed = 42) {
  SimulationConfig c{.params = kUnit};
  c.horizon = 2.0;
  c.paths = paths;
  c.seed = seed;
  c.threads = 0;
  return c;
}

}  // namespace

TEST(Config, Validation) {
  SimulationConfig c = unit_config(10);
  EXPECT_NO_THROW(validate(c));
  c.horizon = 0.0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = unit_config(0);
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = unit_config(10);
  c.threshold = 0.0;
  EXPECT_THROW(validate(c), std::invalid_argument);
  c = unit_config(10);
  c.fpt_horizon = 1.0;
  EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(SamplePath, DeterministicPerIndex) {
  SimulationConfig c = unit_config(1);
  c.threshold = 0.5;
  for (std::uint64_t k : {0ull, 7ull, 123456789ull}) {
    const PathSample a = sample_path(c, k);
    const PathSample b = sample_path(c, k);
    EXPECT_EQ(a.terminal, b.terminal);
    EXPECT_EQ(a.switches, b.switches);
    EXPECT_EQ(a.fpt, b.fpt);
  }
  EXPECT_NE(sample_path(c, 0).terminal, sample_path(c, 1).terminal);
}

TEST(SamplePath, Invariants) {
  SimulationConfig c{.params = TelegraphParams(2, 0.5, 3, -1)};
  c.horizon = 1.5;
  for (std::uint64_t k = 0; k < 20000; ++k) {
    const PathSample s = sample_path(c, k);
    ASSERT_LE(s.min_value, 0.0);
    ASSERT_GE(s.max_value, 0.0);
    ASSERT_LE(s.min_value, s.terminal);
    ASSERT_GE(s.max_value, s.terminal);
    ASSERT_GE(s.argmin_time, 0.0);
    ASSERT_LE(s.argmin_time, 1.5);
    ASSERT_GE(s.argmax_time, 0.0);
    ASSERT_LE(s.argmax_time, 1.5);
    if (s.switches == 0) {
      EXPECT_DOUBLE_EQ(s.terminal, 3 * 1.5);
      EXPECT_EQ(s.min_value, 0.0);
      EXPECT_EQ(s.max_value, s.terminal);
    }
  }
}

TEST(SamplePath, NoSwitchFromStateOne) {
  SimulationConfig c{.params = TelegraphParams(1, 0.05, 1, -2)};
  c.initial_state = State::One;
  c.horizon = 1.0;
  int seen = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const PathSample s = sample_path(c, k);
    if (s.switches != 0) continue;
    ++seen;
    EXPECT_DOUBLE_EQ(s.terminal, -2.0);
    EXPECT_EQ(s.min_value, -2.0);
    EXPECT_EQ(s.max_value, 0.0);
    EXPECT_EQ(s.argmin_time, 1.0);
  }
  EXPECT_GT(seen, 100);
}

TEST(SamplePath, SameSignPassageInSegment) {
  SimulationConfig c{.params = TelegraphParams(1, 2, 2, 1)};
  c.horizon = 0.1;
  c.threshold = 1.0;
  c.fpt_horizon = 2.0;
  for (std::uint64_t k = 0; k < 20000; ++k) {
    const PathSample s = sample_path(c, k);
    ASSERT_TRUE(s.fpt);
    ASSERT_GE(*s.fpt, 0.5);
    ASSERT_LE(*s.fpt, 1.0);
  }
}

TEST(Campaign, NoSwitchFraction) {
  const CampaignSummary s = run_campaign(unit_config(100000));
  const double p = std::exp(-2.0);
  EXPECT_NEAR(s.switch_fraction(0), p, 3 * std::sqrt(p * (1 - p) / 1e5));
}

TEST(Campaign, TerminalMeanSymmetricStart) {
  // average the two initial states: the mixture is symmetric
  SimulationConfig c = unit_config(50000);
  const double m0 = run_campaign(c).terminal_mean;
  c.initial_state = State::One;
  const double m1 = run_campaign(c).terminal_mean;
  EXPECT_NEAR(0.5 * (m0 + m1), 0.0, 0.01);
  EXPECT_NEAR(m0, (1 - std::exp(-4.0)) / 2, 0.02);
}

TEST(Campaign, IdenticalForAnyThreadCount) {
  SimulationConfig c = unit_config(20000, 3);
  c.threshold = 1.0;
  c.fpt_horizon = 10.0;
  c.threads = 1;
  const CampaignSummary a = run_campaign(c);
  c.threads = 4;
  const CampaignSummary b = run_campaign(c);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t k = 0; k < a.samples.size(); ++k) {
    ASSERT_EQ(a.samples[k].terminal, b.samples[k].terminal);
    ASSERT_EQ(a.samples[k].fpt, b.samples[k].fpt);
  }
  EXPECT_EQ(a.terminal_mean, b.terminal_mean);
  EXPECT_EQ(a.fpt_sorted, b.fpt_sorted);
  EXPECT_EQ(a.switch_histogram, b.switch_histogram);
}

TEST(Campaign, CountingLawChiSquare) {
  const CampaignSummary s = run_campaign(unit_config(100000, 8));
  double chi2 = 0.0;
  int cells = 0;
  double tail = 1.0;
  for (int n = 0; n < 8; ++n) {
    const double p = switch_count_probability(kUnit, State::Zero, 2.0, n);
    tail -= p;
    const double e = 1e5 * p;
    const double o = n < static_cast<int>(s.switch_histogram.size()) ? s.switch_histogram[n] : 0.0;
    chi2 += (o - e) * (o - e) / e;
    ++cells;
  }
  double over = 0.0;
  for (std::size_t n = 8; n < s.switch_histogram.size(); ++n) over += s.switch_histogram[n];
  chi2 += (over - 1e5 * tail) * (over - 1e5 * tail) / (1e5 * tail);
  const boost::math::chi_squared dist(cells);
  EXPECT_GT(boost::math::cdf(boost::math::complement(dist, chi2)), 0.001);
}

TEST(Campaign, PositionKolmogorovSmirnov) {
  const CampaignSummary s = run_campaign(unit_config(100000, 11));
  const CdfTable cdf = position_law(kUnit, State::Zero, 2.0).tabulate_cdf();
  const double d = ks_statistic(
      s.terminal_sorted, s.paths, [&](double v) { return cdf(v); },
      [&](double v) { return cdf.left(v); }, 1.0);
  EXPECT_LE(d, 0.015);
}

TEST(Campaign, MeanderMass) {
  const CampaignSummary s = run_campaign(unit_config(100000, 12));
  EXPECT_NEAR(s.min_at_start, meander_law(kUnit, MeanderSign::Positive, 2.0).total_mass(), 0.01);
}

TEST(KolmogorovSmirnov, ElementaryCases) {
  const auto uniform = [](double v) { return std::clamp(v, 0.0, 1.0); };
  const std::vector<double> one{0.5};
  EXPECT_DOUBLE_EQ(ks_statistic(one, 1, uniform, uniform, 1.0), 0.5);
  const std::vector<double> grid{0.125, 0.375, 0.625, 0.875};
  EXPECT_DOUBLE_EQ(ks_statistic(grid, 4, uniform, uniform, 1.0), 0.125);
  // an atom at 0 of mass 1/2 matched exactly by the sample
  const auto step = [](double v) { return v < 0 ? 0.0 : 0.5 + 0.5 * std::min(v, 1.0); };
  const auto step_left = [](double v) { return v <= 0 ? 0.0 : 0.5 + 0.5 * std::min(v, 1.0); };
  const std::vector<double> mixed{0.0, 0.0, 0.25, 0.75};
  EXPECT_NEAR(ks_statistic(mixed, 4, step, step_left, 1.0), 0.125, 1e-15);
  // censoring: two of four observations beyond the window where cdf reaches 0.5
  const std::vector<double> censored{0.125, 0.375};
  EXPECT_NEAR(ks_statistic(censored, 4, uniform, uniform, 0.5), 0.125, 1e-15);
}
