#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "telegraph/params.hpp"

namespace telegraph {

// Exact event-driven simulation. Holding times are exponential with the rate
// of the current state; the position is piecewise linear between switches, so
// extrema sit at switch instants or at the ends and first passages are solved
// on the crossing segment. Nothing is discretized.

struct SimulationConfig {
  TelegraphParams params;
  State initial_state = State::Zero;
  double horizon = 1.0;
  std::optional<double> threshold{};
  /// Paths are followed past the horizon up to this time while looking for
  /// the threshold; passages later than this are reported as absent.
  /// Defaults to the horizon.
  std::optional<double> fpt_horizon{};
  std::uint64_t paths = 1;
  std::uint64_t seed = 0;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;

  double passage_horizon() const { return fpt_horizon.value_or(horizon); }
};

/// Throws std::invalid_argument for horizon <= 0, paths == 0, a zero or
/// non-finite threshold, or fpt_horizon < horizon.
void validate(const SimulationConfig& config);

struct PathSample {
  double terminal = 0.0;
  int switches = 0;
  double min_value = 0.0;
  double max_value = 0.0;
  double argmin_time = 0.0;
  double argmax_time = 0.0;
  std::optional<double> fpt;
  std::optional<int> first_passage_switches;
};

/// Path number path_index of the campaign described by config. Depends only
/// on (seed, path_index): each path owns its random stream.
PathSample sample_path(const SimulationConfig& config, std::uint64_t path_index);

struct CampaignSummary {
  std::uint64_t paths = 0;
  std::vector<PathSample> samples;       // in path-index order
  std::vector<double> terminal_sorted;
  std::vector<std::uint64_t> switch_histogram;  // index = N(t)
  std::vector<double> fpt_sorted;        // observed passages only
  std::uint64_t fpt_censored = 0;
  double terminal_mean = 0.0;
  double min_at_start = 0.0;   // fraction with zeta^m = 0
  double min_at_end = 0.0;     // fraction with zeta^m = t
  double max_at_start = 0.0;
  double max_at_end = 0.0;

  double censored_fraction() const {
    return paths == 0 ? 0.0 : static_cast<double>(fpt_censored) / static_cast<double>(paths);
  }
  double switch_fraction(int n) const;
};

/// Samples all paths (in parallel when threads != 1) and reduces them in
/// path-index order, so the result is identical for every thread count.
CampaignSummary run_campaign(const SimulationConfig& config);

using Cdf = std::function<double(double)>;

/// Kolmogorov-Smirnov distance between a sample and a distribution function
/// that may have atoms. sorted holds the observed values in ascending order;
/// population >= sorted.size() counts censored observations as well (they
/// lie beyond the last observed value). cdf is right-continuous, cdf_left its
/// left limit; tail is the value of cdf at the end of the observation window
/// (compared against the empirical mass observed).
double ks_statistic(std::span<const double> sorted, std::uint64_t population, const Cdf& cdf,
                    const Cdf& cdf_left, double tail);

}  // namespace telegraph
