#include "telegraph/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace telegraph {

namespace {

std::mt19937_64 path_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

unsigned worker_count(const SimulationConfig& config) {
  unsigned n = config.threads;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(n, config.paths));
}

}  // namespace

void validate(const SimulationConfig& config) {
  if (!(config.horizon > 0.0) || !std::isfinite(config.horizon)) {
    throw std::invalid_argument("simulation: horizon must be positive and finite");
  }
  if (config.paths == 0) throw std::invalid_argument("simulation: paths must be at least 1");
  if (config.threshold && (!std::isfinite(*config.threshold) || *config.threshold == 0.0)) {
    throw std::invalid_argument("simulation: threshold must be finite and nonzero");
  }
  if (config.fpt_horizon &&
      (!std::isfinite(*config.fpt_horizon) || *config.fpt_horizon < config.horizon)) {
    throw std::invalid_argument("simulation: fpt horizon must be finite and >= horizon");
  }
}

PathSample sample_path(const SimulationConfig& config, std::uint64_t path_index) {
  const TelegraphParams& p = config.params;
  const double horizon = config.horizon;
  const double limit = config.threshold ? config.passage_horizon() : horizon;
  std::mt19937_64 rng = path_stream(config.seed, path_index);

  PathSample out;
  State state = config.initial_state;
  double t = 0.0;
  double x = 0.0;
  int switches = 0;
  bool terminal_done = false;

  while (true) {
    const double rate = p.lambda(state);
    const double v = p.gamma(state);
    const double hold = std::exponential_distribution<double>(rate)(rng);
    const double end = t + hold;

    if (config.threshold && !out.fpt) {
      const double tau = (*config.threshold - x) / v;
      if (tau >= 0.0 && tau <= hold && t + tau <= limit) {
        out.fpt = t + tau;
        out.first_passage_switches = switches;
      }
    }
    if (!terminal_done) {
      const double stop = std::min(end, horizon);
      const double xs = x + v * (stop - t);
      if (xs < out.min_value) {
        out.min_value = xs;
        out.argmin_time = stop;
      }
      if (xs > out.max_value) {
        out.max_value = xs;
        out.argmax_time = stop;
      }
      if (end >= horizon) {
        out.terminal = xs;
        out.switches = switches;
        terminal_done = true;
      }
    }
    if (terminal_done && (out.fpt || !config.threshold || end >= limit)) break;

    x += v * hold;
    t = end;
    state = other(state);
    ++switches;
  }
  return out;
}

double CampaignSummary::switch_fraction(int n) const {
  if (n < 0 || paths == 0 || static_cast<std::size_t>(n) >= switch_histogram.size()) return 0.0;
  return static_cast<double>(switch_histogram[static_cast<std::size_t>(n)]) /
         static_cast<double>(paths);
}

CampaignSummary run_campaign(const SimulationConfig& config) {
  validate(config);
  CampaignSummary summary;
  summary.paths = config.paths;
  summary.samples.resize(config.paths);

  const unsigned workers = worker_count(config);
  auto fill = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) summary.samples[k] = sample_path(config, k);
  };
  if (workers <= 1) {
    fill(0, config.paths);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (config.paths + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min<std::uint64_t>(config.paths, w * chunk);
      const std::uint64_t end = std::min<std::uint64_t>(config.paths, begin + chunk);
      pool.emplace_back(fill, begin, end);
    }
  }

  const double horizon = config.horizon;
  double sum = 0.0;
  std::uint64_t min_start = 0, min_end = 0, max_start = 0, max_end = 0;
  summary.terminal_sorted.reserve(config.paths);
  for (const PathSample& s : summary.samples) {
    summary.terminal_sorted.push_back(s.terminal);
    sum += s.terminal;
    const auto n = static_cast<std::size_t>(s.switches);
    if (n >= summary.switch_histogram.size()) summary.switch_histogram.resize(n + 1, 0);
    ++summary.switch_histogram[n];
    if (s.fpt) {
      summary.fpt_sorted.push_back(*s.fpt);
    } else if (config.threshold) {
      ++summary.fpt_censored;
    }
    min_start += s.argmin_time == 0.0;
    min_end += s.argmin_time == horizon;
    max_start += s.argmax_time == 0.0;
    max_end += s.argmax_time == horizon;
  }
  std::sort(summary.terminal_sorted.begin(), summary.terminal_sorted.end());
  std::sort(summary.fpt_sorted.begin(), summary.fpt_sorted.end());
  const auto total = static_cast<double>(config.paths);
  summary.terminal_mean = sum / total;
  summary.min_at_start = static_cast<double>(min_start) / total;
  summary.min_at_end = static_cast<double>(min_end) / total;
  summary.max_at_start = static_cast<double>(max_start) / total;
  summary.max_at_end = static_cast<double>(max_end) / total;
  return summary;
}

double ks_statistic(std::span<const double> sorted, std::uint64_t population, const Cdf& cdf,
                    const Cdf& cdf_left, double tail) {
  if (population == 0 || population < sorted.size()) {
    throw std::invalid_argument("ks_statistic: population must cover the sample");
  }
  const auto total = static_cast<double>(population);
  double d = 0.0;
  std::size_t k = 0;
  while (k < sorted.size()) {
    std::size_t j = k;
    while (j < sorted.size() && sorted[j] == sorted[k]) ++j;
    const double v = sorted[k];
    d = std::max(d, std::abs(static_cast<double>(k) / total - cdf_left(v)));
    d = std::max(d, std::abs(static_cast<double>(j) / total - cdf(v)));
    k = j;
  }
  d = std::max(d, std::abs(static_cast<double>(sorted.size()) / total - tail));
  return d;
}

}  // namespace telegraph
