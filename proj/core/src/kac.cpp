#include "telegraph/kac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "telegraph/first_passage.hpp"

namespace telegraph {

double KacTargets::Sigma() const {
  const double s0 = sigma0();
  return s0 * sigma1 / std::sqrt((s0 * s0 + sigma1 * sigma1) / 2.0);
}

void validate(const KacTargets& targets) {
  if (!(targets.nu > 0.0) || !std::isfinite(targets.nu)) {
    throw std::invalid_argument("kac: nu must be positive");
  }
  if (!(targets.sigma1 > 0.0) || !std::isfinite(targets.sigma1)) {
    throw std::invalid_argument("kac: sigma1 must be positive");
  }
  if (!std::isfinite(targets.delta)) throw std::invalid_argument("kac: delta must be finite");
}

TelegraphParams kac_family_member(const KacTargets& targets, double k) {
  validate(targets);
  if (!(k >= 1.0) || !std::isfinite(k)) throw std::invalid_argument("kac: scale k must be >= 1");
  const double g0 = targets.sigma0() * targets.nu * k + targets.delta;
  const double g1 = -targets.sigma1 * k + targets.delta;
  if (!(g0 > 0.0 && g1 < 0.0)) {
    throw std::invalid_argument("kac: drift too large for this scale, velocities share a sign");
  }
  return TelegraphParams(targets.nu * targets.nu * k * k, k * k, g0, g1);
}

double kac_drift_expression(const TelegraphParams& p) {
  return (p.gamma0() * p.lambda1() + p.gamma1() * p.lambda0()) / (p.lambda0() + p.lambda1());
}

double inverse_gaussian_fpt_density(double t, double y, double Sigma, double delta) {
  if (!(t > 0.0) || !(y > 0.0) || !(Sigma > 0.0)) {
    throw std::domain_error("inverse_gaussian_fpt_density: need t > 0, y > 0, Sigma > 0");
  }
  const double shift = y - delta * t;
  return y / (std::sqrt(2.0 * std::numbers::pi) * Sigma * t * std::sqrt(t)) *
         std::exp(-shift * shift / (2.0 * Sigma * Sigma * t));
}

std::vector<KacErrors> convergence_check(const KacTargets& targets, double y,
                                         std::span<const double> k_grid,
                                         std::span<const double> t_grid) {
  if (!std::is_sorted(k_grid.begin(), k_grid.end()) ||
      std::adjacent_find(k_grid.begin(), k_grid.end()) != k_grid.end()) {
    throw std::invalid_argument("convergence_check: k grid must be increasing");
  }
  const double Sigma = targets.Sigma();
  std::vector<KacErrors> out;
  out.reserve(k_grid.size());
  for (double k : k_grid) {
    const TelegraphParams p = kac_family_member(targets, k);
    KacErrors e;
    e.k = k;
    for (double t : t_grid) {
      const double limit = inverse_gaussian_fpt_density(t, y, Sigma, targets.delta);
      e.error_f0 = std::max(e.error_f0, std::abs(fpt_density(p, State::Zero, t, y) - limit));
      e.error_f1 = std::max(e.error_f1, std::abs(fpt_density(p, State::One, t, y) - limit));
    }
    e.atom_mass = fpt_atom(p, State::Zero, y)->mass;
    out.push_back(e);
  }
  return out;
}

std::vector<double> uniform_time_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(hi > lo)) throw std::invalid_argument("uniform_time_grid: need n >= 2, hi > lo");
  std::vector<double> grid(n);
  for (std::size_t j = 0; j < n; ++j) {
    grid[j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
  }
  return grid;
}

}  // namespace telegraph
