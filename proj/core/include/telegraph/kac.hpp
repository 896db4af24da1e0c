#pragma once

#include <span>
#include <vector>

#include "telegraph/params.hpp"

namespace telegraph {

/// Targets of the diffusive scaling: rate ratio nu^2, diffusivities sigma0
/// (derived as sigma1 * nu) and sigma1, drift delta.
struct KacTargets {
  double nu = 1.0;
  double sigma1 = 1.0;
  double delta = 0.0;

  double sigma0() const noexcept { return sigma1 * nu; }
  /// sigma0 sigma1 / sqrt((sigma0^2 + sigma1^2) / 2)
  double Sigma() const;
};

/// Throws std::invalid_argument for nu <= 0, sigma1 <= 0 or non-finite delta.
void validate(const KacTargets& targets);

/// lambda0 = nu^2 k^2, lambda1 = k^2, gamma0 = sigma0 nu k + delta,
/// gamma1 = -sigma1 k + delta. Throws std::invalid_argument for k < 1 or when
/// the drift is large enough to give both velocities the same sign.
TelegraphParams kac_family_member(const KacTargets& targets, double k);

/// (gamma0 lambda1 + gamma1 lambda0) / (lambda0 + lambda1)
double kac_drift_expression(const TelegraphParams& params);

/// y / (sqrt(2 pi) Sigma t^{3/2}) exp(-(y - delta t)^2 / (2 Sigma^2 t)).
/// Throws std::domain_error unless t > 0, y > 0, Sigma > 0.
double inverse_gaussian_fpt_density(double t, double y, double Sigma, double delta);

struct KacErrors {
  double k = 0.0;
  double error_f0 = 0.0;  // sup over the grid of |F0 density - limit|
  double error_f1 = 0.0;
  double atom_mass = 0.0;  // no-switch mass exp(-lambda0 y / gamma0)
};

/// Sup-norm distance of both first-passage densities of the family member at
/// each k to the inverse-Gaussian limit, over t_grid. k_grid must be
/// increasing (std::invalid_argument otherwise).
std::vector<KacErrors> convergence_check(const KacTargets& targets, double y,
                                         std::span<const double> k_grid,
                                         std::span<const double> t_grid);

/// n equally spaced times on [lo, hi].
std::vector<double> uniform_time_grid(double lo, double hi, std::size_t n);

}  // namespace telegraph
