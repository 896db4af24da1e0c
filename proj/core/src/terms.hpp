#pragma once

// Log-space building blocks shared by the density modules. Every closed form
// here is a product  theta * (series or single term) * (algebraic prefactor);
// theta decays like exp(-lambda t) while the series grows like
// exp(2 sqrt z), so the two are combined in log space before exponentiating.

#include <algorithm>
#include <cmath>
#include <string>
#include <stdexcept>

#include "telegraph/params.hpp"
#include "telegraph/series.hpp"

namespace telegraph::detail {

/// Split of a switch count n >= 1 into its parity branch:
/// odd n = 2k+1, even n = 2k+2.
struct SwitchSplit {
  bool odd;
  int k;
};

inline SwitchSplit split_switches(int n) {
  if (n <= 0) throw std::domain_error("switch count must be at least 1");
  return (n % 2 == 1) ? SwitchSplit{true, (n - 1) / 2} : SwitchSplit{false, (n - 2) / 2};
}

/// log( z^k / (k!)^2 )
inline double log_odd_term(double z, int k) {
  const double power = k == 0 ? 0.0 : k * std::log(std::max(z, 0.0));
  return power - 2.0 * std::lgamma(k + 1.0);
}

/// log( z^k / (k! (k+1)!) )
inline double log_even_term(double z, int k) {
  const double power = k == 0 ? 0.0 : k * std::log(std::max(z, 0.0));
  return power - std::lgamma(k + 1.0) - std::lgamma(k + 2.0);
}

/// theta * z^k / (k!)^2
inline double theta_odd(const Kinematics& kin, int k) {
  return std::exp(kin.log_theta + log_odd_term(kin.z, k));
}

/// theta * z^k / (k! (k+1)!)
inline double theta_even(const Kinematics& kin, int k) {
  return std::exp(kin.log_theta + log_even_term(kin.z, k));
}

/// theta * I0arg(z) and theta * I1arg(z). z is clamped at zero to absorb
/// rounding on the support boundary.
inline double theta_I0(const Kinematics& kin) {
  return std::exp(kin.log_theta_scaled + scaled_log_series_I0arg(std::max(kin.z, 0.0)));
}
inline double theta_I1(const Kinematics& kin) {
  return std::exp(kin.log_theta_scaled + scaled_log_series_I1arg(std::max(kin.z, 0.0)));
}

inline void require_positive_time(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error(std::string(who) + ": time must be positive and finite");
  }
}

}  // namespace telegraph::detail
