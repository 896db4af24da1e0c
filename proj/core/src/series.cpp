#include "telegraph/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace telegraph {

namespace {

constexpr int kMaxTerms = 500;
constexpr double kStopRatio = 1e-16;

void check_argument(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw std::domain_error("series argument must be finite and non-negative");
  }
}

// sum_n z^n / (n! (n+order)!) for order 0 or 1, with term_{n+1} =
// term_n * z / ((n+1)(n+1+order)).
double direct_sum(double z, int order) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= z / (static_cast<double>(n) * static_cast<double>(n + order));
    sum += term;
    if (term < kStopRatio * sum) break;
  }
  return sum;
}

// log I_order(x) - x for large x from
//   I_nu(x) ~ e^x / sqrt(2 pi x) * sum_k (-1)^k a_k(nu) / x^k,
//   a_k(nu) = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k).
// The expansion is cut at the smallest term; for x >= 100 that term is far
// below double precision.
double scaled_log_bessel_i_asymptotic(double x, int order) {
  const double mu = 4.0 * order * order;
  double coeff = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -coeff * (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) >= std::abs(coeff)) break;
    coeff = next;
    sum += coeff;
    if (std::abs(coeff) < 1e-18 * std::abs(sum)) break;
  }
  return -0.5 * std::log(2.0 * std::numbers::pi * x) + std::log(sum);
}

}  // namespace

double series_I0arg(double z) {
  check_argument(z);
  if (z > kSeriesAsymptoticThreshold) return std::exp(log_series_I0arg(z));
  return direct_sum(z, 0);
}

double series_I1arg(double z) {
  check_argument(z);
  if (z > kSeriesAsymptoticThreshold) return std::exp(log_series_I1arg(z));
  return direct_sum(z, 1);
}

double log_series_I0arg(double z) {
  check_argument(z);
  if (z <= kSeriesAsymptoticThreshold) return std::log(direct_sum(z, 0));
  const double x = 2.0 * std::sqrt(z);
  return x + scaled_log_bessel_i_asymptotic(x, 0);
}

double log_series_I1arg(double z) {
  check_argument(z);
  if (z <= kSeriesAsymptoticThreshold) return std::log(direct_sum(z, 1));
  const double x = 2.0 * std::sqrt(z);
  return x + scaled_log_bessel_i_asymptotic(x, 1) - 0.5 * std::log(z);
}

double scaled_log_series_I0arg(double z) {
  if (z == std::numeric_limits<double>::infinity()) return -z;
  check_argument(z);
  const double x = 2.0 * std::sqrt(z);
  if (z <= kSeriesAsymptoticThreshold) return std::log(direct_sum(z, 0)) - x;
  return scaled_log_bessel_i_asymptotic(x, 0);
}

double scaled_log_series_I1arg(double z) {
  if (z == std::numeric_limits<double>::infinity()) return -z;
  check_argument(z);
  const double x = 2.0 * std::sqrt(z);
  if (z <= kSeriesAsymptoticThreshold) return std::log(direct_sum(z, 1)) - x;
  return scaled_log_bessel_i_asymptotic(x, 1) - 0.5 * std::log(z);
}

}  // namespace telegraph
