#pragma once

namespace telegraph {

// The two Bessel-type power series that appear in every summed law:
//
//   I0arg(z) = sum_n z^n / (n!)^2          = I_0(2 sqrt z)
//   I1arg(z) = sum_n z^n / (n! (n+1)!)     = I_1(2 sqrt z) / sqrt z
//
// Both are evaluated by term recursion for z <= kSeriesAsymptoticThreshold and
// by the large-argument Bessel expansion above it. The plain versions overflow
// to +inf once the value exceeds DBL_MAX (around z = 1.27e5); the log versions
// stay finite and are what the density code uses.
//
// All four throw std::domain_error for z < 0 or non-finite z.
//
// The scaled logs subtract the growth rate 2 sqrt z. They accept z = +inf
// (returning -inf) so that far tails evaluate to zero instead of failing.

inline constexpr double kSeriesAsymptoticThreshold = 2500.0;

double series_I0arg(double z);
double series_I1arg(double z);

double log_series_I0arg(double z);
double log_series_I1arg(double z);

/// log I0arg(z) - 2 sqrt z
double scaled_log_series_I0arg(double z);
/// log I1arg(z) - 2 sqrt z
double scaled_log_series_I1arg(double z);

}  // namespace telegraph
