#pragma once

// Adaptive quadrature for the core library. Private; public headers never
// include Boost.
//
// integrate() is a globally adaptive Gauss-Kronrod (10/21) scheme: the panel
// with the largest error estimate is bisected until the summed estimate drops
// below tolerance * L1 or the panel budget is spent. Boost supplies the nodes
// and weights. Its own recursive driver is not used because in Boost 1.74 it
// compares an unscaled error estimate against a scaled tolerance, which stalls
// on short intervals.

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace telegraph::quad {

struct Options {
  double tolerance = 1e-12;  // relative to the L1 norm of the integrand
  unsigned max_depth = 15;   // at most 2^max_depth panels
};

namespace detail {

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_panel(F& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
  using gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& x = kronrod::abscissa();
  const auto& wk = kronrod::weights();
  const auto& wg = gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f0 = f(mid);
  double k = f0 * wk[0];
  double g = 0.0;
  double l1 = std::abs(f0) * wk[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double fp = f(mid + half * x[i]);
    const double fm = f(mid - half * x[i]);
    k += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    // Odd Kronrod indices are the Gauss nodes.
    if (i % 2 == 1) g += (fp + fm) * wg[i / 2];
  }
  const double error = std::max(std::abs(k - g) * half,
                                50.0 * std::numeric_limits<double>::epsilon() * l1 * half);
  return {a, b, k * half, error, l1 * half};
}

}  // namespace detail

template <class F>
double integrate(F&& f, double a, double b, Options opts = {}) {
  if (!(b > a)) return 0.0;
  std::priority_queue<detail::Panel> panels;
  panels.push(detail::gauss_kronrod_panel(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  double l1 = panels.top().l1;
  const std::size_t budget = std::size_t{1} << std::min(opts.max_depth, 24u);
  while (error > opts.tolerance * l1 && panels.size() < budget) {
    const detail::Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    panels.pop();
    const detail::Panel left = detail::gauss_kronrod_panel(f, worst.a, mid);
    const detail::Panel right = detail::gauss_kronrod_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  return value;
}

/// Integral over [a, b] split at the given interior points (kinks or jumps of
/// the integrand). Points outside (a, b) are ignored.
template <class F>
double integrate(F&& f, double a, double b, std::span<const double> breaks,
                 Options opts = {}) {
  if (!(b > a)) return 0.0;
  std::vector<double> cuts{a};
  for (double c : breaks) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    total += integrate(f, cuts[k], cuts[k + 1], opts);
  }
  return total;
}

/// Integral over [a, +inf). The integrand may decay algebraically.
template <class F>
double integrate_to_infinity(F&& f, double a, Options opts = {}) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  return integrator.integrate(f, a, std::numeric_limits<double>::infinity(),
                              std::max(opts.tolerance, 1e-13), &error, &l1, &levels);
}

}  // namespace telegraph::quad
