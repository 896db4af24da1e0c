#pragma once

// Plain re-evaluations of the closed forms used as test oracles. Sums run
// in 50-digit binary floating point and never touch the library's series code.

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

struct Proc {
  double l0, l1, g0, g1;
};

inline big xi0(const Proc& p, double t, double x) { return (big(x) - big(p.g1) * t) / (big(p.g0) - p.g1); }
inline big xi1(const Proc& p, double t, double x) { return (big(p.g0) * t - x) / (big(p.g0) - p.g1); }
inline big zz(const Proc& p, double t, double x) { return big(p.l0) * p.l1 * xi0(p, t, x) * xi1(p, t, x); }
inline big theta(const Proc& p, double t, double x) {
  return exp(-big(p.l0) * xi0(p, t, x) - big(p.l1) * xi1(p, t, x)) / (big(p.g0) - p.g1);
}

// z^k / (k! (k+shift)!)
inline big term(const big& z, int k, int shift) {
  big r = 1;
  for (int j = 1; j <= k; ++j) r *= z / j;
  for (int j = 1; j <= k + shift; ++j) r /= j;
  return r;
}

// sum_k z^k / (k! (k+shift)!) until the terms stop mattering
inline big series(const big& z, int shift) {
  big sum = 0, t = 1;
  for (int j = 1; j <= shift; ++j) t /= j;
  for (int k = 0; k < 100000; ++k) {
    sum += t;
    t *= z / ((k + 1) * big(k + 1 + shift));
    if (k > 2 && t < sum * big("1e-45")) break;
  }
  return sum;
}

inline bool inside(const Proc& p, double t, double x) { return x > p.g1 * t && x < p.g0 * t; }

// position density with exactly n >= 1 switches
inline double p_n(const Proc& p, int i, double t, double x, int n) {
  if (!inside(p, t, x)) return 0.0;
  const big z = zz(p, t, x), th = theta(p, t, x);
  const int k = (n - 1) / 2;
  if (n % 2 == 1) return static_cast<double>((i == 0 ? p.l0 : p.l1) * term(z, k, 0) * th);
  const big xi = i == 0 ? xi0(p, t, x) : xi1(p, t, x);
  return static_cast<double>(big(p.l0) * p.l1 * xi * term(z, k, 1) * th);
}

inline double p_sum(const Proc& p, int i, double t, double x) {
  if (!inside(p, t, x)) return 0.0;
  const big z = zz(p, t, x), th = theta(p, t, x);
  const big xi = i == 0 ? xi0(p, t, x) : xi1(p, t, x);
  const double li = i == 0 ? p.l0 : p.l1, lo = i == 0 ? p.l1 : p.l0;
  return static_cast<double>(li * (series(z, 0) + lo * xi * series(z, 1)) * th);
}

// first passage through y > 0 with opposite-sign velocities, n >= 1 switches
inline double f_n_opposite(const Proc& p, int i, double t, double y, int n) {
  if (!(t > y / p.g0)) return 0.0;
  const big z = zz(p, t, y), th = theta(p, t, y);
  const int k = (n - 1) / 2;
  if (i == 1 && n % 2 == 1) {
    return static_cast<double>(big(p.l1) / xi0(p, t, y) * term(z, k, 0) * th *
                               (big(y) - big(p.g1) * xi1(p, t, y) / (k + 1)));
  }
  if (i == 0 && n % 2 == 0) return static_cast<double>(big(p.l0) * p.l1 * y * term(z, k, 1) * th);
  return 0.0;
}

// positive meander density with n >= 1 switches
inline double gplus_n(const Proc& p, double t, double x, int n) {
  if (!(x > 0 && x < p.g0 * t)) return 0.0;
  const big z = zz(p, t, x), th = theta(p, t, x);
  const int k = (n - 1) / 2;
  if (n % 2 == 1) {
    return static_cast<double>(big(p.l0) / xi0(p, t, x) * term(z, k, 0) * th *
                               (big(x) - big(p.g1) * xi1(p, t, x) / (k + 1)) / p.g0);
  }
  return static_cast<double>(big(p.l0) * p.l1 * term(z, k, 1) * th * x / p.g0);
}

template <class F>
double integrate(F f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, a, b, 1e-12);
}

}  // namespace oracle
