#include "telegraph/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace telegraph {

namespace {

constexpr double kZeroVelocityRelTol = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

State state_from_index(int i) {
  if (i == 0) return State::Zero;
  if (i == 1) return State::One;
  throw std::invalid_argument("initial state must be 0 or 1, got " + std::to_string(i));
}

const char* to_string(VelocityRegime regime) noexcept {
  switch (regime) {
    case VelocityRegime::BothPositive:
      return "both-positive";
    case VelocityRegime::BothNegative:
      return "both-negative";
    case VelocityRegime::OppositeSigns:
      return "opposite-signs";
  }
  return "unknown";
}

TelegraphParams::TelegraphParams(double lambda0, double lambda1, double gamma0,
                                 double gamma1)
    : lambda_{lambda0, lambda1}, gamma_{gamma0, gamma1} {
  require(std::isfinite(lambda0) && lambda0 > 0.0, "lambda0 must be positive and finite");
  require(std::isfinite(lambda1) && lambda1 > 0.0, "lambda1 must be positive and finite");
  require(std::isfinite(gamma0) && std::isfinite(gamma1), "velocities must be finite");
  require(gamma0 > gamma1, "gamma0 must be strictly greater than gamma1");
  const double scale = std::max({std::abs(gamma0), std::abs(gamma1), 1.0});
  require(std::abs(gamma0) >= kZeroVelocityRelTol * scale, "gamma0 must be nonzero");
  require(std::abs(gamma1) >= kZeroVelocityRelTol * scale, "gamma1 must be nonzero");

  if (gamma1 > 0.0) {
    regime_ = VelocityRegime::BothPositive;
  } else if (gamma0 < 0.0) {
    regime_ = VelocityRegime::BothNegative;
  } else {
    regime_ = VelocityRegime::OppositeSigns;
  }
}

TelegraphParams TelegraphParams::mirrored() const {
  return TelegraphParams(lambda_[1], lambda_[0], -gamma_[1], -gamma_[0]);
}

VelocityRegime classify_regime(const TelegraphParams& params) noexcept {
  return params.regime();
}

Kinematics kinematics(const TelegraphParams& params, double t, double x) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("kinematics: time must be positive and finite");
  }
  if (!std::isfinite(x)) throw std::domain_error("kinematics: position must be finite");

  const double width = params.gamma0() - params.gamma1();
  Kinematics k{};
  // Both occupation times are formed directly so that xi1 is exactly zero on
  // the line x = gamma0 t (and xi0 on x = gamma1 t).
  k.xi0 = (x - params.gamma1() * t) / width;
  k.xi1 = (params.gamma0() * t - x) / width;
  k.z = params.lambda0() * params.lambda1() * k.xi0 * k.xi1;
  k.log_theta = -params.lambda0() * k.xi0 - params.lambda1() * k.xi1 - std::log(width);
  k.theta = std::exp(k.log_theta);
  k.log_theta_scaled = k.log_theta;
  if (k.xi0 > 0.0 && k.xi1 > 0.0) {
    const double a = params.lambda0() * k.xi0;
    const double b = params.lambda1() * k.xi1;
    // a - b from x and t directly; exact for zero drift.
    const double diff = ((params.lambda0() + params.lambda1()) * x -
                         (params.lambda0() * params.gamma1() + params.lambda1() * params.gamma0()) * t) /
                        width;
    const double gap = diff / (std::sqrt(a) + std::sqrt(b));
    k.log_theta_scaled = -gap * gap - std::log(width);
  }
  return k;
}

}  // namespace telegraph
