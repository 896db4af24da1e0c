#pragma once

#include <array>
#include <stdexcept>

namespace telegraph {

/// State of the driving two-state Markov chain. State Zero moves with the
/// larger velocity gamma0, state One with gamma1.
enum class State : int { Zero = 0, One = 1 };

constexpr int index(State s) noexcept { return static_cast<int>(s); }
constexpr State other(State s) noexcept {
  return s == State::Zero ? State::One : State::Zero;
}
/// Throws std::invalid_argument unless i is 0 or 1.
State state_from_index(int i);

enum class VelocityRegime { BothPositive, BothNegative, OppositeSigns };

const char* to_string(VelocityRegime regime) noexcept;

/// Switching rates (lambda0, lambda1) and velocities (gamma0 > gamma1) of an
/// asymmetric telegraph process. Immutable once constructed.
///
/// Construction rejects non-positive or non-finite rates, gamma0 <= gamma1,
/// and (numerically) zero velocities: every support endpoint y/gamma_i of the
/// first-passage laws divides by a velocity.
class TelegraphParams {
 public:
  TelegraphParams(double lambda0, double lambda1, double gamma0, double gamma1);

  double lambda0() const noexcept { return lambda_[0]; }
  double lambda1() const noexcept { return lambda_[1]; }
  double gamma0() const noexcept { return gamma_[0]; }
  double gamma1() const noexcept { return gamma_[1]; }

  double lambda(State s) const noexcept { return lambda_[index(s)]; }
  double gamma(State s) const noexcept { return gamma_[index(s)]; }

  VelocityRegime regime() const noexcept { return regime_; }

  /// Parameters of the reflected process -Gamma with the states relabelled:
  /// lambda0 <-> lambda1, gamma0 -> -gamma1, gamma1 -> -gamma0.
  TelegraphParams mirrored() const;

  friend bool operator==(const TelegraphParams&, const TelegraphParams&) = default;

 private:
  std::array<double, 2> lambda_;
  std::array<double, 2> gamma_;
  VelocityRegime regime_;
};

VelocityRegime classify_regime(const TelegraphParams& params) noexcept;

/// Point-dependent quantities at (t, x).
///
///   xi0 = (x - gamma1 t) / (gamma0 - gamma1)   time spent in state 0
///   xi1 = (gamma0 t - x) / (gamma0 - gamma1)   time spent in state 1
///   z   = lambda0 lambda1 xi0 xi1
///   theta = exp(-lambda0 xi0 - lambda1 xi1) / (gamma0 - gamma1)
///
/// Defined for every x; z is negative outside gamma1 t <= x <= gamma0 t and
/// callers apply their own support indicators. log_theta is carried so that
/// densities can be assembled without under/overflow.
///
/// log_theta_scaled = log_theta + 2 sqrt(max(z, 0)). Inside the support it
/// equals -(sqrt(lambda0 xi0) - sqrt(lambda1 xi1))^2 - log(gamma0 - gamma1)
/// and is evaluated in that form, which does not cancel for large t.
struct Kinematics {
  double xi0;
  double xi1;
  double z;
  double theta;
  double log_theta;
  double log_theta_scaled;
};

/// Throws std::domain_error for t <= 0 or non-finite arguments.
Kinematics kinematics(const TelegraphParams& params, double t, double x);

}  // namespace telegraph
