#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "oracle.hpp"
#include "telegraph/first_passage.hpp"
#include "telegraph/kac.hpp"

using namespace telegraph;

TEST(KacFamily, SymmetricBase) {
  EXPECT_EQ(kac_family_member({1, 1, 0}, 1), TelegraphParams(1, 1, 1, -1));
  for (double k : {1.0, 3.0, 16.0, 100.0}) {
    EXPECT_EQ(kac_drift_expression(kac_family_member({1, 1, 0}, k)), 0.0);
  }
}

TEST(KacFamily, AsymmetricExample) {
  const KacTargets targets{2, 1, 0.3};
  const TelegraphParams p = kac_family_member(targets, 4);
  EXPECT_EQ(p.lambda0(), 64.0);
  EXPECT_EQ(p.lambda1(), 16.0);
  EXPECT_DOUBLE_EQ(p.gamma0(), 16.3);
  EXPECT_DOUBLE_EQ(p.gamma1(), -3.7);
  EXPECT_NEAR(kac_drift_expression(p), 0.3, 1e-14);
}

TEST(KacFamily, LimitsAndRates) {
  const KacTargets targets{1.5, 0.8, -0.4};
  EXPECT_DOUBLE_EQ(targets.sigma0(), 1.2);
  for (double k : {1.0, 2.0, 8.0, 64.0}) {
    const TelegraphParams p = kac_family_member(targets, k);
    EXPECT_DOUBLE_EQ(p.lambda0() / p.lambda1(), 2.25);
    EXPECT_LE(std::abs(p.gamma0() / std::sqrt(p.lambda0()) - targets.sigma0()), 0.4 / k + 1e-14);
    EXPECT_LE(std::abs(p.gamma1() / std::sqrt(p.lambda1()) + targets.sigma1), 0.4 / k + 1e-14);
    EXPECT_NEAR(kac_drift_expression(p), -0.4, 1e-13);
  }
}

TEST(KacFamily, Rejections) {
  EXPECT_THROW(kac_family_member({1, 1, 0}, 0.5), std::invalid_argument);
  EXPECT_THROW(kac_family_member({1, 1, 5}, 1), std::invalid_argument);
  EXPECT_THROW(validate(KacTargets{0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(validate(KacTargets{1, -1, 0}), std::invalid_argument);
  EXPECT_THROW(validate(KacTargets{1, 1, std::numeric_limits<double>::infinity()}),
               std::invalid_argument);
}

TEST(KacTargets, Sigma) {
  EXPECT_DOUBLE_EQ((KacTargets{1, 1.7, 0}).Sigma(), 1.7);
  const KacTargets t{2, 1, 0};
  EXPECT_DOUBLE_EQ(t.Sigma(), 2.0 / std::sqrt(2.5));
}

TEST(InverseGaussian, Values) {
  EXPECT_NEAR(inverse_gaussian_fpt_density(1, 1, 1, 0), 0.2419707, 1e-7);
  EXPECT_NEAR(inverse_gaussian_fpt_density(1, 1, 1, 0), std::exp(-0.5) / std::sqrt(2 * std::numbers::pi), 1e-16);
  EXPECT_LT(inverse_gaussian_fpt_density(1e-4, 1, 1, 0), 1e-300);
  EXPECT_LT(inverse_gaussian_fpt_density(1e8, 1, 1, 0), 1e-11);
  EXPECT_THROW(inverse_gaussian_fpt_density(0, 1, 1, 0), std::domain_error);
  EXPECT_THROW(inverse_gaussian_fpt_density(1, -1, 1, 0), std::domain_error);
  EXPECT_THROW(inverse_gaussian_fpt_density(1, 1, 0, 0), std::domain_error);
}

TEST(InverseGaussian, ZeroDriftIsProper) {
  boost::math::quadrature::exp_sinh<double> es;
  const double mass =
      es.integrate([](double t) { return inverse_gaussian_fpt_density(t, 1.3, 0.7, 0); }, 1e-14);
  EXPECT_NEAR(mass, 1.0, 1e-8);
}

TEST(Convergence, ErrorsShrinkAndAtomVanishes) {
  const std::vector<double> ks{4, 8, 16, 32};
  const std::vector<double> ts = uniform_time_grid(0.01, 10, 1000);
  ASSERT_EQ(ts.size(), 1000u);
  EXPECT_EQ(ts.front(), 0.01);
  EXPECT_EQ(ts.back(), 10.0);
  const auto errors = convergence_check({1, 1, 0}, 1.0, ks, ts);
  ASSERT_EQ(errors.size(), 4u);
  for (std::size_t j = 1; j < errors.size(); ++j) {
    EXPECT_LT(errors[j].error_f0, errors[j - 1].error_f0);
    EXPECT_LT(errors[j].error_f1, errors[j - 1].error_f1);
  }
  EXPECT_LT(errors[3].error_f0, 0.01);
  EXPECT_LT(errors[3].error_f1, 0.05);
  EXPECT_NEAR(errors[2].atom_mass, std::exp(-16.0), 1e-20);
  EXPECT_LT(errors[2].atom_mass, 1e-6);
}

TEST(Convergence, ErrorIsSupOverGrid) {
  const std::vector<double> ks{8};
  const std::vector<double> ts{0.2, 0.7, 1.9};
  const auto errors = convergence_check({1, 1, 0}, 1.0, ks, ts);
  const TelegraphParams p = kac_family_member({1, 1, 0}, 8);
  double sup = 0.0;
  for (double t : ts) {
    sup = std::max(sup, std::abs(fpt_density(p, State::Zero, t, 1.0) -
                                 inverse_gaussian_fpt_density(t, 1.0, 1.0, 0.0)));
  }
  EXPECT_EQ(errors[0].error_f0, sup);
}

TEST(Convergence, RejectsUnsortedScales) {
  const std::vector<double> ks{4, 2};
  const std::vector<double> ts{1.0};
  EXPECT_THROW(convergence_check({1, 1, 0}, 1.0, ks, ts), std::invalid_argument);
}
