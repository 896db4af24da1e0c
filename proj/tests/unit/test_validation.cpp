#include <stdexcept>

#include <gtest/gtest.h>

#include "telegraph/validation.hpp"

using namespace telegraph;

TEST(Suites, NamesRoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(suite_from_string(to_string(s)), s);
  EXPECT_EQ(to_string(Suite::MonteCarloKs), "mc-ks");
  EXPECT_EQ(all_suites().size(), 6u);
  EXPECT_THROW(suite_from_string("bogus"), std::invalid_argument);
}

TEST(Suites, DualityPasses) {
  const ValidationReport r = run_suite(Suite::Duality);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.checks.empty());
  for (const CheckResult& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.measured;
}

TEST(Suites, SameSeedSameReport) {
  ValidationOptions o;
  o.paths = 2000;
  const ValidationReport a = run_suite(Suite::MonteCarloKs, o);
  o.threads = 3;
  const ValidationReport b = run_suite(Suite::MonteCarloKs, o);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t k = 0; k < a.checks.size(); ++k) EXPECT_EQ(a.checks[k].measured, b.checks[k].measured);
}
