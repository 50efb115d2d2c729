#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cogsec/model.hpp"

using namespace cogsec;

namespace {

SystemParams fig3_params() {
  SystemParams p;
  p.p0 = 0.8;
  p.pd = 0.9;
  p.pf = 0.1;
  p.gamma_p_db = 5.0;
  p.links.sigma2_sd = 1.0;
  p.links.sigma2_pd = 0.2;
  p.links.sigma2_pe = 0.2;
  p.links.sigma2_se = 0.1;
  p.secrecy_rate = 0.1;
  return p;
}

std::string field_of_error(const SystemParams& p) {
  try {
    validate(p);
  } catch (const ParamError& e) {
    return e.field();
  }
  return "<valid>";
}

}  // namespace

TEST(DbToLinear, KnownValues) {
  EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(db_to_linear(5.0), 3.16228, 1e-5);
  EXPECT_NEAR(db_to_linear(-10.0), 0.1, 1e-15);
}

TEST(DbToLinear, RejectsNonFinite) {
  EXPECT_THROW(db_to_linear(std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_THROW(db_to_linear(std::numeric_limits<double>::quiet_NaN()), std::invalid_argument);
}

TEST(DbToLinear, MonotoneAndMultiplicative) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> db(-60.0, 60.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = db(gen);
    const double b = db(gen);
    const double lhs = db_to_linear(a + b);
    const double rhs = db_to_linear(a) * db_to_linear(b);
    ASSERT_LE(std::abs(lhs - rhs) / rhs, 1e-12) << a << " " << b;
    if (a < b) {
      ASSERT_LT(db_to_linear(a), db_to_linear(b));
    }
  }
}

TEST(Validate, Fig3ParameterSetIsValid) {
  const ValidatedParams v = validate(fig3_params());
  EXPECT_EQ(v.raw(), fig3_params());
  EXPECT_NEAR(v.gamma_p(), 3.16228, 1e-5);
  EXPECT_DOUBLE_EQ(v.gamma_s(), 1.0);
}

TEST(Validate, DefaultsAreTheSensingBoundary) {
  const SystemParams p;
  EXPECT_EQ(p.pd, 0.9);
  EXPECT_EQ(p.pf, 0.1);
  EXPECT_NO_THROW(validate(p));
}

TEST(Validate, EachViolationNamesItsField) {
  SystemParams p = fig3_params();
  p.p0 = 1.2;
  EXPECT_EQ(field_of_error(p), "p0");

  p = fig3_params();
  p.links.sigma2_se = 0.0;
  EXPECT_EQ(field_of_error(p), "sigma2_se");

  p = fig3_params();
  p.links.sigma2_ie = -1.0;
  EXPECT_EQ(field_of_error(p), "sigma2_ie");

  p = fig3_params();
  p.pd = 0.05;  // below pf
  EXPECT_EQ(field_of_error(p), "pd");

  p = fig3_params();
  p.pf = -0.01;
  EXPECT_EQ(field_of_error(p), "pf");

  p = fig3_params();
  p.secrecy_rate = 0.0;
  EXPECT_EQ(field_of_error(p), "secrecy_rate");

  p = fig3_params();
  p.gamma_s_db = std::numeric_limits<double>::infinity();
  EXPECT_EQ(field_of_error(p), "gamma_s_db");
}

TEST(Validate, RejectsNeverDetectedIdle) {
  SystemParams p = fig3_params();
  p.p0 = 1.0;
  p.pf = 1.0;
  p.pd = 1.0;
  EXPECT_THROW(validate(p), ParamError);
  p.p0 = 0.0;
  p.pf = 0.0;  // band always busy and always detected
  EXPECT_THROW(validate(p), ParamError);
}

TEST(Validate, IsIdempotent) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  std::uniform_real_distribution<double> var(0.01, 5.0);
  for (int i = 0; i < 500; ++i) {
    SystemParams p;
    p.p0 = prob(gen);
    p.pf = prob(gen) * 0.5;
    p.pd = p.pf + (1.0 - p.pf) * prob(gen);
    p.links.sigma2_sd = var(gen);
    p.links.sigma2_id = var(gen);
    p.gamma_s_db = 40.0 * prob(gen) - 20.0;
    p.n_relays = i % 7;
    const ValidatedParams once = validate(p);
    const ValidatedParams twice = validate(once);
    ASSERT_EQ(once, twice);
  }
}

TEST(Validate, WithHelpersRevalidate) {
  const ValidatedParams v = validate(fig3_params());
  EXPECT_NEAR(v.with_gamma_s_db(10.0).gamma_s(), 10.0, 1e-12);
  EXPECT_EQ(v.with_relays(4).n_relays(), 4u);
  EXPECT_THROW(v.with_secrecy_rate(-1.0), ParamError);
}
