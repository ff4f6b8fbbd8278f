#include "bhlab/constants.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

namespace bhlab {
namespace {

constexpr double kE = std::numbers::e;

TEST(ConstantsTest, CdspExamples) {
  EXPECT_NEAR(cdsp_constant(2, 1), 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(cdsp_constant(1, 1), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(cdsp_constant(10, 2), 63.24555320336759, 1e-12);
  EXPECT_THROW(cdsp_constant(2, 3), std::invalid_argument);
  EXPECT_THROW(cdsp_constant(2, 0), std::invalid_argument);
}

TEST(ConstantsTest, CdspStrictlyIncreasing) {
  for (unsigned M = 1; M <= 5; ++M) {
    for (unsigned m = M; m < 500; ++m) EXPECT_LT(cdsp_constant(m, M), cdsp_constant(m + 1, M));
  }
}

TEST(ConstantsTest, BhConstantBoundExamples) {
  // reference values from 40-digit arithmetic
  EXPECT_EQ(bh_constant_bound(1, ScalarField::complex), 1.0);
  EXPECT_NEAR(bh_constant_bound(2, ScalarField::complex), 1.1578049001284531, 1e-14);
  EXPECT_NEAR(bh_constant_bound(2, ScalarField::real), 1.2877196851591681, 1e-14);
  EXPECT_LT(bh_exponent(ScalarField::complex), 0.212);
  EXPECT_LT(bh_exponent(ScalarField::real), 0.365);
  BetaConfig beta{2.5, 0.5};
  EXPECT_NEAR(bh_constant_bound(2, ScalarField::complex, beta), 2.5 * 1.1578049001284531, 1e-13);
  EXPECT_NEAR(bh_constant_bound(2, ScalarField::real, beta), 0.5 * 1.2877196851591681, 1e-13);
  EXPECT_THROW(bh_constant_bound(0, ScalarField::complex), std::invalid_argument);
  EXPECT_THROW(bh_constant_bound(2, ScalarField::complex, BetaConfig{0.0, 1.0}), std::invalid_argument);
}

TEST(ConstantsTest, MultinomialUniformBoundExamples) {
  EXPECT_EQ(multinomial_uniform_bound(4, 2).exact, 6);
  EXPECT_EQ(multinomial_uniform_bound(3, 2).exact, oracle::fact(3) / oracle::fact(1));
  EXPECT_EQ(multinomial_uniform_bound(6, 3).exact, 90);
  EXPECT_NEAR(multinomial_uniform_bound(6, 3).log_value, std::log(90.0), 1e-14);
  EXPECT_THROW(multinomial_uniform_bound(3, 4), std::invalid_argument);
}

TEST(ConstantsTest, MultinomialBoundDominatesEveryComposition) {
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned M = 1; M <= std::min(m, 5u); ++M) {
      const BigNat bound = multinomial_uniform_bound(m, M).exact;
      for (const auto& tau : enumerate_compositions(m, M)) {
        EXPECT_LE(multinomial(tau), bound) << "m=" << m << " M=" << M;
      }
    }
  }
}

TEST(ConstantsTest, StirlingRatioExamples) {
  EXPECT_NEAR(stirling_ratio(2, 2), 2.0, 1e-13);
  for (unsigned m = 1; m <= 8; ++m) {
    EXPECT_NEAR(stirling_ratio(m, m), static_cast<double>(oracle::fact(m)), 1e-12 * static_cast<double>(oracle::fact(m)));
    EXPECT_NEAR(stirling_ratio(m, 1), 1.0, 1e-14);
  }
  EXPECT_LE(std::abs(stirling_ratio(2000, 2) / 4.0 - 1.0), 0.02);
  EXPECT_LE(std::abs(stirling_ratio(3000, 3) / 27.0 - 1.0), 0.03);
  // 40-digit reference values
  EXPECT_NEAR(stirling_ratio(2000, 2), 3.9839269094699392, 1e-11);
  EXPECT_NEAR(stirling_ratio(3000, 3), 26.779597695598729, 1e-10);
  EXPECT_TRUE(std::isfinite(stirling_ratio(1000000, 4)));
}

TEST(ConstantsTest, StirlingLogSpaceMatchesExactIntegers) {
  for (unsigned m = 1; m <= 20; ++m) {
    for (unsigned M = 1; M <= m; ++M) {
      const double exact = stirling_ratio_exact(m, M);
      EXPECT_NEAR(stirling_ratio(m, M), exact, 1e-9 * exact) << m << "," << M;
    }
  }
}

TEST(ConstantsTest, InterpolationThetaExamples) {
  EXPECT_DOUBLE_EQ(interpolation_theta(4, 2), 0.5);
  EXPECT_DOUBLE_EQ(5.0 / 8.0, 0.5 * (3.0 / 4.0) + 0.5 * 0.5);
  EXPECT_DOUBLE_EQ(interpolation_theta(7, 7), 1.0);
  EXPECT_DOUBLE_EQ(interpolation_theta(10, 2), 0.2);
  EXPECT_NEAR(11.0 / 20.0, 0.2 * 0.75 + 0.8 * 0.5, 1e-15);
  for (unsigned m = 1; m <= 200; ++m) {
    for (unsigned M = 1; M <= m; ++M) EXPECT_NO_THROW(interpolation_theta(m, M));
  }
}

TEST(ConstantsTest, ProofChainExamples) {
  EXPECT_NEAR(proof_chain_constant(1, 1), kE, 1e-14);
  // binom(5,4)^(3/8) * 6^(1/2) * C_2^(1/2) * e^2, evaluated independently here
  const double c2 = std::pow(2.0, (1.0 - 0.5772156649015329) / 2.0);
  const double direct = std::pow(5.0, 3.0 / 8.0) * std::sqrt(6.0) * std::sqrt(c2) * kE * kE;
  EXPECT_NEAR(proof_chain_constant(4, 2), direct, 1e-12 * direct);
  EXPECT_NEAR(proof_chain_constant(4, 2), 35.61197274009257, 1e-11);
}

TEST(ConstantsTest, ProofChainConvergesToLimit) {
  const double limit2 = 4.0 * kE * kE;
  EXPECT_NEAR(proof_chain_constant(10000, 2) / limit2, 1.0, 0.02);
  EXPECT_NEAR(proof_chain_constant(100000, 2) / limit2, 1.0, 0.001);
  for (unsigned M = 1; M <= 3; ++M) {
    const double limit = std::pow(M, M) * std::exp(static_cast<double>(M));
    EXPECT_LE(std::abs(proof_chain_constant(10000, M) / limit - 1.0), 0.02) << M;
  }
}

TEST(ConstantsTest, ProofChainScalesWithBeta) {
  BetaConfig beta{3.0, 1.0};
  const double ratio = proof_chain_constant(12, 3, beta) / proof_chain_constant(12, 3);
  EXPECT_NEAR(ratio, std::pow(3.0, 3.0 / 12.0), 1e-12);
}

TEST(ConstantsTest, PreInterpolationConstantGrows) {
  // floor(m/M) makes the sequence oscillate; it grows along each residue class.
  for (unsigned M = 1; M <= 4; ++M) {
    for (unsigned m = M; m < 60; ++m) {
      EXPECT_GT(log_pre_interpolation_constant(m + M, M), log_pre_interpolation_constant(m, M)) << m << "," << M;
    }
  }
}

TEST(ConstantsTest, ConstantTableShapeAndCrossover) {
  const auto small = constant_table(1, 1, 3);
  ASSERT_EQ(small.size(), 3u);
  for (const auto& row : small) {
    EXPECT_TRUE(std::isfinite(row.cdsp) && std::isfinite(row.kappa_chain) && std::isfinite(row.stirling_ratio));
    EXPECT_EQ(row.beta1, 1.0);
  }
  EXPECT_EQ(constant_table(2, 2, 2).front().theta, 1.0);
  EXPECT_EQ(constant_table(2, 2, 2).front().composition_count, 3);

  const auto table = constant_table(2, 2, 400, {}, 3);
  EXPECT_EQ(table.size(), 399u);
  const auto summary = summarize_crossover(table);
  ASSERT_TRUE(summary.found);
  for (const auto& row : table) {
    if (row.m >= summary.crossover_m) EXPECT_TRUE(row.cdsp_exceeds_kappa);
  }
  EXPECT_THROW(constant_table(0, 1, 3), std::invalid_argument);
  EXPECT_THROW(constant_table(2, 5, 3), std::invalid_argument);
}

}  // namespace
}  // namespace bhlab
