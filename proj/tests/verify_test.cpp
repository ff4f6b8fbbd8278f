#include "bhlab/verify.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "bhlab/random.hpp"

namespace bhlab {
namespace {

using T = HomogeneousPolynomial::Term;

const HomogeneousPolynomial kXY(2, 2, {T{MultiIndex{{0, 1}, {1, 1}}, 1.0}});

HomogeneousPolynomial power_sum(unsigned m, unsigned n, Complex c = 1.0) {
  std::vector<T> terms;
  for (unsigned j = 0; j < n; ++j) terms.emplace_back(MultiIndex{{j, m}}, c);
  return HomogeneousPolynomial(m, n, terms);
}

HomogeneousPolynomial monomial(unsigned m) { return HomogeneousPolynomial(m, 1, {T{MultiIndex{{0, m}}, 1.0}}); }

SearchConfig fast_cfg() {
  SearchConfig cfg;
  cfg.starts = 4;
  cfg.grid_resolution = 16;
  cfg.max_grid_points = 1u << 12;
  cfg.seed = 17;
  return cfg;
}

TEST(VerifyTest, LhsExamples) {
  EXPECT_DOUBLE_EQ(lhs_bh(kXY, 2, 4.0 / 3.0), 1.0);
  HomogeneousPolynomial p(3, 2, {T{MultiIndex{{0, 3}}, 1.0}, T{MultiIndex{{0, 2}, {1, 1}}, 1.0}});
  EXPECT_DOUBLE_EQ(lhs_bh(p, 1, 1.0), 1.0);
  EXPECT_NEAR(lhs_bh(power_sum(2, 4), 1, 4.0 / 3.0), std::pow(4.0, 0.75), 1e-14);
  EXPECT_THROW(lhs_bh(p, 1, 0.5), std::invalid_argument);
}

TEST(VerifyTest, LhsMonotoneInExponent) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_polynomial(CoefficientKind::gaussian, 4, 2, 4, 1.0, trial);
    double previous = lhs_bh(p, 2, 1.0);
    for (double q = 1.1; q < 3.0; q += 0.1) {
      const double v = lhs_bh(p, 2, q);
      EXPECT_LE(v, previous * (1 + 1e-12));
      previous = v;
    }
  }
}

TEST(VerifyTest, ExpansionStepExamples) {
  for (unsigned m = 1; m <= 5; ++m) {
    const auto r = check_expansion_step(monomial(m), 1);
    EXPECT_DOUBLE_EQ(r.lhs, 1.0);
    EXPECT_GE(r.rhs, 1.0);
    EXPECT_TRUE(r.passed);
  }
  // Gamma_2 = {(0,2),(1,1),(2,0)}; only tau=(1,1) with (i1,i2) in {(0,1),(1,0)}
  // contributes (2 * 1/2)^(4/3) = 1 each.
  const auto r = check_expansion_step(kXY, 2);
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_NEAR(r.rhs, 2.0, 1e-14);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.step, StepId::expansion);
}

TEST(VerifyTest, ExpansionStepOnRandomPolynomials) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_polynomial(CoefficientKind::steinhaus, 4, 2, 5, 1.0, 1000 + trial);
    EXPECT_TRUE(check_expansion_step(p, 2).passed);
  }
}

TEST(VerifyTest, ExpansionBudget) {
  HomogeneousPolynomial wide(6, 200, {T{MultiIndex{{0, 6}}, 1.0}});
  EXPECT_THROW(check_expansion_step(wide, 4), std::length_error);
  EXPECT_THROW(check_expansion_step(kXY, 3), std::invalid_argument);
}

TEST(VerifyTest, Des1Step) {
  for (unsigned m = 1; m <= 12; ++m) {
    for (unsigned M = 1; M <= std::min(m, 5u); ++M) EXPECT_TRUE(check_des1_step(m, M).passed);
  }
  EXPECT_EQ(check_des1_step(6, 3).rhs, 90.0);
}

TEST(VerifyTest, L2StepExamples) {
  const auto cfg = fast_cfg();
  auto r = check_l2_step(kXY, cfg);
  EXPECT_DOUBLE_EQ(r.lhs, 1.0);
  EXPECT_DOUBLE_EQ(r.rhs, 1.0);
  EXPECT_TRUE(r.passed);
  for (unsigned n = 1; n <= 6; ++n) {
    r = check_l2_step(power_sum(3, n), cfg);
    EXPECT_NEAR(r.lhs, std::sqrt(n), 1e-14);
    EXPECT_DOUBLE_EQ(r.rhs, n);
    EXPECT_TRUE(r.passed);
  }
  HomogeneousPolynomial squares(2, 2, {T{MultiIndex{{0, 2}}, 1.0}, T{MultiIndex{{1, 2}}, 1.0}});
  r = check_l2_step(squares, cfg);
  EXPECT_NEAR(r.lhs, std::sqrt(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(r.rhs, 2.0);
  EXPECT_TRUE(r.passed);
}

TEST(VerifyTest, HolderStepExamples) {
  const auto single = check_holder_step(HomogeneousPolynomial(4, 2, {T{MultiIndex{{0, 2}, {1, 2}}, Complex(0.0, 3.0)}}), 2);
  EXPECT_NEAR(single.lhs, single.rhs, 1e-14);
  EXPECT_TRUE(single.passed);
  const auto p = random_polynomial(CoefficientKind::gaussian, 3, 3, 3, 1.0, 5);
  const auto equal = check_holder_step(p, 3);
  EXPECT_NEAR(equal.lhs, equal.rhs, 1e-14 * equal.rhs);
  EXPECT_TRUE(equal.passed);
}

TEST(VerifyTest, HolderStepOnRandomVectors) {
  Rng rng(55);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned m = 2 + trial % 9;
    const unsigned M = 1 + trial % m;
    std::vector<double> v(1 + trial % 40);
    for (double& x : v) x = std::abs(rng.complex_normal());
    EXPECT_TRUE(check_holder_vector(v, m, M).passed) << trial;
  }
}

TEST(VerifyTest, PolarizationStepExamples) {
  const auto cfg = fast_cfg();
  for (unsigned m = 1; m <= 6; ++m) {
    const auto r = check_polarization_step(monomial(m), cfg);
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_NEAR(r.rhs, std::exp(static_cast<double>(m)), 1e-12 * std::exp(m));
    EXPECT_TRUE(r.passed);
  }
  const auto xy = check_polarization_step(kXY, cfg);
  EXPECT_GE(xy.lhs, 0.5);
  EXPECT_TRUE(xy.passed);
  const auto g = random_polynomial(CoefficientKind::gaussian, 3, 3, 4, 1.0, 8);
  EXPECT_TRUE(check_polarization_step(g, cfg).passed);
  EXPECT_THROW(check_polarization_step(monomial(9), cfg), std::invalid_argument);
}

TEST(VerifyTest, CertifyExamples) {
  const auto cfg = fast_cfg();
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned M = 1; M <= m; ++M) {
      const auto c = certify_theorem_instance(monomial(m), M, cfg, {});
      EXPECT_DOUBLE_EQ(c.lhs, 1.0);
      EXPECT_TRUE(c.passed);
    }
  }
  for (unsigned n : {1u, 10u, 1000u, 10000u}) {
    const auto c = certify_theorem_instance(power_sum(3, n), 1, cfg, {});
    EXPECT_NEAR(c.lhs, std::pow(static_cast<double>(n), 4.0 / 6.0), 1e-9 * c.lhs);
    EXPECT_DOUBLE_EQ(c.norm.lower, n);
    EXPECT_TRUE(c.passed);
  }
  EXPECT_THROW(certify_theorem_instance(HomogeneousPolynomial(2, 2, {}), 1, cfg, {}), std::invalid_argument);
}

TEST(VerifyTest, CertifyRandomInstances) {
  const auto cfg = fast_cfg();
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_polynomial(CoefficientKind::steinhaus, 4, 2, 5, 1.0, 7000 + trial);
    EXPECT_TRUE(certify_theorem_instance(p, 2, cfg, {}).passed);
  }
}

TEST(VerifyTest, StepReportPassRule) {
  EXPECT_TRUE(make_step_report(StepId::holder, 1.0 + 5e-10, 1.0, kExactTolerance).passed);
  EXPECT_FALSE(make_step_report(StepId::holder, 1.0 + 2e-9, 1.0, kExactTolerance).passed);
  EXPECT_DOUBLE_EQ(make_step_report(StepId::holder, 1.0, 3.0, 0.0).slack, 2.0);
  for (auto id : {StepId::expansion, StepId::des1, StepId::l2_mmp, StepId::holder, StepId::polarization,
                  StepId::pre_interpolation, StepId::final}) {
    EXPECT_EQ(parse_step_id(to_string(id)), id);
  }
}

TEST(VerifyTest, VerifyPolynomialRunsEverySelectedStep) {
  const auto cfg = fast_cfg();
  const auto p = random_polynomial(CoefficientKind::steinhaus, 3, 2, 4, 1.0, 31);
  const auto reports = verify_polynomial(p, 2, StepSelection{}, cfg, {});
  EXPECT_EQ(reports.size(), 7u);
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << to_string(r.step);

  const auto big = random_polynomial(CoefficientKind::steinhaus, 9, 1, 2, 1.0, 3);
  const auto skipped = verify_polynomial(big, 1, StepSelection{}, cfg, {});
  for (const auto& r : skipped) EXPECT_NE(r.step, StepId::polarization);

  StepSelection only_holder{{StepId::holder}};
  EXPECT_EQ(verify_polynomial(p, 2, only_holder, cfg, {}).size(), 1u);
}

TEST(VerifyTest, SearchSingleVariablePerMonomialIsExact) {
  const auto cfg = fast_cfg();
  ConstantSearch req{3, 1, 4, 1.0, 100, 20, 5};
  const auto w = search_constant_lower_bound(req, cfg);
  EXPECT_NEAR(w.ratio_lower, 1.0, 1e-12);
  EXPECT_LE(w.ratio_lower, w.ratio_upper * (1 + 1e-12));
}

TEST(VerifyTest, SearchMonomialFamilyGivesOne) {
  const auto cfg = fast_cfg();
  ConstantSearch req{2, 2, 2, 4.0 / 3.0, 0, 0, 1};
  const auto w = search_constant_lower_bound(req, cfg);
  EXPECT_GE(w.ratio_lower, 1.0 - 1e-12);
  EXPECT_EQ(w.provenance.rfind("family:", 0), 0u);
}

TEST(VerifyTest, SearchIsDeterministicAndThreadIndependent) {
  SearchConfig one = fast_cfg();
  SearchConfig many = one;
  many.threads = 3;
  ConstantSearch req{3, 2, 3, 1.5, 12, 12, 77};
  const auto a = search_constant_lower_bound(req, one);
  const auto b = search_constant_lower_bound(req, many);
  EXPECT_EQ(a.polynomial, b.polynomial);
  EXPECT_EQ(a.ratio_lower, b.ratio_lower);
  EXPECT_EQ(a.norm, b.norm);
  EXPECT_EQ(a.provenance, b.provenance);
  EXPECT_LE(a.ratio_lower, a.ratio_upper);
  EXPECT_THROW(search_constant_lower_bound(ConstantSearch{3, 2, 3, 0.5, 1, 1, 1}, one), std::invalid_argument);
}

TEST(VerifyTest, ProbeSingleVariableCaseIsFlat) {
  const auto cfg = fast_cfg();
  const unsigned ns[] = {2, 4, 8};
  const auto probe = exponent_probe(1, 1.0, ns, 2, 10, 3, cfg, 5);
  ASSERT_EQ(probe.rows.size(), 3u);
  for (const auto& row : probe.rows) EXPECT_NEAR(row.ratio_lower, 1.0, 1e-9);
  EXPECT_EQ(probe.trend, "flat");
  EXPECT_THROW(exponent_probe(1, 0.99, ns, 2, 10, 3, cfg), std::invalid_argument);
}

}  // namespace
}  // namespace bhlab
