#include "bhlab/symmetric_form.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "bhlab/random.hpp"
#include "oracles.hpp"

namespace bhlab {
namespace {

std::vector<Complex> basis(std::size_t n, std::size_t j) {
  std::vector<Complex> e(n, Complex{});
  e[j] = 1.0;
  return e;
}

std::map<oracle::Dense, Complex> dense_coeffs(const HomogeneousPolynomial& p) {
  std::map<oracle::Dense, Complex> out;
  for (const auto& [alpha, c] : p.coefficients()) {
    oracle::Dense d(p.num_vars(), 0);
    for (const auto& e : alpha.entries()) d[e.var] = e.exp;
    out[d] = c;
  }
  return out;
}

const HomogeneousPolynomial kZ0SqZ1(3, 2, {{MultiIndex{{0, 2}, {1, 1}}, 1.0}});

TEST(SymmetricFormTest, BasisExamples) {
  const BasisBlock a[] = {{0, 2}, {1, 1}};
  EXPECT_NEAR(std::abs(symmetric_form_basis(kZ0SqZ1, a) - Complex(1.0 / 3.0)), 0.0, 1e-15);

  for (unsigned m = 1; m <= 7; ++m) {
    HomogeneousPolynomial pure(m, 1, {{MultiIndex{{0, m}}, 1.0}});
    const BasisBlock b[] = {{0, m}};
    EXPECT_EQ(symmetric_form_basis(pure, b), Complex(1.0));
  }

  const BasisBlock split[] = {{0, 1}, {0, 1}, {1, 1}};
  EXPECT_NEAR(std::abs(symmetric_form_basis(kZ0SqZ1, split) - Complex(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(SymmetricFormTest, BasisSkipsEmptyBlocksAndAbsentTerms) {
  const BasisBlock with_empty[] = {{0, 2}, {5, 0}, {1, 1}};
  EXPECT_NEAR(std::abs(symmetric_form_basis(kZ0SqZ1, with_empty) - Complex(1.0 / 3.0)), 0.0, 1e-15);
  const BasisBlock absent[] = {{1, 3}};
  EXPECT_EQ(symmetric_form_basis(kZ0SqZ1, absent), Complex{});
}

TEST(SymmetricFormTest, BasisRejectsWrongTotal) {
  const BasisBlock short_blocks[] = {{0, 2}};
  EXPECT_THROW(symmetric_form_basis(kZ0SqZ1, short_blocks), std::invalid_argument);
}

TEST(SymmetricFormTest, PolarizationExamples) {
  HomogeneousPolynomial xy(2, 2, {{MultiIndex{{0, 1}, {1, 1}}, 1.0}});
  const std::vector<std::vector<Complex>> e01{basis(2, 0), basis(2, 1)};
  EXPECT_NEAR(std::abs(polarization_eval(xy, e01) - Complex(0.5)), 0.0, 1e-15);

  HomogeneousPolynomial sq(2, 1, {{MultiIndex{{0, 2}}, 1.0}});
  const std::vector<std::vector<Complex>> diag{basis(1, 0), basis(1, 0)};
  EXPECT_NEAR(std::abs(polarization_eval(sq, diag) - Complex(1.0)), 0.0, 1e-15);

  const std::vector<std::vector<Complex>> e001{basis(2, 0), basis(2, 0), basis(2, 1)};
  EXPECT_NEAR(std::abs(polarization_eval(kZ0SqZ1, e001) - Complex(1.0 / 3.0)), 0.0, 1e-15);
}

TEST(SymmetricFormTest, PolarizationErrors) {
  HomogeneousPolynomial big(13, 1, {{MultiIndex{{0, 13}}, 1.0}});
  std::vector<std::vector<Complex>> pts(13, basis(1, 0));
  EXPECT_THROW(polarization_eval(big, pts), std::invalid_argument);
  const std::vector<std::vector<Complex>> too_few{basis(2, 0)};
  EXPECT_THROW(polarization_eval(kZ0SqZ1, too_few), std::invalid_argument);
}

TEST(SymmetricFormTest, BasisBlocksArePermutationInvariant) {
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_polynomial(CoefficientKind::gaussian, 5, 3, 4, 1.0, 77 + trial);
    std::vector<BasisBlock> blocks{{0, 2}, {3, 1}, {1, 2}};
    const Complex ref = symmetric_form_basis(p, blocks);
    std::sort(blocks.begin(), blocks.end(),
              [](const BasisBlock& a, const BasisBlock& b) { return a.var < b.var; });
    do {
      EXPECT_EQ(symmetric_form_basis(p, blocks), ref);
    } while (std::next_permutation(blocks.begin(), blocks.end(),
                                   [](const BasisBlock& a, const BasisBlock& b) { return a.var < b.var; }));
  }
}

TEST(SymmetricFormTest, PolarizationAgreesWithBasisValues) {
  for (unsigned m = 1; m <= 8; ++m) {
    const unsigned n = 3;
    const auto p = random_polynomial(CoefficientKind::gaussian, m, std::min(m, 3u), n, 1.0, 300 + m);
    for (const auto& [alpha, c] : p.coefficients()) {
      std::vector<std::vector<Complex>> pts;
      std::vector<BasisBlock> blocks;
      for (const auto& e : alpha.entries()) {
        blocks.push_back({e.var, e.exp});
        for (Exponent r = 0; r < e.exp; ++r) pts.push_back(basis(n, e.var));
      }
      const Complex via_basis = symmetric_form_basis(p, blocks);
      const Complex via_polar = polarization_eval(p, pts);
      EXPECT_LE(std::abs(via_basis - via_polar), 1e-12 * std::max(1.0, std::abs(via_basis)))
          << "m=" << m << " alpha=" << alpha.to_string();
    }
  }
}

TEST(SymmetricFormTest, PolarizationMatchesTensorOracleAtRandomPoints) {
  Rng rng(4);
  for (unsigned m = 2; m <= 5; ++m) {
    const unsigned n = 3;
    const auto p = random_polynomial(CoefficientKind::gaussian, m, 2, n, 1.0, 900 + m);
    std::vector<std::vector<Complex>> x(m, std::vector<Complex>(n));
    for (auto& pt : x) {
      for (auto& z : pt) z = rng.complex_normal();
    }
    const Complex want = oracle::tensor_form(dense_coeffs(p), m, n, x);
    const Complex got = polarization_eval(p, x);
    EXPECT_LE(std::abs(want - got), 1e-11 * std::max(1.0, std::abs(want))) << "m=" << m;
  }
}

TEST(SymmetricFormTest, DiagonalRecoversPolynomial) {
  Rng rng(9);
  const auto p = random_polynomial(CoefficientKind::steinhaus, 4, 2, 3, 1.0, 12);
  std::vector<Complex> z(3);
  for (auto& v : z) v = rng.complex_normal();
  const std::vector<std::vector<Complex>> diag(4, z);
  EXPECT_LE(std::abs(polarization_eval(p, diag) - evaluate(p, z)), 1e-12 * std::abs(evaluate(p, z)));
}

}  // namespace
}  // namespace bhlab
