#pragma once

#include <vector>

#include "bhlab/combinatorics.hpp"

namespace bhlab {

enum class ScalarField { complex, real };

struct BetaConfig {
  double beta1 = 1.0;  // complex multilinear constant scale
  double beta2 = 1.0;  // real multilinear constant scale
  static constexpr double euler_gamma = 0.5772156649015329;

  // Throws std::invalid_argument unless beta1, beta2 > 0.
  void validate() const;
};

// Exponent of k in the complex / real k-linear constant bound.
double bh_exponent(ScalarField field);

// 2^(M/2) * m^((M+1)/2), the polynomial-growth constant the uniform bound improves.
// Throws std::invalid_argument unless 1 <= M <= m.
double cdsp_constant(unsigned m, unsigned M);

// beta1 * k^((1-gamma)/2) (complex) or beta2 * k^((2-log 2-gamma)/2) (real).
// Throws std::invalid_argument for k == 0.
double bh_constant_bound(unsigned k, ScalarField field, const BetaConfig& cfg = {});

struct MultinomialBound {
  BigNat exact;       // m! / (floor(m/M)!)^M, always an integer
  double log_value;   // natural log of `exact`
};

// Uniform bound on binom(m, tau) over tau in Gamma_m with M parts.
// Throws std::invalid_argument unless 1 <= M <= m.
MultinomialBound multinomial_uniform_bound(unsigned m, unsigned M);

// [m! / (floor(m/M)!)^M]^(M/m) evaluated with lgamma; tends to M^M.
// Throws std::invalid_argument unless 1 <= M <= m.
double stirling_ratio(unsigned m, unsigned M);

// Same quantity from exact integers; intended for m <= a few hundred.
double stirling_ratio_exact(unsigned m, unsigned M);

/// theta = M / m, the interpolation weight with
///   (m+1)/(2m) = theta * (M+1)/(2M) + (1 - theta)/2.
/// Throws std::logic_error if the identity fails by more than 1e-12.
double interpolation_theta(unsigned m, unsigned M);

/// Assembled uniform constant for degree m and at most M variables per monomial:
///   binom(m+M-1, m)^((M+1)/(2m)) * stirling_ratio(m, M) * C_M^(M/m) * e^M,
/// with C_M = bh_constant_bound(M, complex). Assembled in log space.
double proof_chain_constant(unsigned m, unsigned M, const BetaConfig& cfg = {});
double log_proof_chain_constant(unsigned m, unsigned M, const BetaConfig& cfg = {});

/// Constant for the stronger exponent 2M/(M+1), before interpolation:
///   binom(m+M-1, m)^((M+1)/(2M)) * m!/(floor(m/M)!)^M * C_M * e^m.
/// Grows with m; returned as a natural log because it overflows double quickly.
double log_pre_interpolation_constant(unsigned m, unsigned M, const BetaConfig& cfg = {});

struct ConstantReport {
  unsigned m = 0;
  unsigned M = 0;
  double theta = 0.0;
  BigNat composition_count;  // binom(m+M-1, m) = |Gamma_m|
  double stirling_ratio = 0.0;
  double cdsp = 0.0;
  double kappa_chain = 0.0;
  double beta1 = 1.0;
  bool cdsp_exceeds_kappa = false;
};

ConstantReport constant_report(unsigned m, unsigned M, const BetaConfig& cfg = {});

// One report per m in [m_first, m_last], in order. Throws std::invalid_argument
// on an empty range or M outside [1, m_first].
std::vector<ConstantReport> constant_table(unsigned M, unsigned m_first, unsigned m_last,
                                           const BetaConfig& cfg = {}, unsigned threads = 1);

struct CrossoverSummary {
  bool found = false;
  unsigned crossover_m = 0;     // smallest m after which cdsp > kappa_chain on the whole table
  unsigned argmax_m = 0;        // where kappa_chain is largest on the table
  double max_kappa_chain = 0.0;
};

CrossoverSummary summarize_crossover(const std::vector<ConstantReport>& table);

}  // namespace bhlab
