#include "bhlab/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bhlab/parallel.hpp"

namespace bhlab {

namespace {

void require_range(unsigned m, unsigned M, const char* who) {
  if (M < 1 || M > m) {
    throw std::invalid_argument(std::string(who) + ": requires 1 <= M <= m (got m=" +
                                std::to_string(m) + ", M=" + std::to_string(M) + ")");
  }
}

double log_factorial(unsigned n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// log of m! / (floor(m/M)!)^M
double log_multinomial_bound(unsigned m, unsigned M) {
  return log_factorial(m) - M * log_factorial(m / M);
}

double log_binomial(unsigned n, unsigned k) {
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

}  // namespace

void BetaConfig::validate() const {
  if (!(beta1 > 0.0) || !(beta2 > 0.0)) {
    throw std::invalid_argument("BetaConfig: beta1 and beta2 must be positive");
  }
}

double bh_exponent(ScalarField field) {
  constexpr double gamma = BetaConfig::euler_gamma;
  return field == ScalarField::complex ? (1.0 - gamma) / 2.0
                                       : (2.0 - std::numbers::ln2 - gamma) / 2.0;
}

double cdsp_constant(unsigned m, unsigned M) {
  require_range(m, M, "cdsp_constant");
  return std::pow(2.0, M / 2.0) * std::pow(static_cast<double>(m), (M + 1) / 2.0);
}

double bh_constant_bound(unsigned k, ScalarField field, const BetaConfig& cfg) {
  if (k == 0) throw std::invalid_argument("bh_constant_bound: k must be >= 1");
  cfg.validate();
  const double exponent = bh_exponent(field);
  // Stated numeric ceilings on the two exponents.
  if (field == ScalarField::complex && !(exponent < 0.212)) {
    throw std::logic_error("complex BH exponent out of range");
  }
  if (field == ScalarField::real && !(exponent < 0.365)) {
    throw std::logic_error("real BH exponent out of range");
  }
  const double beta = field == ScalarField::complex ? cfg.beta1 : cfg.beta2;
  return beta * std::pow(static_cast<double>(k), exponent);
}

MultinomialBound multinomial_uniform_bound(unsigned m, unsigned M) {
  require_range(m, M, "multinomial_uniform_bound");
  BigNat denom = 1;
  const BigNat block = factorial(m / M);
  for (unsigned k = 0; k < M; ++k) denom *= block;
  MultinomialBound out;
  out.exact = factorial(m) / denom;
  out.log_value = log_of(out.exact);
  return out;
}

double stirling_ratio(unsigned m, unsigned M) {
  require_range(m, M, "stirling_ratio");
  return std::exp(static_cast<double>(M) / m * log_multinomial_bound(m, M));
}

double stirling_ratio_exact(unsigned m, unsigned M) {
  return std::exp(static_cast<double>(M) / m * multinomial_uniform_bound(m, M).log_value);
}

double interpolation_theta(unsigned m, unsigned M) {
  require_range(m, M, "interpolation_theta");
  const double theta = static_cast<double>(M) / m;
  const double r = 2.0 * m / (m + 1.0);
  const double p = 2.0 * M / (M + 1.0);
  const double lhs = 1.0 / r;
  const double rhs = theta / p + (1.0 - theta) / 2.0;
  if (std::abs(lhs - rhs) > 1e-12) {
    throw std::logic_error("interpolation identity violated for m=" + std::to_string(m) +
                           ", M=" + std::to_string(M));
  }
  return theta;
}

double log_proof_chain_constant(unsigned m, unsigned M, const BetaConfig& cfg) {
  require_range(m, M, "proof_chain_constant");
  const double exponent = static_cast<double>(M) / m;
  const double log_count = log_binomial(m + M - 1, m) * (M + 1.0) / (2.0 * m);
  const double log_stirling = exponent * log_multinomial_bound(m, M);
  const double log_bh = exponent * std::log(bh_constant_bound(M, ScalarField::complex, cfg));
  // e^m raised to M/m
  return log_count + log_stirling + log_bh + static_cast<double>(M);
}

double proof_chain_constant(unsigned m, unsigned M, const BetaConfig& cfg) {
  return std::exp(log_proof_chain_constant(m, M, cfg));
}

double log_pre_interpolation_constant(unsigned m, unsigned M, const BetaConfig& cfg) {
  require_range(m, M, "pre_interpolation_constant");
  return log_binomial(m + M - 1, m) * (M + 1.0) / (2.0 * M) + log_multinomial_bound(m, M) +
         std::log(bh_constant_bound(M, ScalarField::complex, cfg)) + static_cast<double>(m);
}

ConstantReport constant_report(unsigned m, unsigned M, const BetaConfig& cfg) {
  ConstantReport r;
  r.m = m;
  r.M = M;
  r.theta = interpolation_theta(m, M);
  r.composition_count = binomial(m + M - 1, m);
  r.stirling_ratio = stirling_ratio(m, M);
  r.cdsp = cdsp_constant(m, M);
  r.kappa_chain = proof_chain_constant(m, M, cfg);
  r.beta1 = cfg.beta1;
  r.cdsp_exceeds_kappa = r.cdsp > r.kappa_chain;
  return r;
}

std::vector<ConstantReport> constant_table(unsigned M, unsigned m_first, unsigned m_last,
                                           const BetaConfig& cfg, unsigned threads) {
  if (m_first > m_last) throw std::invalid_argument("constant_table: empty m range");
  require_range(m_first, M, "constant_table");
  cfg.validate();
  std::vector<ConstantReport> rows(m_last - m_first + 1);
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    rows[i] = constant_report(m_first + static_cast<unsigned>(i), M, cfg);
  });
  return rows;
}

CrossoverSummary summarize_crossover(const std::vector<ConstantReport>& table) {
  CrossoverSummary s;
  if (table.empty()) return s;
  // Walk backwards to find the start of the final run where cdsp dominates.
  std::size_t start = table.size();
  while (start > 0 && table[start - 1].cdsp_exceeds_kappa) --start;
  if (start < table.size()) {
    s.found = true;
    s.crossover_m = table[start].m;
  }
  for (const auto& row : table) {
    if (row.kappa_chain > s.max_kappa_chain) {
      s.max_kappa_chain = row.kappa_chain;
      s.argmax_m = row.m;
    }
  }
  return s;
}

}  // namespace bhlab
