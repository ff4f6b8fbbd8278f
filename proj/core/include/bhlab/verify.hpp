#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bhlab/constants.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/polynomial.hpp"

namespace bhlab {

// Relative slack allowed when both sides come from exact-comparable arithmetic.
inline constexpr double kExactTolerance = 1e-9;
// Relative slack allowed when an optimizer feeds one side.
inline constexpr double kOptimizerTolerance = 1e-6;

enum class StepId { expansion, des1, l2_mmp, holder, polarization, pre_interpolation, final };

const char* to_string(StepId step);
// Throws std::invalid_argument on an unknown name.
StepId parse_step_id(const std::string& name);

/// One inequality lhs <= rhs checked on a concrete instance.
/// passed <=> lhs <= rhs * (1 + tolerance); slack = rhs - lhs.
struct StepReport {
  StepId step = StepId::final;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = kExactTolerance;
  bool passed = false;
  // For steps checked against a norm bracket: rhs side evaluated at the
  // realized lower bound instead of the certified upper bound. NaN otherwise.
  double rhs_at_lower = std::numeric_limits<double>::quiet_NaN();
};

StepReport make_step_report(StepId step, double lhs, double rhs, double tolerance);

// (sum_{alpha in Lambda_M} |c_alpha|^q)^(1/q). Throws std::invalid_argument for q < 1.
double lhs_bh(const HomogeneousPolynomial& p, unsigned M, double q);

// Upper limit on n^M * |Gamma_m| for the expansion-step enumeration.
inline constexpr double kExpansionBudget = 1e7;

/// sum_{Lambda_M} |c|^p  <=  sum_{tau in Gamma_m} sum_{i_1..i_M} (binom(m,tau) |P^(e_i1^tau1, ...)|)^p
/// with p = 2M/(M+1), both sides computed from the coefficients.
/// Throws std::invalid_argument when M > m and std::length_error when the
/// enumeration exceeds kExpansionBudget.
StepReport check_expansion_step(const HomogeneousPolynomial& p, unsigned M,
                                double tolerance = kExactTolerance);

/// max_{tau in Gamma_m} binom(m, tau) <= m! / (floor(m/M)!)^M, decided in exact
/// integer arithmetic; lhs/rhs are reported as doubles.
StepReport check_des1_step(unsigned m, unsigned M);

// sqrt(sum |c_alpha|^2) <= ||P||, against the certified upper end of `norm`.
StepReport check_l2_step(const HomogeneousPolynomial& p, const NormEstimate& norm,
                         double tolerance = kOptimizerTolerance);
StepReport check_l2_step(const HomogeneousPolynomial& p, const SearchConfig& cfg,
                         double tolerance = kOptimizerTolerance);

/// ||c||_{2m/(m+1)} <= ||c||_{2M/(M+1)}^theta * ||c||_2^(1-theta), theta = M/m,
/// all norms over Lambda_M.
StepReport check_holder_step(const HomogeneousPolynomial& p, unsigned M,
                             double tolerance = kExactTolerance);
// Same inequality for a bare vector of magnitudes.
StepReport check_holder_vector(std::span<const double> magnitudes, unsigned m, unsigned M,
                               double tolerance = kExactTolerance);

/// Instance of ||P^|| <= e^m ||P||: realized lower bound on ||P^|| against
/// e^m times the certified upper bound on ||P||. Requires m <= 8.
StepReport check_polarization_step(const HomogeneousPolynomial& p, const SearchConfig& cfg,
                                   double tolerance = kOptimizerTolerance);

/// Exponent 2M/(M+1) before interpolation: lhs_bh(P, M, 2M/(M+1)) against the
/// pre-interpolation constant times the realized lower bound on ||P||.
StepReport check_pre_interpolation_step(const HomogeneousPolynomial& p, unsigned M,
                                        const NormEstimate& norm, const BetaConfig& beta,
                                        double tolerance = kExactTolerance);

struct Certificate {
  double lhs = 0.0;    // lhs_bh(P, M, 2m/(m+1))
  double kappa = 0.0;  // proof_chain_constant(m, M, beta)
  NormEstimate norm;   // sup_norm_lower(P)
  bool passed = false; // lhs <= kappa * norm.lower
  StepReport as_step() const;
};

// Sound per-instance check of the uniform bound. Throws std::invalid_argument
// for the zero polynomial or M > m.
Certificate certify_theorem_instance(const HomogeneousPolynomial& p, unsigned M,
                                     const SearchConfig& cfg, const BetaConfig& beta);

/// Empirical quotient lhs / ||P|| with both directions kept sound.
struct RatioWitness {
  HomogeneousPolynomial polynomial;
  double q = 1.0;
  double lhs = 0.0;
  NormEstimate norm;
  double ratio_lower = 0.0;  // lhs / norm.upper
  double ratio_upper = 0.0;  // lhs / norm.lower
  std::string provenance;
};

// Throws std::invalid_argument for the zero polynomial.
RatioWitness make_ratio_witness(const HomogeneousPolynomial& p, unsigned M, double q,
                                const SearchConfig& cfg, std::string provenance);

struct ConstantSearch {
  unsigned m = 2;
  unsigned M = 1;
  unsigned n = 2;
  double q = 1.0;
  unsigned budget = 64;       // random Steinhaus candidates
  unsigned climb_steps = 64;  // hill-climbing moves from the best candidate
  std::uint64_t seed = 0;
};

/// Best lower bound on the optimal constant found over the deterministic seed
/// family (z_0^m, sum_j z_j^m, all-ones on Lambda_M), `budget` Steinhaus
/// candidates and `climb_steps` coefficient moves (random phase rotation or
/// magnitude x0.5 / x2, accepted on improvement of ratio_lower).
/// Throws std::invalid_argument for q < 1 or invalid dimensions.
RatioWitness search_constant_lower_bound(const ConstantSearch& request, const SearchConfig& cfg);

struct ProbeRow {
  unsigned n = 0;
  double ratio_lower = 0.0;
  double ratio_upper = 0.0;
  std::string provenance;
};

struct ProbeResult {
  unsigned M = 1;
  unsigned m = 1;
  double q = 1.0;
  std::vector<ProbeRow> rows;
  bool monotone_increasing = false;
  std::string trend;  // "growing", "flat" or "decreasing": last / first beyond +-5%
};

// Runs the search for every n; the trend is an observation, not a claim.
ProbeResult exponent_probe(unsigned M, double q, std::span<const unsigned> n_list, unsigned m,
                           unsigned budget, std::uint64_t seed, const SearchConfig& cfg,
                           unsigned climb_steps = 32);

/// Which checks verify_polynomial runs.
struct StepSelection {
  std::vector<StepId> steps{StepId::expansion, StepId::des1, StepId::l2_mmp, StepId::holder,
                            StepId::polarization, StepId::pre_interpolation, StepId::final};
  bool contains(StepId id) const;
};

struct StepTolerances {
  double exact = kExactTolerance;
  double optimizer = kOptimizerTolerance;
};

// Runs the selected checks on one polynomial, sharing a single norm bracket.
// The polarization check is skipped (not reported) when m > 8.
std::vector<StepReport> verify_polynomial(const HomogeneousPolynomial& p, unsigned M,
                                          const StepSelection& selection, const SearchConfig& cfg,
                                          const BetaConfig& beta, const StepTolerances& tol = {});

}  // namespace bhlab
