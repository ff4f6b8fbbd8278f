#include "bhlab/verify.hpp"

#include <algorithm>
#include <optional>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bhlab/combinatorics.hpp"
#include "bhlab/parallel.hpp"
#include "bhlab/random.hpp"
#include "bhlab/symmetric_form.hpp"

namespace bhlab {

namespace {

double lq_of(std::span<const double> magnitudes, double q) {
  double sum = 0.0;
  for (double a : magnitudes) sum += std::pow(a, q);
  return std::pow(sum, 1.0 / q);
}

StepReport polarization_report(const HomogeneousPolynomial& p, const NormEstimate& norm,
                               const SearchConfig& cfg, double tolerance) {
  const NormEstimate multilinear = multilinear_sup_norm_lower(p, cfg);
  const double factor = std::exp(static_cast<double>(p.degree()));
  StepReport r = make_step_report(StepId::polarization, multilinear.lower, factor * norm.upper,
                                  tolerance);
  r.rhs_at_lower = factor * norm.lower;
  return r;
}

Certificate certify_with(const HomogeneousPolynomial& p, unsigned M, NormEstimate norm,
                         const BetaConfig& beta) {
  const unsigned m = p.degree();
  Certificate cert;
  cert.lhs = lhs_bh(p, M, 2.0 * m / (m + 1.0));
  cert.kappa = proof_chain_constant(m, M, beta);
  cert.norm = std::move(norm);
  cert.passed = cert.lhs <= cert.kappa * cert.norm.lower;
  return cert;
}

void require_nonzero(const HomogeneousPolynomial& p, const char* who) {
  if (p.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial rejected");
}

void require_M(const HomogeneousPolynomial& p, unsigned M, const char* who) {
  if (M < 1 || M > p.degree()) {
    throw std::invalid_argument(std::string(who) + ": requires 1 <= M <= m");
  }
}

}  // namespace

const char* to_string(StepId step) {
  switch (step) {
    case StepId::expansion: return "expansion";
    case StepId::des1: return "des1";
    case StepId::l2_mmp: return "l2-mmp";
    case StepId::holder: return "holder";
    case StepId::polarization: return "polarization";
    case StepId::pre_interpolation: return "pre-interpolation";
    case StepId::final: return "final";
  }
  return "?";
}

StepId parse_step_id(const std::string& name) {
  for (StepId id : {StepId::expansion, StepId::des1, StepId::l2_mmp, StepId::holder,
                    StepId::polarization, StepId::pre_interpolation, StepId::final}) {
    if (name == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown step '" + name + "'");
}

StepReport make_step_report(StepId step, double lhs, double rhs, double tolerance) {
  StepReport r;
  r.step = step;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = tolerance;
  r.passed = lhs <= rhs * (1.0 + tolerance);
  return r;
}

double lhs_bh(const HomogeneousPolynomial& p, unsigned M, double q) {
  return coeff_lq_norm(p, q, M);
}

StepReport check_expansion_step(const HomogeneousPolynomial& p, unsigned M, double tolerance) {
  require_M(p, M, "check_expansion_step");
  const unsigned m = p.degree();
  const std::size_t n = p.num_vars();
  const std::vector<Composition> gamma = enumerate_compositions(m, M);
  const double tuples = std::pow(static_cast<double>(n), M);
  if (tuples * static_cast<double>(gamma.size()) > kExpansionBudget) {
    throw std::length_error("check_expansion_step: n^M * |Gamma| exceeds enumeration budget");
  }
  const double exponent = 2.0 * M / (M + 1.0);

  double lhs = 0.0;
  for (const auto& [alpha, c] : p.coefficients()) {
    if (alpha.vars() <= M) lhs += std::pow(std::abs(c), exponent);
  }

  double rhs = 0.0;
  std::vector<BasisBlock> blocks(M);
  std::vector<VarIndex> idx(M, 0);
  for (const Composition& tau : gamma) {
    const double weight = to_double(multinomial(tau));
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (unsigned k = 0; k < M; ++k) blocks[k] = {idx[k], tau[k]};
      const Complex v = symmetric_form_basis(p, blocks);
      if (v != Complex{}) rhs += std::pow(weight * std::abs(v), exponent);
      unsigned k = 0;
      for (; k < M; ++k) {
        if (++idx[k] < n) break;
        idx[k] = 0;
      }
      if (k == M) break;
    }
  }
  return make_step_report(StepId::expansion, lhs, rhs, tolerance);
}

StepReport check_des1_step(unsigned m, unsigned M) {
  const MultinomialBound bound = multinomial_uniform_bound(m, M);
  BigNat worst = 0;
  for (const Composition& tau : enumerate_compositions(m, M)) worst = std::max(worst, multinomial(tau));
  StepReport r = make_step_report(StepId::des1, to_double(worst), to_double(bound.exact), 0.0);
  r.tolerance = 0.0;
  r.passed = worst <= bound.exact;
  return r;
}

StepReport check_l2_step(const HomogeneousPolynomial& p, const NormEstimate& norm,
                         double tolerance) {
  const double l2 = coeff_lq_norm(p, 2.0);
  StepReport r = make_step_report(StepId::l2_mmp, l2, norm.upper, tolerance);
  r.rhs_at_lower = norm.lower;
  return r;
}

StepReport check_l2_step(const HomogeneousPolynomial& p, const SearchConfig& cfg,
                         double tolerance) {
  return check_l2_step(p, sup_norm(p, cfg), tolerance);
}

StepReport check_holder_vector(std::span<const double> magnitudes, unsigned m, unsigned M,
                               double tolerance) {
  const double theta = interpolation_theta(m, M);
  const double r = 2.0 * m / (m + 1.0);
  const double p = 2.0 * M / (M + 1.0);
  const double lhs = lq_of(magnitudes, r);
  const double rhs = std::pow(lq_of(magnitudes, p), theta) * std::pow(lq_of(magnitudes, 2.0), 1.0 - theta);
  return make_step_report(StepId::holder, lhs, rhs, tolerance);
}

StepReport check_holder_step(const HomogeneousPolynomial& p, unsigned M, double tolerance) {
  require_M(p, M, "check_holder_step");
  std::vector<double> magnitudes;
  for (const auto& [alpha, c] : p.coefficients()) {
    if (alpha.vars() <= M) magnitudes.push_back(std::abs(c));
  }
  return check_holder_vector(magnitudes, p.degree(), M, tolerance);
}

StepReport check_polarization_step(const HomogeneousPolynomial& p, const SearchConfig& cfg,
                                   double tolerance) {
  if (p.degree() > kMultilinearMaxDegree) {
    throw std::invalid_argument("check_polarization_step: m must be <= 8");
  }
  return polarization_report(p, sup_norm_upper(p, cfg), cfg, tolerance);
}

StepReport check_pre_interpolation_step(const HomogeneousPolynomial& p, unsigned M,
                                        const NormEstimate& norm, const BetaConfig& beta,
                                        double tolerance) {
  require_M(p, M, "check_pre_interpolation_step");
  const double lhs = lhs_bh(p, M, 2.0 * M / (M + 1.0));
  const double constant = std::exp(log_pre_interpolation_constant(p.degree(), M, beta));
  return make_step_report(StepId::pre_interpolation, lhs, constant * norm.lower, tolerance);
}

StepReport Certificate::as_step() const {
  StepReport r = make_step_report(StepId::final, lhs, kappa * norm.lower, 0.0);
  r.passed = passed;
  return r;
}

Certificate certify_theorem_instance(const HomogeneousPolynomial& p, unsigned M,
                                     const SearchConfig& cfg, const BetaConfig& beta) {
  require_nonzero(p, "certify_theorem_instance");
  require_M(p, M, "certify_theorem_instance");
  return certify_with(p, M, sup_norm_lower(p, cfg), beta);
}

RatioWitness make_ratio_witness(const HomogeneousPolynomial& p, unsigned M, double q,
                                const SearchConfig& cfg, std::string provenance) {
  require_nonzero(p, "make_ratio_witness");
  if (!(q >= 1.0)) throw std::invalid_argument("make_ratio_witness: q must be >= 1");
  RatioWitness w{p, q, lhs_bh(p, M, q), sup_norm(p, cfg), 0.0, 0.0, std::move(provenance)};
  w.ratio_lower = w.lhs / w.norm.upper;
  w.ratio_upper = w.norm.lower > 0.0 ? w.lhs / w.norm.lower
                                     : std::numeric_limits<double>::infinity();
  return w;
}

RatioWitness search_constant_lower_bound(const ConstantSearch& req, const SearchConfig& cfg) {
  if (!(req.q >= 1.0)) throw std::invalid_argument("search_constant_lower_bound: q must be >= 1");
  if (req.M < 1 || req.M > req.m || req.n < 1) {
    throw std::invalid_argument("search_constant_lower_bound: requires 1 <= M <= m and n >= 1");
  }
  const unsigned m = req.m;
  const unsigned n = req.n;

  // Deterministic seed family first, then the random candidates.
  std::vector<std::pair<HomogeneousPolynomial, std::string>> family;
  family.emplace_back(HomogeneousPolynomial(m, n, {{MultiIndex{{0, m}}, 1.0}}), "family:single-monomial");
  if (n > 1) {
    std::vector<HomogeneousPolynomial::Term> powers;
    for (unsigned j = 0; j < n; ++j) powers.emplace_back(MultiIndex{{j, m}}, 1.0);
    family.emplace_back(HomogeneousPolynomial(m, n, powers), "family:pure-powers");
  }
  if (req.M > 1 && n > 1) {
    std::vector<HomogeneousPolynomial::Term> flat;
    for (const MultiIndex& alpha : enumerate_lambda(m, req.M, n)) flat.emplace_back(alpha, 1.0);
    family.emplace_back(HomogeneousPolynomial(m, n, flat), "family:all-ones");
  }
  const std::size_t total = family.size() + req.budget;

  // Norm searches inside run serially; the parallelism is across candidates.
  SearchConfig inner = cfg;
  inner.threads = 1;
  std::vector<std::optional<RatioWitness>> results(total);
  parallel_for(total, cfg.threads, [&](std::size_t i) {
    if (i < family.size()) {
      results[i] = make_ratio_witness(family[i].first, req.M, req.q, inner, family[i].second);
      return;
    }
    const std::size_t k = i - family.size();
    const std::uint64_t s = derive_seed(req.seed, k);
    results[i] = make_ratio_witness(
        random_polynomial(CoefficientKind::steinhaus, m, req.M, n, 1.0, s), req.M, req.q, inner,
        "random:steinhaus#" + std::to_string(k));
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < total; ++i) {
    if (results[i]->ratio_lower > results[best]->ratio_lower) best = i;
  }
  RatioWitness current = std::move(*results[best]);

  Rng rng(derive_seed(req.seed, 0xC11Bull));
  unsigned accepted = 0;
  for (unsigned step = 0; step < req.climb_steps; ++step) {
    const auto& coeffs = current.polynomial.coefficients();
    std::vector<HomogeneousPolynomial::Term> terms(coeffs.begin(), coeffs.end());
    const std::size_t pick = static_cast<std::size_t>(rng.uniform() * terms.size());
    const double move = rng.uniform();
    if (move < 0.5) {
      terms[pick].second *= rng.unit_phase();
    } else {
      terms[pick].second *= move < 0.75 ? 0.5 : 2.0;
    }
    HomogeneousPolynomial candidate(m, n, terms);
    if (candidate.is_zero()) continue;
    RatioWitness trial = make_ratio_witness(candidate, req.M, req.q, cfg, current.provenance);
    if (trial.ratio_lower > current.ratio_lower) {
      ++accepted;
      current = std::move(trial);
    }
  }
  if (accepted > 0) {
    const auto pos = current.provenance.find("+climb");
    current.provenance = current.provenance.substr(0, pos) + "+climb" + std::to_string(accepted);
  }
  return current;
}

ProbeResult exponent_probe(unsigned M, double q, std::span<const unsigned> n_list, unsigned m,
                           unsigned budget, std::uint64_t seed, const SearchConfig& cfg,
                           unsigned climb_steps) {
  if (!(q >= 1.0)) throw std::invalid_argument("exponent_probe: q must be >= 1");
  ProbeResult out;
  out.M = M;
  out.m = m;
  out.q = q;
  for (unsigned n : n_list) {
    ConstantSearch req{m, M, n, q, budget, climb_steps, derive_seed(seed, n)};
    const RatioWitness w = search_constant_lower_bound(req, cfg);
    out.rows.push_back({n, w.ratio_lower, w.ratio_upper, w.provenance});
  }
  out.monotone_increasing = true;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].ratio_lower < out.rows[i - 1].ratio_lower) out.monotone_increasing = false;
  }
  out.trend = "flat";
  if (out.rows.size() >= 2 && out.rows.front().ratio_lower > 0.0) {
    const double growth = out.rows.back().ratio_lower / out.rows.front().ratio_lower;
    if (growth > 1.05) out.trend = "growing";
    if (growth < 0.95) out.trend = "decreasing";
  }
  return out;
}

bool StepSelection::contains(StepId id) const {
  return std::find(steps.begin(), steps.end(), id) != steps.end();
}

std::vector<StepReport> verify_polynomial(const HomogeneousPolynomial& p, unsigned M,
                                          const StepSelection& selection, const SearchConfig& cfg,
                                          const BetaConfig& beta, const StepTolerances& tol) {
  require_M(p, M, "verify_polynomial");
  const unsigned m = p.degree();
  std::vector<StepReport> out;
  if (selection.contains(StepId::expansion)) out.push_back(check_expansion_step(p, M, tol.exact));
  if (selection.contains(StepId::des1)) out.push_back(check_des1_step(m, M));
  if (selection.contains(StepId::holder)) out.push_back(check_holder_step(p, M, tol.exact));

  const bool needs_norm = selection.contains(StepId::l2_mmp) ||
                          selection.contains(StepId::polarization) ||
                          selection.contains(StepId::pre_interpolation) ||
                          selection.contains(StepId::final);
  if (!needs_norm) return out;
  require_nonzero(p, "verify_polynomial");
  const NormEstimate norm = sup_norm(p, cfg);
  if (selection.contains(StepId::l2_mmp)) out.push_back(check_l2_step(p, norm, tol.optimizer));
  if (selection.contains(StepId::polarization) && m <= kMultilinearMaxDegree) {
    out.push_back(polarization_report(p, norm, cfg, tol.optimizer));
  }
  if (selection.contains(StepId::pre_interpolation)) {
    out.push_back(check_pre_interpolation_step(p, M, norm, beta, tol.exact));
  }
  if (selection.contains(StepId::final)) out.push_back(certify_with(p, M, norm, beta).as_step());
  return out;
}

}  // namespace bhlab
