#include "bhlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bhlab/combinatorics.hpp"
#include "bhlab/parallel.hpp"
#include "bhlab/random.hpp"
#include "bhlab/symmetric_form.hpp"

namespace bhlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Flattened term list; phases of monomials are sums of exponent * phase.
struct CompiledTerm {
  Complex coeff;
  std::vector<MultiIndex::Entry> entries;
};

struct Compiled {
  std::vector<CompiledTerm> terms;
  std::vector<VarIndex> active;                 // variables that occur, ascending
  std::vector<std::vector<std::size_t>> users;  // users[j]: terms containing j
  std::vector<Exponent> max_exp;                // per variable
};

Compiled compile(const HomogeneousPolynomial& p) {
  Compiled out;
  const std::size_t n = p.num_vars();
  out.users.resize(n);
  out.max_exp.assign(n, 0);
  for (const auto& [alpha, c] : p.coefficients()) {
    const std::size_t t = out.terms.size();
    out.terms.push_back({c, {alpha.entries().begin(), alpha.entries().end()}});
    for (const auto& e : alpha.entries()) {
      out.users[e.var].push_back(t);
      out.max_exp[e.var] = std::max(out.max_exp[e.var], e.exp);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!out.users[j].empty()) out.active.push_back(static_cast<VarIndex>(j));
  }
  return out;
}

double term_phase(const CompiledTerm& t, const std::vector<double>& phases) {
  double s = 0.0;
  for (const auto& e : t.entries) s += e.exp * phases[e.var];
  return s;
}

double abs_value(const Compiled& cp, const std::vector<double>& phases) {
  Complex sum{};
  for (const auto& t : cp.terms) sum += t.coeff * std::polar(1.0, term_phase(t, phases));
  return std::abs(sum);
}

double wrap_phase(double phi) {
  phi = std::fmod(phi, kTwoPi);
  return phi < 0.0 ? phi + kTwoPi : phi;
}

// Aligns every monomial's phase independently; valid when monomials share no variable.
std::vector<double> aligned_phases(const HomogeneousPolynomial& p) {
  std::vector<double> phases(p.num_vars(), 0.0);
  for (const auto& [alpha, c] : p.coefficients()) {
    const auto& lead = alpha.entries().front();
    phases[lead.var] = wrap_phase(-std::arg(c) / lead.exp);
  }
  return phases;
}

NormEstimate closed_form(const HomogeneousPolynomial& p) {
  NormEstimate est;
  est.method = NormMethod::closed_form;
  est.converged = true;
  if (p.is_zero()) {
    est.lower = est.upper = 0.0;
    est.witness.assign(p.num_vars(), 0.0);
    return est;
  }
  est.witness = aligned_phases(p);
  est.upper = trivial_upper(p);
  est.lower = std::min(std::abs(evaluate_phases(p, est.witness)), est.upper);
  est.evaluations = 1;
  return est;
}

bool has_closed_form(const HomogeneousPolynomial& p) {
  return p.is_zero() || p.has_disjoint_monomials();
}

// Maximizes h(phi) = |sum_k coeffs[k] e^{i k phi}| near the current phase.
struct PhaseStep {
  double phase;
  double value;
  std::uint64_t evaluations;
};

PhaseStep maximize_phase(const std::vector<Complex>& coeffs, double current) {
  const std::size_t degree = coeffs.size() - 1;
  auto h = [&](double phi) {
    Complex s{};
    for (std::size_t k = 0; k <= degree; ++k) s += coeffs[k] * std::polar(1.0, k * phi);
    return std::abs(s);
  };
  const std::size_t samples = std::max<std::size_t>(16, 4 * degree);
  const double step = kTwoPi / static_cast<double>(samples);
  PhaseStep best{current, h(current), 1};
  double best_sample = current;
  double best_sample_value = best.value;
  for (std::size_t s = 1; s < samples; ++s) {
    const double phi = current + step * static_cast<double>(s);
    const double v = h(phi);
    ++best.evaluations;
    if (v > best_sample_value) {
      best_sample_value = v;
      best_sample = phi;
    }
  }
  // golden-section on the bracket around the best sample
  constexpr double kInvPhi = 0.6180339887498949;
  double a = best_sample - step;
  double b = best_sample + step;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = h(c);
  double fd = h(d);
  best.evaluations += 2;
  for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = h(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = h(d);
    }
    ++best.evaluations;
  }
  const double golden = fc > fd ? c : d;
  const double golden_value = std::max(fc, fd);
  if (best_sample_value > best.value) {
    best.phase = best_sample;
    best.value = best_sample_value;
  }
  if (golden_value > best.value) {
    best.phase = golden;
    best.value = golden_value;
  }
  best.phase = wrap_phase(best.phase);
  return best;
}

struct AscentResult {
  std::vector<double> phases;
  double value = 0.0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

AscentResult phase_ascent(const Compiled& cp, std::vector<double> phases, const SearchConfig& cfg) {
  AscentResult r;
  double value = abs_value(cp, phases);
  r.evaluations = 1;
  std::vector<Complex> coeffs;
  for (unsigned sweep = 0; sweep < cfg.max_iters; ++sweep) {
    const double before = value;
    for (VarIndex j : cp.active) {
      coeffs.assign(cp.max_exp[j] + 1, Complex{});
      for (const auto& t : cp.terms) {
        const Exponent k = [&] {
          for (const auto& e : t.entries) {
            if (e.var == j) return e.exp;
          }
          return Exponent{0};
        }();
        const double rest = term_phase(t, phases) - k * phases[j];
        coeffs[k] += t.coeff * std::polar(1.0, rest);
      }
      const PhaseStep step = maximize_phase(coeffs, phases[j]);
      r.evaluations += step.evaluations;
      if (step.value > value) {
        phases[j] = step.phase;
        value = step.value;
      }
    }
    if (value - before < cfg.step_tolerance) {
      r.converged = true;
      break;
    }
  }
  r.value = abs_value(cp, phases);
  r.phases = std::move(phases);
  return r;
}

// Fractional parts of square roots of the first primes: Kronecker directions.
double kronecker_direction(std::size_t j) {
  static constexpr unsigned kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                         37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79};
  constexpr std::size_t count = sizeof(kPrimes) / sizeof(kPrimes[0]);
  const double root = std::sqrt(static_cast<double>(kPrimes[j % count])) + static_cast<double>(j / count) * 0.5;
  return root - std::floor(root);
}

std::vector<double> start_phases(std::size_t n, unsigned start, std::size_t kronecker_starts,
                                 std::uint64_t seed) {
  std::vector<double> phases(n, 0.0);
  if (start == 0) return phases;
  if (start <= kronecker_starts) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = static_cast<double>(start) * kronecker_direction(j);
      phases[j] = kTwoPi * (x - std::floor(x));
    }
    return phases;
  }
  Rng rng(derive_seed(seed, start));
  for (double& phi : phases) phi = kTwoPi * rng.uniform();
  return phases;
}

}  // namespace

const char* to_string(NormMethod method) {
  switch (method) {
    case NormMethod::closed_form: return "closed-form";
    case NormMethod::multistart_phase: return "multistart-phase";
    case NormMethod::lipschitz_grid: return "lipschitz-grid";
    case NormMethod::triangle: return "triangle";
  }
  return "?";
}

NormMethod parse_norm_method(const std::string& name) {
  if (name == "closed-form") return NormMethod::closed_form;
  if (name == "multistart-phase") return NormMethod::multistart_phase;
  if (name == "lipschitz-grid") return NormMethod::lipschitz_grid;
  if (name == "triangle") return NormMethod::triangle;
  throw std::invalid_argument("unknown norm method '" + name + "'");
}

void SearchConfig::validate() const {
  if (starts < 1) throw std::invalid_argument("SearchConfig: starts must be >= 1");
  if (grid_resolution < 2) throw std::invalid_argument("SearchConfig: grid_resolution must be >= 2");
  if (!(step_tolerance >= 0.0)) throw std::invalid_argument("SearchConfig: step_tolerance must be >= 0");
}

double coeff_lq_norm(const HomogeneousPolynomial& p, double q, std::optional<unsigned> support_M) {
  if (!(q >= 1.0)) throw std::invalid_argument("coeff_lq_norm: q must be >= 1");
  double sum = 0.0;
  for (const auto& [alpha, c] : p.coefficients()) {
    if (support_M && alpha.vars() > *support_M) continue;
    sum += q == 1.0 ? std::abs(c) : std::pow(std::abs(c), q);
  }
  if (q == 1.0) return sum;
  if (q == 2.0) return std::sqrt(sum);
  return std::pow(sum, 1.0 / q);
}

double trivial_upper(const HomogeneousPolynomial& p) { return coeff_lq_norm(p, 1.0); }

NormEstimate sup_norm_lower(const HomogeneousPolynomial& p, const SearchConfig& cfg) {
  cfg.validate();
  if (has_closed_form(p)) return closed_form(p);

  const Compiled cp = compile(p);
  const std::size_t kronecker_starts = (cfg.starts - 1) / 2;
  std::vector<AscentResult> results(cfg.starts);
  parallel_for(cfg.starts, cfg.threads, [&](std::size_t s) {
    results[s] = phase_ascent(
        cp, start_phases(p.num_vars(), static_cast<unsigned>(s), kronecker_starts, cfg.seed), cfg);
  });

  std::size_t best = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    evaluations += results[s].evaluations;
    if (results[s].value > results[best].value) best = s;
  }
  NormEstimate est;
  est.method = NormMethod::multistart_phase;
  est.lower = results[best].value;
  est.upper = kInf;
  est.evaluations = evaluations;
  est.converged = results[best].converged;
  est.witness = std::move(results[best].phases);
  return est;
}

NormEstimate sup_norm_upper(const HomogeneousPolynomial& p, const SearchConfig& cfg) {
  cfg.validate();
  if (has_closed_form(p)) return closed_form(p);

  const Compiled cp = compile(p);
  const double triangle = trivial_upper(p);
  const std::size_t dims = cp.active.size() - 1;  // one active phase is pinned

  unsigned res = cfg.grid_resolution;
  auto grid_size = [dims](unsigned r) {
    double total = 1.0;
    for (std::size_t d = 0; d < dims; ++d) total *= r;
    return total;
  };
  while (res > 2 && grid_size(res) > static_cast<double>(cfg.max_grid_points)) --res;

  NormEstimate est;
  est.witness.assign(p.num_vars(), 0.0);
  if (grid_size(res) > static_cast<double>(cfg.max_grid_points)) {
    est.method = NormMethod::triangle;
    est.upper = triangle;
    est.lower = std::min(abs_value(cp, est.witness), triangle);
    est.evaluations = 1;
    est.converged = false;
    return est;
  }

  const double delta = std::numbers::pi / res;
  // Pick the pinned variable that gives the smallest cover slack.
  VarIndex pinned = cp.active.front();
  double best_slack = kInf;
  for (VarIndex r : cp.active) {
    double lipschitz = 0.0;
    double curvature = 0.0;
    for (const auto& t : cp.terms) {
      double moving = 0.0;
      for (const auto& e : t.entries) {
        if (e.var != r) moving += e.exp;
      }
      lipschitz += moving * std::abs(t.coeff);
      curvature += moving * moving * std::abs(t.coeff);
    }
    const double slack = std::min(delta * lipschitz, 0.5 * delta * delta * curvature);
    if (slack < best_slack) {
      best_slack = slack;
      pinned = r;
    }
  }
  std::vector<VarIndex> moving;
  for (VarIndex j : cp.active) {
    if (j != pinned) moving.push_back(j);
  }

  // Grid phases are 2 pi g / res, so each monomial sits at an integer phase
  // index mod res and the odometer below only needs integer updates.
  std::vector<Complex> roots(res);
  for (unsigned k = 0; k < res; ++k) roots[k] = std::polar(1.0, kTwoPi * k / res);
  std::vector<std::vector<std::pair<std::size_t, Exponent>>> step_users(moving.size());
  for (std::size_t d = 0; d < moving.size(); ++d) {
    for (std::size_t t = 0; t < cp.terms.size(); ++t) {
      for (const auto& e : cp.terms[t].entries) {
        if (e.var == moving[d]) step_users[d].emplace_back(t, e.exp % res);
      }
    }
  }
  std::vector<unsigned> index(cp.terms.size(), 0);
  std::vector<unsigned> counter(moving.size(), 0);
  std::vector<unsigned> best_counter = counter;
  double grid_max = -1.0;
  std::uint64_t points = 0;
  while (true) {
    Complex sum{};
    for (std::size_t t = 0; t < cp.terms.size(); ++t) sum += cp.terms[t].coeff * roots[index[t]];
    const double v = std::abs(sum);
    ++points;
    if (v > grid_max) {
      grid_max = v;
      best_counter = counter;
    }
    std::size_t d = 0;
    for (; d < moving.size(); ++d) {
      // Advancing g_d by one (with or without wrap) adds alpha_d to each index mod res.
      for (const auto& [t, e] : step_users[d]) index[t] = (index[t] + e) % res;
      if (++counter[d] < res) break;
      counter[d] = 0;
    }
    if (d == moving.size()) break;
  }

  for (std::size_t d = 0; d < moving.size(); ++d) {
    est.witness[moving[d]] = kTwoPi * best_counter[d] / res;
  }
  // Rounding in the grid sums is far below this pad.
  const double pad = 16.0 * std::numeric_limits<double>::epsilon() *
                     static_cast<double>(cp.terms.size()) * triangle;
  const double certified = grid_max + best_slack + pad;
  est.lower = std::min(grid_max, triangle);
  est.evaluations = points;
  if (certified < triangle) {
    est.method = NormMethod::lipschitz_grid;
    est.upper = certified;
    est.converged = true;
  } else {
    est.method = NormMethod::triangle;
    est.upper = triangle;
    est.converged = false;
  }
  return est;
}

NormEstimate sup_norm(const HomogeneousPolynomial& p, const SearchConfig& cfg) {
  if (has_closed_form(p)) return closed_form(p);
  NormEstimate lo = sup_norm_lower(p, cfg);
  NormEstimate hi = sup_norm_upper(p, cfg);
  NormEstimate est;
  est.method = hi.method;
  est.upper = hi.upper;
  est.evaluations = lo.evaluations + hi.evaluations;
  est.converged = lo.converged && hi.converged;
  if (hi.lower > lo.lower) {
    est.lower = hi.lower;
    est.witness = std::move(hi.witness);
  } else {
    est.lower = lo.lower;
    est.witness = std::move(lo.witness);
  }
  est.lower = std::min(est.lower, est.upper);
  return est;
}

namespace {

using Point = std::vector<std::vector<Complex>>;  // m points in C^n

struct MultilinearResult {
  Point point;
  double value = 0.0;
  std::uint64_t evaluations = 0;
  bool converged = false;
};

MultilinearResult multilinear_ascent(const HomogeneousPolynomial& p, Point x,
                                     const SearchConfig& cfg) {
  const unsigned m = p.degree();
  const std::size_t n = p.num_vars();
  MultilinearResult r;
  Complex total = polarization_eval(p, x);
  r.evaluations = 1;
  double value = std::abs(total);
  std::vector<Complex> partial(n);
  // A sweep always runs at least once so every coordinate ends up unimodular.
  for (unsigned sweep = 0; sweep < std::max(1u, cfg.max_iters); ++sweep) {
    const double before = value;
    for (unsigned k = 0; k < m; ++k) {
      const std::vector<Complex> saved = x[k];
      for (std::size_t j = 0; j < n; ++j) {
        x[k].assign(n, Complex{});
        x[k][j] = 1.0;
        partial[j] = polarization_eval(p, x);
        ++r.evaluations;
      }
      x[k] = saved;
      total = Complex{};
      for (std::size_t j = 0; j < n; ++j) total += x[k][j] * partial[j];
      for (std::size_t j = 0; j < n; ++j) {
        const Complex rest = total - x[k][j] * partial[j];
        Complex next{1.0, 0.0};
        if (partial[j] != Complex{}) {
          const double target = rest == Complex{} ? 0.0 : std::arg(rest);
          next = std::polar(1.0, target - std::arg(partial[j]));
        }
        x[k][j] = next;
        total = rest + next * partial[j];
      }
      value = std::abs(total);
    }
    if (value - before < cfg.step_tolerance) {
      r.converged = true;
      break;
    }
  }
  r.value = std::abs(polarization_eval(p, x));
  ++r.evaluations;
  r.point = std::move(x);
  return r;
}

}  // namespace

NormEstimate multilinear_sup_norm_lower(const HomogeneousPolynomial& p, const SearchConfig& cfg) {
  cfg.validate();
  const unsigned m = p.degree();
  const std::size_t n = p.num_vars();
  if (m > kMultilinearMaxDegree) {
    throw std::invalid_argument("multilinear_sup_norm_lower: degree " + std::to_string(m) +
                                " exceeds limit " + std::to_string(kMultilinearMaxDegree));
  }
  NormEstimate est;
  if (p.is_zero()) {
    est.lower = est.upper = 0.0;
    est.method = NormMethod::closed_form;
    est.converged = true;
    est.witness.assign(static_cast<std::size_t>(m) * n, 0.0);
    return est;
  }

  // Largest basis-block value |c_alpha| / binom(m, alpha).
  const MultiIndex* best_alpha = nullptr;
  double best_block = -1.0;
  for (const auto& [alpha, c] : p.coefficients()) {
    const double v = std::abs(c) / to_double(multinomial(alpha));
    if (v > best_block) {
      best_block = v;
      best_alpha = &alpha;
    }
  }

  auto make_start = [&](std::size_t s) {
    Point x(m, std::vector<Complex>(n, Complex{1.0, 0.0}));
    if (s == 0) {
      unsigned k = 0;
      for (const auto& e : best_alpha->entries()) {
        for (Exponent rep = 0; rep < e.exp; ++rep, ++k) {
          x[k].assign(n, Complex{});
          x[k][e.var] = 1.0;
        }
      }
    } else if (s > 1) {
      Rng rng(derive_seed(cfg.seed, 0x6d6c0000ull + s));
      for (auto& pt : x) {
        for (auto& z : pt) z = rng.unit_phase();
      }
    }
    return x;
  };

  const std::size_t starts = std::max<std::size_t>(cfg.starts, 2);
  std::vector<MultilinearResult> results(starts);
  parallel_for(starts, cfg.threads,
               [&](std::size_t s) { results[s] = multilinear_ascent(p, make_start(s), cfg); });

  std::size_t best = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    evaluations += results[s].evaluations;
    if (results[s].value > results[best].value) best = s;
  }
  est.method = NormMethod::multistart_phase;
  est.lower = std::max(results[best].value, best_block);
  est.upper = kInf;
  est.evaluations = evaluations;
  est.converged = results[best].converged;
  est.witness.reserve(static_cast<std::size_t>(m) * n);
  for (const auto& pt : results[best].point) {
    for (const auto& z : pt) est.witness.push_back(wrap_phase(std::arg(z)));
  }
  return est;
}

}  // namespace bhlab
