#include "bhlab/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "bhlab/combinatorics.hpp"

namespace bhlab {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over seed and stream
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

Complex Rng::complex_normal() {
  const double s = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

const char* to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::steinhaus: return "steinhaus";
    case CoefficientKind::gaussian: return "gaussian";
    case CoefficientKind::sparse_lambda: return "sparse-lambda";
  }
  return "?";
}

CoefficientKind parse_coefficient_kind(const std::string& name) {
  if (name == "steinhaus") return CoefficientKind::steinhaus;
  if (name == "gaussian") return CoefficientKind::gaussian;
  if (name == "sparse-lambda" || name == "sparse") return CoefficientKind::sparse_lambda;
  throw std::invalid_argument("unknown coefficient kind '" + name +
                              "' (expected steinhaus, gaussian or sparse-lambda)");
}

HomogeneousPolynomial random_polynomial(CoefficientKind kind, unsigned m, unsigned M, unsigned n,
                                        double density, std::uint64_t seed) {
  if (kind == CoefficientKind::sparse_lambda && !(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_polynomial: density must lie in [0, 1]");
  }
  const std::vector<MultiIndex> support = enumerate_lambda(m, M, n);
  Rng rng(seed);
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<HomogeneousPolynomial::Term> terms;
    terms.reserve(support.size());
    for (const MultiIndex& alpha : support) {
      switch (kind) {
        case CoefficientKind::steinhaus:
          terms.emplace_back(alpha, rng.unit_phase());
          break;
        case CoefficientKind::gaussian:
          terms.emplace_back(alpha, rng.complex_normal());
          break;
        case CoefficientKind::sparse_lambda: {
          const bool keep = rng.uniform() < density;
          const Complex c = rng.unit_phase();
          if (keep) terms.emplace_back(alpha, c);
          break;
        }
      }
    }
    HomogeneousPolynomial p(m, n, terms);
    if (!p.is_zero()) return p;
  }
  throw std::runtime_error("random_polynomial: empty support after resampling (density " +
                           std::to_string(density) + ")");
}

}  // namespace bhlab
