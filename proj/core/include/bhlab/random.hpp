#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "bhlab/polynomial.hpp"

namespace bhlab {

// Mixes a base seed with a stream index so that every start / candidate /
// polynomial draws from its own reproducible stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. mt19937_64 output is fixed by the standard;
/// the real-valued mappings below are ours, so draws match on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller (one value per call).
  double normal();
  // exp(i * phi) with phi uniform on [0, 2 pi).
  Complex unit_phase();
  // Standard complex normal: real and imaginary parts N(0, 1/2).
  Complex complex_normal();

 private:
  std::mt19937_64 engine_;
};

enum class CoefficientKind { steinhaus, gaussian, sparse_lambda };

const char* to_string(CoefficientKind kind);
// Throws std::invalid_argument on an unknown name.
CoefficientKind parse_coefficient_kind(const std::string& name);

/// Random polynomial supported on Lambda_M(m, M, n).
///
/// steinhaus: unit-modulus coefficients with uniform phase on all of Lambda_M.
/// gaussian: standard complex normal coefficients on all of Lambda_M.
/// sparse_lambda: keeps each monomial independently with probability `density`
/// and gives it a Steinhaus coefficient; an empty draw is resampled once and
/// then reported as std::runtime_error.
HomogeneousPolynomial random_polynomial(CoefficientKind kind, unsigned m, unsigned M, unsigned n,
                                        double density, std::uint64_t seed);

}  // namespace bhlab
