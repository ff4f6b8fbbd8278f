#pragma once

#include <span>
#include <vector>

#include "bhlab/polynomial.hpp"

namespace bhlab {

// A run of `multiplicity` copies of the basis vector e_var among the m
// arguments of the symmetric form.
struct BasisBlock {
  VarIndex var;
  unsigned multiplicity;
};

// Largest degree for which the 2^(m-1)-term polarization formula is used.
inline constexpr unsigned kPolarizationMaxDegree = 12;

/// Value of the symmetric m-linear form of P at (e_{i_1}^{tau_1}, ..., e_{i_M}^{tau_M}).
///
/// Blocks are aggregated into alpha (repeated variables add up, empty blocks are
/// skipped) and the result is c_alpha / binom(m, alpha).
/// Throws std::invalid_argument when the multiplicities do not sum to m.
Complex symmetric_form_basis(const HomogeneousPolynomial& p, std::span<const BasisBlock> blocks);

/// Symmetric m-linear form of P at arbitrary points x_1, ..., x_m of C^n.
///
/// Uses the sign-averaged polarization identity
///   P^(x_1..x_m) = 1 / (2^m m!) * sum_{eps in {+-1}^m} eps_1...eps_m P(sum_k eps_k x_k),
/// halved by fixing eps_1 = +1 (the eps -> -eps terms coincide for degree m).
/// Throws std::invalid_argument when m > kPolarizationMaxDegree, when fewer or
/// more than m points are given, or when a point does not have n coordinates.
Complex polarization_eval(const HomogeneousPolynomial& p,
                          std::span<const std::vector<Complex>> points);

}  // namespace bhlab
