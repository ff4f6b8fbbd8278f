#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bhlab/multi_index.hpp"

namespace bhlab {

using Complex = std::complex<double>;

/// m-homogeneous polynomial P(z) = sum_{|alpha| = m} c_alpha z^alpha in n variables.
///
/// Values are immutable once built. Every stored multi-index has degree m and
/// only touches variables 0..n-1; exact-zero coefficients are never stored, so
/// coefficient() of an absent key is 0.
class HomogeneousPolynomial {
 public:
  using Term = std::pair<MultiIndex, Complex>;
  using CoeffMap = std::map<MultiIndex, Complex>;

  // Repeated keys are summed. Throws std::invalid_argument on m == 0, n == 0,
  // or a term of the wrong degree / out-of-range variable.
  HomogeneousPolynomial(unsigned degree, std::size_t num_vars, std::span<const Term> terms);
  HomogeneousPolynomial(unsigned degree, std::size_t num_vars, std::initializer_list<Term> terms);

  unsigned degree() const { return degree_; }
  std::size_t num_vars() const { return num_vars_; }
  const CoeffMap& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Complex coefficient(const MultiIndex& alpha) const;

  // lambda * P; multiplying by 0 gives the zero polynomial.
  HomogeneousPolynomial scaled(Complex lambda) const;

  // Largest vars(alpha) over the support, 0 for the zero polynomial.
  std::size_t max_vars() const;

  // True when no variable occurs in two different monomials. For such P the
  // phases of each monomial can be aligned independently, so ||P|| = sum |c_alpha|.
  bool has_disjoint_monomials() const;

  friend bool operator==(const HomogeneousPolynomial&, const HomogeneousPolynomial&) = default;

 private:
  unsigned degree_;
  std::size_t num_vars_;
  CoeffMap coeffs_;
};

// sum c_alpha prod z_j^alpha_j. Throws std::invalid_argument when z.size() != n.
Complex evaluate(const HomogeneousPolynomial& p, std::span<const Complex> z);

// Evaluation on the torus, z_j = exp(i * phases[j]).
Complex evaluate_phases(const HomogeneousPolynomial& p, std::span<const double> phases);

}  // namespace bhlab
