#include "bhlab/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace bhlab {

namespace {

Complex int_pow(Complex base, Exponent e) {
  Complex result{1.0, 0.0};
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(unsigned degree, std::size_t num_vars,
                                             std::span<const Term> terms)
    : degree_(degree), num_vars_(num_vars) {
  if (degree == 0) throw std::invalid_argument("homogeneous polynomial degree must be >= 1");
  if (num_vars == 0) throw std::invalid_argument("homogeneous polynomial needs n >= 1 variables");
  for (const auto& [alpha, c] : terms) {
    if (alpha.degree() != degree) {
      throw std::invalid_argument("term " + alpha.to_string() + " has degree " +
                                  std::to_string(alpha.degree()) + ", expected " +
                                  std::to_string(degree));
    }
    if (alpha.span_end() > num_vars) {
      throw std::invalid_argument("term " + alpha.to_string() + " uses a variable >= n = " +
                                  std::to_string(num_vars));
    }
    coeffs_[alpha] += c;
  }
  std::erase_if(coeffs_, [](const auto& kv) { return kv.second == Complex{}; });
}

HomogeneousPolynomial::HomogeneousPolynomial(unsigned degree, std::size_t num_vars,
                                             std::initializer_list<Term> terms)
    : HomogeneousPolynomial(degree, num_vars, std::span<const Term>(terms.begin(), terms.size())) {}

Complex HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? Complex{} : it->second;
}

HomogeneousPolynomial HomogeneousPolynomial::scaled(Complex lambda) const {
  std::vector<Term> terms;
  terms.reserve(coeffs_.size());
  for (const auto& [alpha, c] : coeffs_) terms.emplace_back(alpha, lambda * c);
  return HomogeneousPolynomial(degree_, num_vars_, terms);
}

std::size_t HomogeneousPolynomial::max_vars() const {
  std::size_t best = 0;
  for (const auto& [alpha, c] : coeffs_) best = std::max(best, alpha.vars());
  return best;
}

bool HomogeneousPolynomial::has_disjoint_monomials() const {
  std::set<VarIndex> seen;
  for (const auto& [alpha, c] : coeffs_) {
    for (const auto& e : alpha.entries()) {
      if (!seen.insert(e.var).second) return false;
    }
  }
  return true;
}

Complex evaluate(const HomogeneousPolynomial& p, std::span<const Complex> z) {
  if (z.size() != p.num_vars()) {
    throw std::invalid_argument("evaluate: point has " + std::to_string(z.size()) +
                                " coordinates, polynomial has n = " + std::to_string(p.num_vars()));
  }
  Complex sum{};
  for (const auto& [alpha, c] : p.coefficients()) {
    Complex mono = c;
    for (const auto& e : alpha.entries()) mono *= int_pow(z[e.var], e.exp);
    sum += mono;
  }
  return sum;
}

Complex evaluate_phases(const HomogeneousPolynomial& p, std::span<const double> phases) {
  if (phases.size() != p.num_vars()) {
    throw std::invalid_argument("evaluate_phases: dimension mismatch");
  }
  Complex sum{};
  for (const auto& [alpha, c] : p.coefficients()) {
    double phase = 0.0;
    for (const auto& e : alpha.entries()) phase += e.exp * phases[e.var];
    sum += c * std::polar(1.0, phase);
  }
  return sum;
}

}  // namespace bhlab
