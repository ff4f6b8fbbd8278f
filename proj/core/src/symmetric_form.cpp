#include "bhlab/symmetric_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "bhlab/combinatorics.hpp"

namespace bhlab {

Complex symmetric_form_basis(const HomogeneousPolynomial& p, std::span<const BasisBlock> blocks) {
  std::vector<std::pair<VarIndex, Exponent>> entries;
  std::uint64_t total = 0;
  for (const BasisBlock& b : blocks) {
    total += b.multiplicity;
    if (b.multiplicity != 0) entries.emplace_back(b.var, b.multiplicity);
  }
  if (total != p.degree()) {
    throw std::invalid_argument("symmetric_form_basis: block multiplicities sum to " +
                                std::to_string(total) + ", expected m = " +
                                std::to_string(p.degree()));
  }
  const MultiIndex alpha{std::span<const std::pair<VarIndex, Exponent>>(entries)};
  const Complex c = p.coefficient(alpha);
  if (c == Complex{}) return {};
  return c / to_double(multinomial(alpha));
}

Complex polarization_eval(const HomogeneousPolynomial& p,
                          std::span<const std::vector<Complex>> points) {
  const unsigned m = p.degree();
  if (m > kPolarizationMaxDegree) {
    throw std::invalid_argument("polarization_eval: degree " + std::to_string(m) +
                                " exceeds oracle limit " + std::to_string(kPolarizationMaxDegree));
  }
  if (points.size() != m) {
    throw std::invalid_argument("polarization_eval: expected " + std::to_string(m) +
                                " points, got " + std::to_string(points.size()));
  }
  const std::size_t n = p.num_vars();
  for (const auto& x : points) {
    if (x.size() != n) throw std::invalid_argument("polarization_eval: point dimension mismatch");
  }

  std::vector<Complex> y(n);
  Complex acc{};
  const std::uint32_t patterns = 1u << (m - 1);
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    // bit k-1 of mask set => eps_k = -1 for k >= 1; eps_0 = +1
    std::fill(y.begin(), y.end(), Complex{});
    int sign = 1;
    for (unsigned k = 0; k < m; ++k) {
      const bool negative = k > 0 && ((mask >> (k - 1)) & 1u);
      if (negative) sign = -sign;
      const auto& x = points[k];
      if (negative) {
        for (std::size_t j = 0; j < n; ++j) y[j] -= x[j];
      } else {
        for (std::size_t j = 0; j < n; ++j) y[j] += x[j];
      }
    }
    const Complex v = evaluate(p, y);
    acc += sign > 0 ? v : -v;
  }
  return acc / (static_cast<double>(patterns) * to_double(factorial(m)));
}

}  // namespace bhlab
