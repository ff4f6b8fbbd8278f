#include "bhlab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bhlab {

BigNat factorial(unsigned n) {
  BigNat r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigNat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigNat r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binom(n-k+i, i) after this step
  }
  return r;
}

BigNat multinomial(const MultiIndex& alpha) {
  // Product of binomials avoids forming m! when the exponents are large.
  BigNat r = 1;
  unsigned running = 0;
  for (const auto& e : alpha.entries()) {
    running += e.exp;
    r *= binomial(running, e.exp);
  }
  return r;
}

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

MultiIndex Composition::as_multi_index() const {
  return MultiIndex::from_dense(std::span<const Exponent>(parts_.data(), parts_.size()));
}

BigNat multinomial(const Composition& tau) { return multinomial(tau.as_multi_index()); }

namespace {

// Appends every alpha supported on exactly `k` variables chosen from [first, n),
// with positive exponents summing to `remaining`.
void extend_lambda(unsigned remaining, unsigned k, unsigned first, unsigned n,
                   std::vector<std::pair<VarIndex, Exponent>>& prefix,
                   std::vector<MultiIndex>& out) {
  if (k == 0) {
    if (remaining == 0) out.emplace_back(std::span<const std::pair<VarIndex, Exponent>>(prefix));
    return;
  }
  if (remaining < k) return;
  for (unsigned var = first; var + k <= n; ++var) {
    // leave at least one unit for each of the k-1 later variables
    for (unsigned e = 1; e + (k - 1) <= remaining; ++e) {
      if (k == 1 && e != remaining) continue;
      prefix.emplace_back(var, e);
      extend_lambda(remaining - e, k - 1, var + 1, n, prefix, out);
      prefix.pop_back();
    }
  }
}

void extend_compositions(unsigned remaining, std::size_t slot, std::vector<unsigned>& parts,
                         std::vector<Composition>& out) {
  if (slot + 1 == parts.size()) {
    parts[slot] = remaining;
    out.emplace_back(parts);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    parts[slot] = v;
    extend_compositions(remaining - v, slot + 1, parts, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_lambda(unsigned m, unsigned M, unsigned n) {
  if (M < 1 || M > m) {
    throw std::invalid_argument("enumerate_lambda requires 1 <= M <= m (got m=" +
                                std::to_string(m) + ", M=" + std::to_string(M) + ")");
  }
  if (n < 1) throw std::invalid_argument("enumerate_lambda requires n >= 1");
  std::vector<MultiIndex> out;
  std::vector<std::pair<VarIndex, Exponent>> prefix;
  for (unsigned k = 1; k <= std::min(M, n); ++k) extend_lambda(m, k, 0, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> enumerate_compositions(unsigned m, unsigned M) {
  if (m < 1 || M < 1) throw std::invalid_argument("enumerate_compositions requires m, M >= 1");
  std::vector<Composition> out;
  std::vector<unsigned> parts(M, 0);
  extend_compositions(m, 0, parts, out);
  return out;
}

double to_double(const BigNat& x) { return x.convert_to<double>(); }

double log_of(const BigNat& x) {
  if (x <= 0) throw std::domain_error("log_of: argument must be positive");
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const unsigned shift = static_cast<unsigned>(bits) - 60;
  const BigNat top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

}  // namespace bhlab
