#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bhlab/multi_index.hpp"

namespace bhlab {

/// Arbitrary-precision nonnegative integer (factorials, multinomials, counts).
using BigNat = boost::multiprecision::cpp_int;

BigNat factorial(unsigned n);
BigNat binomial(unsigned n, unsigned k);

// m! / prod alpha_j! with m = |alpha|.
BigNat multinomial(const MultiIndex& alpha);

/// Ordered tuple (tau_1, ..., tau_M) of nonnegative integers with sum m.
class Composition {
 public:
  // Throws std::invalid_argument on an empty part list.
  explicit Composition(std::vector<unsigned> parts);

  std::span<const unsigned> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  unsigned total() const { return total_; }
  unsigned operator[](std::size_t k) const { return parts_[k]; }

  // tau read as a multi-index on variables 0..M-1 (zero parts dropped).
  MultiIndex as_multi_index() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned total_ = 0;
};

// m! / prod tau_k!  (0! = 1 for empty parts).
BigNat multinomial(const Composition& tau);

// Lambda_M restricted to variables 0..n-1: all alpha with |alpha| = m and
// vars(alpha) <= M. Sorted ascending, no duplicates.
// Throws std::invalid_argument unless 1 <= M <= m and n >= 1.
std::vector<MultiIndex> enumerate_lambda(unsigned m, unsigned M, unsigned n);

// Gamma_m: every ordered M-tuple of nonnegative integers summing to m, in
// lexicographic order. There are binomial(m + M - 1, m) of them.
// Throws std::invalid_argument on m == 0 or M == 0.
std::vector<Composition> enumerate_compositions(unsigned m, unsigned M);

// Exact conversion helpers used at the floating-point boundary.
double to_double(const BigNat& x);
// Natural log of a positive BigNat, accurate to double precision even far
// outside the double range.
double log_of(const BigNat& x);

}  // namespace bhlab
