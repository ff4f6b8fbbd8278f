#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bhlab {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Sparse exponent vector alpha: variable index -> positive exponent.
///
/// Entries are kept sorted by variable index with no zero exponents, so two
/// values compare equal exactly when they describe the same monomial.
class MultiIndex {
 public:
  struct Entry {
    VarIndex var;
    Exponent exp;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  MultiIndex() = default;
  // Repeated variables are merged by adding exponents; zero exponents are dropped.
  MultiIndex(std::initializer_list<std::pair<VarIndex, Exponent>> entries);
  explicit MultiIndex(std::span<const std::pair<VarIndex, Exponent>> entries);

  // Dense exponent vector, entry j is the exponent of variable j.
  static MultiIndex from_dense(std::span<const Exponent> exponents);

  std::span<const Entry> entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  // |alpha|
  std::uint64_t degree() const;
  // Number of distinct variables with a nonzero exponent.
  std::size_t vars() const { return entries_.size(); }
  // Exponent of `var`, zero when absent.
  Exponent exponent(VarIndex var) const;
  // One past the largest variable index, 0 for the empty index.
  VarIndex span_end() const { return entries_.empty() ? 0 : entries_.back().var + 1; }

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  void canonicalize();

  std::vector<Entry> entries_;
};

inline std::uint64_t degree(const MultiIndex& alpha) { return alpha.degree(); }
inline std::size_t vars(const MultiIndex& alpha) { return alpha.vars(); }

}  // namespace bhlab
