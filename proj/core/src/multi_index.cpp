#include "bhlab/multi_index.hpp"

#include <algorithm>
#include <sstream>

namespace bhlab {

MultiIndex::MultiIndex(std::initializer_list<std::pair<VarIndex, Exponent>> entries)
    : MultiIndex(std::span<const std::pair<VarIndex, Exponent>>(entries.begin(), entries.size())) {}

MultiIndex::MultiIndex(std::span<const std::pair<VarIndex, Exponent>> entries) {
  entries_.reserve(entries.size());
  for (const auto& [var, exp] : entries) entries_.push_back({var, exp});
  canonicalize();
}

MultiIndex MultiIndex::from_dense(std::span<const Exponent> exponents) {
  MultiIndex out;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] != 0) out.entries_.push_back({static_cast<VarIndex>(j), exponents[j]});
  }
  return out;
}

void MultiIndex::canonicalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.var < b.var; });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (const Entry& e : entries_) {
    if (!merged.empty() && merged.back().var == e.var) {
      merged.back().exp += e.exp;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.exp == 0; });
  entries_ = std::move(merged);
}

std::uint64_t MultiIndex::degree() const {
  std::uint64_t total = 0;
  for (const Entry& e : entries_) total += e.exp;
  return total;
}

Exponent MultiIndex::exponent(VarIndex var) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), var,
                             [](const Entry& e, VarIndex v) { return e.var < v; });
  return (it != entries_.end() && it->var == var) ? it->exp : 0;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i].var << ':' << entries_[i].exp;
  }
  os << '}';
  return os.str();
}

}  // namespace bhlab
