#pragma once

// Brute-force reference computations, kept independent of the library's
// enumeration and evaluation paths.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Dense = std::vector<unsigned>;

inline Big fact(unsigned n) {
  Big r = 1;
  for (unsigned k = 1; k <= n; ++k) r *= k;
  return r;
}

// Every exponent vector in [0, m]^n, filtered to |alpha| = m and at most M nonzeros.
inline std::set<Dense> lambda(unsigned m, unsigned M, unsigned n) {
  std::set<Dense> out;
  Dense v(n, 0);
  while (true) {
    unsigned sum = 0, nz = 0;
    for (unsigned x : v) {
      sum += x;
      nz += x != 0;
    }
    if (sum == m && nz <= M) out.insert(v);
    unsigned k = 0;
    for (; k < n; ++k) {
      if (++v[k] <= m) break;
      v[k] = 0;
    }
    if (k == n) break;
  }
  return out;
}

// All tuples in [0, m]^M summing to m, collected then sorted lexicographically.
inline std::vector<Dense> compositions(unsigned m, unsigned M) {
  std::set<Dense> out = lambda(m, M, M);
  return {out.begin(), out.end()};
}

inline Big multinomial(const Dense& alpha) {
  unsigned m = 0;
  Big denom = 1;
  for (unsigned a : alpha) {
    m += a;
    denom *= fact(a);
  }
  return fact(m) / denom;
}

// Symmetric multilinear form by the full tensor sum
//   sum_{i_1..i_m} a(i) prod_k x_k(i_k),  a(i) = c_alpha(i) * prod alpha_j! / m!
// with coefficients given densely.
inline std::complex<double> tensor_form(
    const std::map<Dense, std::complex<double>>& coeffs, unsigned m, unsigned n,
    const std::vector<std::vector<std::complex<double>>>& x) {
  std::complex<double> total{};
  std::vector<unsigned> idx(m, 0);
  const double mfact = static_cast<double>(fact(m));
  while (true) {
    Dense alpha(n, 0);
    std::complex<double> prod{1.0, 0.0};
    for (unsigned k = 0; k < m; ++k) {
      ++alpha[idx[k]];
      prod *= x[k][idx[k]];
    }
    auto it = coeffs.find(alpha);
    if (it != coeffs.end()) {
      double weight = 1.0;
      for (unsigned a : alpha) weight *= static_cast<double>(fact(a));
      total += it->second * weight / mfact * prod;
    }
    unsigned k = 0;
    for (; k < m; ++k) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
    if (k == m) break;
  }
  return total;
}

}  // namespace oracle
