#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bhlab/polynomial.hpp"

namespace bhlab {

enum class NormMethod { closed_form, multistart_phase, lipschitz_grid, triangle };

const char* to_string(NormMethod method);
// Throws std::invalid_argument on an unknown name.
NormMethod parse_norm_method(const std::string& name);

/// Bracket [lower, upper] for a supremum norm.
///
/// `lower` is |value| at `witness` (phases of a torus point, n of them for
/// ||P||, m*n for the symmetric form). `upper` is never below the true
/// supremum; +infinity means "no upper bound computed".
struct NormEstimate {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  NormMethod method = NormMethod::multistart_phase;
  std::uint64_t evaluations = 0;
  bool converged = false;
  std::vector<double> witness;

  bool has_upper() const { return upper != std::numeric_limits<double>::infinity(); }
  friend bool operator==(const NormEstimate&, const NormEstimate&) = default;
};

struct SearchConfig {
  unsigned starts = 32;
  unsigned max_iters = 200;            // sweeps per start
  double step_tolerance = 1e-10;       // stop when a sweep gains less than this
  unsigned grid_resolution = 64;       // phase grid points per circle
  std::uint64_t seed = 0;
  std::size_t max_grid_points = std::size_t{1} << 22;
  unsigned threads = 1;                // 0 = hardware concurrency; never affects results

  // Throws std::invalid_argument when starts < 1 or grid_resolution < 2.
  void validate() const;
};

// (sum |c_alpha|^q)^(1/q) over the support, or only over alpha with
// vars(alpha) <= support_M when given. Throws std::invalid_argument for q < 1.
double coeff_lq_norm(const HomogeneousPolynomial& p, double q,
                     std::optional<unsigned> support_M = std::nullopt);

// sum |c_alpha|, the triangle-inequality bound on ||P||.
double trivial_upper(const HomogeneousPolynomial& p);

/// Lower bound on ||P|| by multistart cyclic phase ascent on the torus.
///
/// Moduli are fixed at 1: by the maximum modulus principle in each coordinate
/// the supremum over the closed polydisc is reached on the torus.
/// Each coordinate step maximizes |sum_k A_k e^{ik phi}| over one phase with an
/// equispaced scan followed by golden-section refinement. Start 0 is the all-ones
/// point, then Kronecker low-discrepancy starts, then seeded random starts.
/// Polynomials with pairwise variable-disjoint monomials take the closed form
/// sum |c_alpha| (both ends of the bracket).
NormEstimate sup_norm_lower(const HomogeneousPolynomial& p, const SearchConfig& cfg);

/// Certified upper bound on ||P|| from a phase grid.
///
/// One variable's phase is pinned to 0 (|P(e^{it} z)| = |P(z)|); the others run
/// over a grid with spacing 2 pi / res, res <= grid_resolution chosen so the
/// grid fits max_grid_points. With delta = pi / res the bound is
///   max_grid |P| + min( delta * sum_j L_j ,  delta^2 / 2 * sum_alpha |c_alpha| (sum_j alpha_j)^2 )
/// where L_j = sum_alpha alpha_j |c_alpha| bounds |dP/dphi_j| and j runs over the
/// gridded variables. The second term is the curvature bound at an interior
/// maximum. Falls back to sum |c_alpha| when that is smaller.
NormEstimate sup_norm_upper(const HomogeneousPolynomial& p, const SearchConfig& cfg);

// Bracket combining the two: best realized lower bound, certified upper bound.
NormEstimate sup_norm(const HomogeneousPolynomial& p, const SearchConfig& cfg);

/// Lower bound on sup |P^(x_1, ..., x_m)| over torus points x_k in C^n.
///
/// P^ is affine in every single coordinate x_k(j), so each coordinate step is
/// solved exactly (|A + B e^{i phi}| is maximized at |A| + |B|). Start 0 is the
/// basis block with the largest |c_alpha| / binom(m, alpha), start 1 the
/// diagonal all-ones point, the rest are seeded random torus points.
/// Throws std::invalid_argument when m > 8.
NormEstimate multilinear_sup_norm_lower(const HomogeneousPolynomial& p, const SearchConfig& cfg);

inline constexpr unsigned kMultilinearMaxDegree = 8;

}  // namespace bhlab
