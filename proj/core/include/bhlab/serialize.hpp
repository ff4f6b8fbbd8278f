#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhlab/constants.hpp"
#include "bhlab/norms.hpp"
#include "bhlab/polynomial.hpp"
#include "bhlab/verify.hpp"

namespace bhlab {

// Malformed or schema-violating input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"m": int, "n": int, "terms": [{"alpha": {"j": exp, ...}, "re": float, "im": float}]}
nlohmann::json to_json(const HomogeneousPolynomial& p);
HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j);

// Accepts one polynomial object or an array of them. Throws FormatError.
std::vector<HomogeneousPolynomial> parse_polynomials(const std::string& text);

// {"lower", "upper", "method", "evaluations", "converged", "witness"}; an
// infinite upper bound is written as null.
nlohmann::json to_json(const NormEstimate& est);
NormEstimate norm_estimate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StepReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const RatioWitness& w);
nlohmann::json to_json(const ConstantReport& r);
nlohmann::json to_json(const ProbeResult& r);

// CSV columns: m,M,theta,composition_count,stirling_ratio,cdsp,kappa_chain,beta1,cdsp_exceeds_kappa
std::string constant_csv_header();
std::string to_csv_row(const ConstantReport& r);

// Shortest decimal that round-trips the double.
std::string format_double(double x);

}  // namespace bhlab
