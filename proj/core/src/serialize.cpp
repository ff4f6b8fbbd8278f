#include "bhlab/serialize.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace bhlab {

using nlohmann::json;

namespace {

json number_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

json to_json(const HomogeneousPolynomial& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.coefficients()) {
    json a = json::object();
    for (const auto& e : alpha.entries()) a[std::to_string(e.var)] = e.exp;
    terms.push_back({{"alpha", a}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"m", p.degree()}, {"n", p.num_vars()}, {"terms", terms}};
}

HomogeneousPolynomial polynomial_from_json(const json& j) {
  const auto m = require<long long>(j, "m");
  const auto n = require<long long>(j, "n");
  if (m < 1 || n < 1) throw FormatError("polynomial needs m >= 1 and n >= 1");
  if (!j.contains("terms") || !j.at("terms").is_array()) {
    throw FormatError("field 'terms' must be an array");
  }
  std::vector<HomogeneousPolynomial::Term> terms;
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("alpha") || !t.at("alpha").is_object()) {
      throw FormatError("term needs an 'alpha' object");
    }
    std::vector<std::pair<VarIndex, Exponent>> entries;
    for (const auto& [key, value] : t.at("alpha").items()) {
      VarIndex var = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), var);
      if (ec != std::errc{} || ptr != key.data() + key.size()) {
        throw FormatError("alpha key '" + key + "' is not a variable index");
      }
      if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw FormatError("alpha exponent for variable " + key + " must be a nonnegative integer");
      }
      entries.emplace_back(var, value.get<Exponent>());
    }
    const double re = require<double>(t, "re");
    const double im = t.contains("im") ? require<double>(t, "im") : 0.0;
    terms.emplace_back(MultiIndex(std::span<const std::pair<VarIndex, Exponent>>(entries)),
                       Complex{re, im});
  }
  try {
    return HomogeneousPolynomial(static_cast<unsigned>(m), static_cast<std::size_t>(n), terms);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::vector<HomogeneousPolynomial> parse_polynomials(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  std::vector<HomogeneousPolynomial> out;
  if (doc.is_array()) {
    for (const json& item : doc) out.push_back(polynomial_from_json(item));
  } else {
    out.push_back(polynomial_from_json(doc));
  }
  return out;
}

json to_json(const NormEstimate& est) {
  return {{"lower", est.lower},
          {"upper", number_or_null(est.upper)},
          {"method", to_string(est.method)},
          {"evaluations", est.evaluations},
          {"converged", est.converged},
          {"witness", est.witness}};
}

NormEstimate norm_estimate_from_json(const json& j) {
  NormEstimate est;
  est.lower = require<double>(j, "lower");
  est.upper = j.contains("upper") && !j.at("upper").is_null()
                  ? require<double>(j, "upper")
                  : std::numeric_limits<double>::infinity();
  try {
    est.method = parse_norm_method(require<std::string>(j, "method"));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  est.evaluations = require<std::uint64_t>(j, "evaluations");
  est.converged = require<bool>(j, "converged");
  est.witness = require<std::vector<double>>(j, "witness");
  return est;
}

json to_json(const StepReport& r) {
  json j = {{"step", to_string(r.step)},
            {"lhs", number_or_null(r.lhs)},
            {"rhs", number_or_null(r.rhs)},
            {"slack", number_or_null(r.slack)},
            {"tolerance", r.tolerance},
            {"passed", r.passed}};
  if (!std::isnan(r.rhs_at_lower)) j["rhs_at_lower"] = number_or_null(r.rhs_at_lower);
  return j;
}

json to_json(const Certificate& c) {
  return {{"lhs", c.lhs}, {"kappa", c.kappa}, {"norm", to_json(c.norm)}, {"passed", c.passed}};
}

json to_json(const RatioWitness& w) {
  return {{"polynomial", to_json(w.polynomial)},
          {"q", w.q},
          {"lhs", w.lhs},
          {"norm", to_json(w.norm)},
          {"ratio_lower", w.ratio_lower},
          {"ratio_upper", number_or_null(w.ratio_upper)},
          {"provenance", w.provenance}};
}

json to_json(const ConstantReport& r) {
  return {{"m", r.m},
          {"M", r.M},
          {"theta", r.theta},
          {"composition_count", r.composition_count.str()},
          {"stirling_ratio", r.stirling_ratio},
          {"cdsp", r.cdsp},
          {"kappa_chain", r.kappa_chain},
          {"beta1", r.beta1},
          {"cdsp_exceeds_kappa", r.cdsp_exceeds_kappa}};
}

json to_json(const ProbeResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"ratio_lower", row.ratio_lower},
                    {"ratio_upper", number_or_null(row.ratio_upper)},
                    {"provenance", row.provenance}});
  }
  return {{"M", r.M},
          {"m", r.m},
          {"q", r.q},
          {"rows", rows},
          {"monotone_increasing", r.monotone_increasing},
          {"trend", r.trend}};
}

std::string constant_csv_header() {
  return "m,M,theta,composition_count,stirling_ratio,cdsp,kappa_chain,beta1,cdsp_exceeds_kappa";
}

std::string to_csv_row(const ConstantReport& r) {
  std::ostringstream os;
  os << r.m << ',' << r.M << ',' << format_double(r.theta) << ',' << r.composition_count.str()
     << ',' << format_double(r.stirling_ratio) << ',' << format_double(r.cdsp) << ','
     << format_double(r.kappa_chain) << ',' << format_double(r.beta1) << ','
     << (r.cdsp_exceeds_kappa ? "true" : "false");
  return os.str();
}

}  // namespace bhlab
