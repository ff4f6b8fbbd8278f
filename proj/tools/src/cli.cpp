#include "bhlab/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhlab/bhlab.hpp"
#include "bhlab/parallel.hpp"

namespace bhlab::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string m_text;
  unsigned M = 0;
  std::string n_text;
  double q = 1.0;
  double beta1 = 1.0;
  std::optional<std::uint64_t> seed;
  unsigned budget = 64;
  unsigned climb_steps = 64;
  unsigned threads = 0;
  std::string format = "csv";
  std::string out_dir;
  double tolerance = kExactTolerance;
  double optimizer_tolerance = kOptimizerTolerance;
  std::string input;
  std::string generate;
  unsigned count = 1;
  double density = 0.5;
  std::string steps;
  std::string timestamp;
  SearchConfig search;
};

unsigned parse_uint(const std::string& text) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a nonnegative integer: '" + text + "'");
  }
  return value;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  const char* env = std::getenv("BHLAB_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t value = 0;
  const std::string text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("BHLAB_SEED is not an unsigned integer: '" + text + "'");
  }
  return value;
}

// Fixed unless supplied, so reruns reproduce byte-identical files.
std::string resolve_timestamp(const Options& o) {
  if (!o.timestamp.empty()) return o.timestamp;
  const char* epoch = std::getenv("SOURCE_DATE_EPOCH");
  if (epoch == nullptr || *epoch == '\0') return "unspecified";
  std::time_t t = 0;
  try {
    t = static_cast<std::time_t>(std::stoll(epoch));
  } catch (const std::exception&) {
    throw UsageError(std::string("SOURCE_DATE_EPOCH is not an integer: '") + epoch + "'");
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& command, json parameters, std::uint64_t seed,
                   const Options& o) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"seed", seed},
          {"tool-version", BHLAB_VERSION},
          {"timestamp", resolve_timestamp(o)}};
}

json search_parameters(const SearchConfig& cfg) {
  return {{"starts", cfg.starts},
          {"max_iters", cfg.max_iters},
          {"step_tolerance", cfg.step_tolerance},
          {"grid_resolution", cfg.grid_resolution},
          {"max_grid_points", cfg.max_grid_points}};
}

// Writes to `out` or to DIR/name when --out is set.
void emit(const Options& o, const std::string& name, const std::string& content, std::ostream& out) {
  if (o.out_dir.empty()) {
    out << content;
    return;
  }
  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path.string());
  file << content;
  out << "wrote " << path.string() << '\n';
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  const auto values = parse_uint_list(text);
  const bool contiguous = text.find(',') == std::string::npos;
  if (!contiguous) throw UsageError("--m must be a single value or a range a..b");
  return {values.front(), values.back()};
}

unsigned single_value(const std::string& text, const char* flag) {
  const auto values = parse_uint_list(text);
  if (values.size() != 1) throw UsageError(std::string(flag) + " takes a single value");
  return values.front();
}

SearchConfig search_config(const Options& o, std::uint64_t seed) {
  SearchConfig cfg = o.search;
  cfg.seed = seed;
  cfg.threads = o.threads;
  cfg.validate();
  return cfg;
}

void require_format(const Options& o) {
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
}

std::string csv_with_manifest(const json& manifest, const std::string& body) {
  return "# manifest " + manifest.dump() + "\n" + body;
}

int cmd_constants(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o);
  const auto [first, last] = parse_range(o.m_text);
  const BetaConfig beta{o.beta1, 1.0};
  const auto table = constant_table(o.M, first, last, beta, o.threads);
  const auto summary = summarize_crossover(table);
  const json manifest = make_manifest(
      "constants", {{"M", o.M}, {"m", o.m_text}, {"beta1", o.beta1}, {"format", o.format}},
      resolve_seed(o), o);
  const json summary_json = {{"crossover_found", summary.found},
                             {"crossover_m", summary.crossover_m},
                             {"argmax_m", summary.argmax_m},
                             {"max_kappa_chain", summary.max_kappa_chain}};
  const std::string stem = "constants_M" + std::to_string(o.M);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : table) rows.push_back(to_json(r));
    emit(o, stem + ".json",
         json{{"manifest", manifest}, {"rows", rows}, {"summary", summary_json}}.dump(2) + "\n", out);
  } else {
    std::ostringstream body;
    body << constant_csv_header() << '\n';
    for (const auto& r : table) body << to_csv_row(r) << '\n';
    body << "# summary " << summary_json.dump() << '\n';
    emit(o, stem + ".csv", csv_with_manifest(manifest, body.str()), out);
  }
  err << "constants: " << table.size() << " rows, crossover "
      << (summary.found ? "at m=" + std::to_string(summary.crossover_m) : std::string("not found"))
      << '\n';
  return kExitOk;
}

int cmd_stirling(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o);
  const auto ms = parse_uint_list(o.m_text);
  const double limit = std::pow(static_cast<double>(o.M), static_cast<double>(o.M));
  json rows = json::array();
  std::ostringstream body;
  body << "m,M,ratio,limit,relative_gap\n";
  for (unsigned m : ms) {
    const double ratio = stirling_ratio(m, o.M);
    const double gap = std::abs(ratio - limit) / limit;
    rows.push_back({{"m", m}, {"M", o.M}, {"ratio", ratio}, {"limit", limit}, {"relative_gap", gap}});
    body << m << ',' << o.M << ',' << format_double(ratio) << ',' << format_double(limit) << ','
         << format_double(gap) << '\n';
  }
  const json manifest = make_manifest("stirling", {{"M", o.M}, {"m", o.m_text}, {"format", o.format}},
                                      resolve_seed(o), o);
  const std::string stem = "stirling_M" + std::to_string(o.M);
  if (o.format == "json") {
    emit(o, stem + ".json", json{{"manifest", manifest}, {"rows", rows}}.dump(2) + "\n", out);
  } else {
    emit(o, stem + ".csv", csv_with_manifest(manifest, body.str()), out);
  }
  err << "stirling: " << ms.size() << " rows\n";
  return kExitOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Batch {
  std::vector<HomogeneousPolynomial> polys;
  json parameters;
};

// Polynomials from --input or from --generate; polynomial k of a generated
// batch uses derive_seed(seed, k).
Batch load_batch(const Options& o, std::uint64_t seed) {
  Batch b;
  b.parameters = {{"M", o.M}, {"beta1", o.beta1}};
  if (!o.input.empty() && !o.generate.empty()) {
    throw UsageError("--input and --generate are mutually exclusive");
  }
  if (!o.input.empty()) {
    b.polys = parse_polynomials(read_file(o.input));
    b.parameters["input"] = o.input;
    return b;
  }
  if (o.generate.empty()) throw UsageError("one of --input or --generate is required");
  const CoefficientKind kind = parse_coefficient_kind(o.generate);
  if (o.m_text.empty() || o.n_text.empty()) throw UsageError("--generate needs --m and --n");
  const unsigned m = single_value(o.m_text, "--m");
  const unsigned n = single_value(o.n_text, "--n");
  b.polys.reserve(o.count);
  for (unsigned k = 0; k < o.count; ++k) {
    b.polys.push_back(random_polynomial(kind, m, o.M, n, o.density, derive_seed(seed, k)));
  }
  b.parameters.update({{"generate", o.generate}, {"m", m}, {"n", n}, {"count", o.count}});
  if (kind == CoefficientKind::sparse_lambda) b.parameters["density"] = o.density;
  return b;
}

StepSelection parse_steps(const std::string& text) {
  if (text.empty() || text == "all") return {};
  StepSelection sel;
  sel.steps.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) sel.steps.push_back(parse_step_id(item));
  return sel;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(o);
  const Batch batch = load_batch(o, seed);
  const StepSelection selection = parse_steps(o.steps);
  SearchConfig cfg = search_config(o, seed);
  const unsigned outer = resolve_threads(cfg.threads);
  cfg.threads = 1;
  const BetaConfig beta{o.beta1, 1.0};
  const StepTolerances tol{o.tolerance, o.optimizer_tolerance};

  std::vector<std::vector<StepReport>> reports(batch.polys.size());
  parallel_for(batch.polys.size(), outer, [&](std::size_t k) {
    reports[k] = verify_polynomial(batch.polys[k], o.M, selection, cfg, beta, tol);
  });

  json params = batch.parameters;
  params["steps"] = o.steps.empty() ? "all" : o.steps;
  params["tolerance"] = o.tolerance;
  params["optimizer_tolerance"] = o.optimizer_tolerance;
  params["search"] = search_parameters(cfg);
  std::ostringstream body;
  body << json{{"manifest", make_manifest("verify", params, seed, o)}}.dump() << '\n';
  std::size_t failed = 0, total = 0;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    for (const auto& r : reports[k]) {
      json line = to_json(r);
      line["polynomial"] = k;
      line["seed"] = seed;
      line["beta1"] = o.beta1;
      body << line.dump() << '\n';
      ++total;
      if (!r.passed) ++failed;
    }
  }
  emit(o, "verify.jsonl", body.str(), out);
  err << "verify: " << batch.polys.size() << " polynomials, " << total << " reports, " << failed
      << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(o);
  const Batch batch = load_batch(o, seed);
  SearchConfig cfg = search_config(o, seed);
  const unsigned outer = resolve_threads(cfg.threads);
  cfg.threads = 1;
  const BetaConfig beta{o.beta1, 1.0};

  std::vector<Certificate> certs(batch.polys.size());
  parallel_for(batch.polys.size(), outer, [&](std::size_t k) {
    certs[k] = certify_theorem_instance(batch.polys[k], o.M, cfg, beta);
  });

  json params = batch.parameters;
  params["search"] = search_parameters(cfg);
  std::ostringstream body;
  body << json{{"manifest", make_manifest("certify", params, seed, o)}}.dump() << '\n';
  std::size_t failed = 0;
  for (std::size_t k = 0; k < certs.size(); ++k) {
    json line = to_json(certs[k]);
    line["polynomial"] = k;
    line["seed"] = seed;
    line["beta1"] = o.beta1;
    body << line.dump() << '\n';
    if (!certs[k].passed) ++failed;
  }
  emit(o, "certify.jsonl", body.str(), out);
  err << "certify: " << certs.size() << " instances, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

void require_q(double q) {
  if (!(q >= 1.0)) throw UsageError("--q must be >= 1");
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  require_q(o.q);
  const std::uint64_t seed = resolve_seed(o);
  const unsigned m = single_value(o.m_text, "--m");
  const unsigned n = o.n_text.empty() ? 4 : single_value(o.n_text, "--n");
  const SearchConfig cfg = search_config(o, seed);
  const ConstantSearch req{m, o.M, n, o.q, o.budget, o.climb_steps, seed};
  const RatioWitness w = search_constant_lower_bound(req, cfg);
  const json params = {{"m", m},           {"M", o.M},
                       {"n", n},           {"q", o.q},
                       {"budget", o.budget}, {"climb_steps", o.climb_steps},
                       {"search", search_parameters(cfg)}};
  const json doc = {{"manifest", make_manifest("search", params, seed, o)}, {"witness", to_json(w)}};
  emit(o, "search.json", doc.dump(2) + "\n", out);
  err << "search: ratio in [" << format_double(w.ratio_lower) << ", "
      << format_double(w.ratio_upper) << "] from " << w.provenance << '\n';
  return kExitOk;
}

int cmd_probe(const Options& o, std::ostream& out, std::ostream& err) {
  require_q(o.q);
  require_format(o);
  const std::uint64_t seed = resolve_seed(o);
  const unsigned m = o.m_text.empty() ? std::max(2u, o.M) : single_value(o.m_text, "--m");
  if (o.n_text.empty()) throw UsageError("--n is required");
  const auto ns = parse_uint_list(o.n_text);
  const SearchConfig cfg = search_config(o, seed);
  const ProbeResult result = exponent_probe(o.M, o.q, ns, m, o.budget, seed, cfg, o.climb_steps);
  const json params = {{"m", m},           {"M", o.M},
                       {"n", o.n_text},    {"q", o.q},
                       {"budget", o.budget}, {"climb_steps", o.climb_steps},
                       {"format", o.format}, {"search", search_parameters(cfg)}};
  const json manifest = make_manifest("probe", params, seed, o);
  const std::string stem = "probe_M" + std::to_string(o.M);
  if (o.format == "json") {
    emit(o, stem + ".json", json{{"manifest", manifest}, {"probe", to_json(result)}}.dump(2) + "\n", out);
  } else {
    std::ostringstream body;
    body << "n,ratio_lower,ratio_upper,provenance\n";
    for (const auto& row : result.rows) {
      body << row.n << ',' << format_double(row.ratio_lower) << ',' << format_double(row.ratio_upper)
           << ',' << row.provenance << '\n';
    }
    body << "# trend " << result.trend << " monotone_increasing="
         << (result.monotone_increasing ? "true" : "false") << '\n';
    emit(o, stem + ".csv", csv_with_manifest(manifest, body.str()), out);
  }
  err << "probe: trend " << result.trend << '\n';
  return kExitOk;
}

void add_search_flags(CLI::App* app, Options& o) {
  app->add_option("--starts", o.search.starts, "Multistart count for the phase ascent")
      ->capture_default_str();
  app->add_option("--max-iters", o.search.max_iters, "Sweeps per start")->capture_default_str();
  app->add_option("--step-tolerance", o.search.step_tolerance, "Sweep improvement threshold")
      ->capture_default_str();
  app->add_option("--grid-resolution", o.search.grid_resolution, "Phase grid points per variable")
      ->capture_default_str();
  app->add_option("--max-grid-points", o.search.max_grid_points, "Cap on certified grid size")
      ->capture_default_str();
}

void add_common_flags(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "Seed (falls back to BHLAB_SEED, then 0)");
  app->add_option("--threads", o.threads, "Worker threads (0 = all available)")
      ->capture_default_str();
  app->add_option("--out", o.out_dir, "Write output files into DIR instead of stdout");
  app->add_option("--timestamp", o.timestamp,
                  "Manifest timestamp (default: SOURCE_DATE_EPOCH or 'unspecified')");
}

}  // namespace

std::vector<unsigned> parse_uint_list(const std::string& text) {
  std::vector<unsigned> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const unsigned a = parse_uint(text.substr(0, dots));
    const unsigned b = parse_uint(text.substr(dots + 2));
    if (a > b) throw std::invalid_argument("empty range '" + text + "'");
    for (unsigned v = a;; ++v) {
      out.push_back(v);
      if (v == b) break;
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_uint(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical lab for uniform Bohnenblust-Hille constants", "bhlab"};
  app.set_version_flag("--version", BHLAB_VERSION);
  app.require_subcommand(1);
  Options o;

  auto* constants = app.add_subcommand("constants", "Proof-chain constant table and crossover");
  constants->add_option("--M", o.M, "Number of variables per monomial")->required();
  constants->add_option("--m", o.m_text, "Degree or range a..b")->required();
  constants->add_option("--beta1", o.beta1, "Leading constant of the BH bound")->capture_default_str();
  constants->add_option("--format", o.format, "csv or json")->capture_default_str();
  add_common_flags(constants, o);

  auto* stirling = app.add_subcommand("stirling", "Convergence of the multinomial ratio to M^M");
  stirling->add_option("--M", o.M, "Block count")->required();
  stirling->add_option("--m", o.m_text, "Degrees: a..b or a,b,c")->required();
  stirling->add_option("--format", o.format, "csv or json")->capture_default_str();
  add_common_flags(stirling, o);

  auto* verify = app.add_subcommand("verify", "Check each step inequality on concrete polynomials");
  auto* certify = app.add_subcommand("certify", "Check the uniform bound on concrete polynomials");
  for (auto* sub : {verify, certify}) {
    sub->add_option("--M", o.M, "Variables per monomial")->required();
    sub->add_option("--input", o.input, "Polynomial JSON file (object or array)");
    sub->add_option("--generate", o.generate, "steinhaus, gaussian or sparse-lambda");
    sub->add_option("--m", o.m_text, "Degree for --generate");
    sub->add_option("--n", o.n_text, "Variable count for --generate");
    sub->add_option("--count", o.count, "Polynomials to generate")->capture_default_str();
    sub->add_option("--density", o.density, "Support density for sparse-lambda")
        ->capture_default_str();
    sub->add_option("--beta1", o.beta1, "Leading constant of the BH bound")->capture_default_str();
    add_search_flags(sub, o);
    add_common_flags(sub, o);
  }
  verify->add_option("--steps", o.steps,
                     "Comma list of expansion,des1,l2-mmp,holder,polarization,pre-interpolation,final");
  verify->add_option("--tolerance", o.tolerance, "Relative slack for exact steps")
      ->capture_default_str();
  verify->add_option("--optimizer-tolerance", o.optimizer_tolerance,
                     "Relative slack for optimizer-coupled steps")
      ->capture_default_str();

  auto* search = app.add_subcommand("search", "Lower bound on the optimal constant by search");
  auto* probe = app.add_subcommand("probe", "Growth of the searched constant in n");
  for (auto* sub : {search, probe}) {
    sub->add_option("--M", o.M, "Variables per monomial")->required();
    sub->add_option("--q", o.q, "Coefficient exponent (>= 1)")->capture_default_str();
    sub->add_option("--budget", o.budget, "Random candidates")->capture_default_str();
    sub->add_option("--climb-steps", o.climb_steps, "Hill-climbing moves")->capture_default_str();
    add_search_flags(sub, o);
    add_common_flags(sub, o);
  }
  search->add_option("--m", o.m_text, "Degree")->required();
  search->add_option("--n", o.n_text, "Variable count (default 4)");
  probe->add_option("--m", o.m_text, "Degree (default max(2, M))");
  probe->add_option("--n", o.n_text, "Variable counts: a..b or a,b,c")->required();
  probe->add_option("--format", o.format, "csv or json")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (constants->parsed()) return cmd_constants(o, out, err);
    if (stirling->parsed()) return cmd_stirling(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (certify->parsed()) return cmd_certify(o, out, err);
    if (search->parsed()) return cmd_search(o, out, err);
    if (probe->parsed()) return cmd_probe(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bhlab::cli
