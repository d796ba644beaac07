#include "cli.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "semirandom/montecarlo.hpp"
#include "semirandom/oracle/appendix.hpp"
#include "semirandom/oracle/expectation.hpp"
#include "semirandom/oracle/hit_dp.hpp"
#include "semirandom/oracle/phi.hpp"
#include "semirandom/threshold.hpp"

namespace semirandom::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string out;
  std::string format = "json";
};

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(what + ": invalid JSON (" + e.what() + ")");
  }
}

json load_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw ParameterError(what + ": cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), what + " '" + path + "'");
}

// Writes to a temporary file next to `path`, then renames it into place.
void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
    os << text;
    os.flush();
    if (!os) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename output into '" + path + "'");
  }
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_atomic(g.out, text);
  }
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

// key,value rows from a JSON document, keys as JSON pointers.
void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix + "/" + it.key(), os);
  } else if (j.is_array() && !j.empty() && !j.front().is_number()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "/" + std::to_string(i), os);
  } else if (j.is_array()) {
    std::string cell;
    for (std::size_t i = 0; i < j.size(); ++i) cell += (i ? ";" : "") + j[i].dump();
    os << csv_cell(prefix) << ',' << csv_cell(json(cell)) << '\n';
  } else {
    os << csv_cell(prefix) << ',' << csv_cell(j) << '\n';
  }
}

std::string render(const Globals& g, const json& doc) {
  if (g.format == "json") return doc.dump(2) + "\n";
  std::ostringstream os;
  os << "key,value\n";
  flatten(doc, "", os);
  return os.str();
}

std::uint64_t require_seed(const Globals& g, const std::optional<std::uint64_t>& from_config) {
  if (g.seed) return *g.seed;
  if (from_config) return *from_config;
  throw ParameterError("field 'seed' is required (pass --seed or set it in the config)");
}

ExperimentConfig load_experiment(const std::string& path, const Globals& g) {
  ExperimentConfig cfg = experiment_from_json(load_json_file(path, "config"));
  cfg.seed = require_seed(g, cfg.seed);
  return cfg;
}

std::string points_output(const Globals& g, const std::vector<PointResult>& pts, const ExperimentConfig& cfg,
                          const std::optional<Fit>& fit) {
  if (g.format == "csv") {
    std::ostringstream os;
    write_points_csv(os, pts);
    return os.str();
  }
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  json doc = {{"config", experiment_to_json(cfg)}, {"points", arr}};
  if (fit) doc["fit"] = fit_to_json(*fit);
  return doc.dump(2) + "\n";
}

Rational parse_probability(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos)
      return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    // Decimal input: exact value of the decimal string.
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
    return make_rational(BigInt(digits), den);
  } catch (const std::exception&) {
    throw ParameterError("field 'p' must be a fraction a/b or a decimal");
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* field) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError(std::string("field '") + field + "' must be a comma-separated list of integers");
    }
  }
  if (out.empty()) throw ParameterError(std::string("field '") + field + "' is empty");
  return out;
}

TargetSpec target_from_flag(const std::string& text) { return target_from_json(parse_json_text(text, "target")); }

}  // namespace

int dispatch(int argc, char** argv) {
  CLI::App app{"Semi-random hypergraph process toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::uint64_t seed_flag = 0;
  unsigned threads_flag = 0;
  auto* seed_opt = app.add_option("--seed", seed_flag, "Master seed");
  auto* threads_opt = app.add_option("--threads", threads_flag, "Worker threads (default: SEMIRANDOM_THREADS, then all cores)");
  app.add_option("--out", g.out, "Output path (default: stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* analyze = app.add_subcommand("analyze", "Threshold bounds for a target");
  std::string target_text, config_path;
  int r = 0;
  analyze->add_option("--target", target_text, "Target as JSON");
  analyze->add_option("--config", config_path, "JSON file with 'target' and 'r'");
  analyze->add_option("--r", r, "Size of the random set");

  auto* simulate = app.add_subcommand("simulate", "Estimate success probabilities on the config grid");
  std::string trace_path;
  std::uint64_t trace_trial = 0;
  simulate->add_option("--config", config_path, "Experiment config")->required();
  simulate->add_option("--trace", trace_path, "Write the trace of one trial at the first grid point");
  simulate->add_option("--trial", trace_trial, "Trial index for --trace");

  auto* sweep = app.add_subcommand("sweep", "Estimate the grid and fit the threshold exponent");
  sweep->add_option("--config", config_path, "Experiment config")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite, ranges_text;
  std::vector<std::string> claims;
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember({"appendix"}));
  verify->add_option("--ranges", ranges_text, "Range overrides as JSON");
  verify->add_option("--claim", claims, "Run only these claims");

  auto* oracle = app.add_subcommand("oracle", "Exact reference computations");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  Vertex n = 0;
  std::uint64_t t = 0, trials = 0;
  std::string mult_text, mode = "auto", p_text, strategy_text;
  int s = 0, k_min = 0, k_max = 0;

  auto* hit = oracle->add_subcommand("hit", "Probability that t draws hit fixed r-sets with given multiplicities");
  hit->add_option("--mult", mult_text, "Multiplicities, comma-separated")->required();
  hit->add_option("--n", n)->required();
  hit->add_option("--r", r)->required();
  hit->add_option("--t", t)->required();
  hit->add_option("--mode", mode)->check(CLI::IsMember({"auto", "exact", "floating"}));

  auto* phi = oracle->add_subcommand("phi", "Minimum of n^v p^e over sub-hypergraphs");
  phi->add_option("--target", target_text)->required();
  phi->add_option("--n", n)->required();
  phi->add_option("--p", p_text, "Probability as a/b or decimal")->required();

  auto* counting = oracle->add_subcommand("counting", "Dense k-set counts against the counting bound");
  counting->add_option("--target", target_text)->required();
  counting->add_option("--r", r)->required();
  counting->add_option("--strategy", strategy_text, "Strategy name or JSON")->required();
  counting->add_option("--n", n)->required();
  counting->add_option("--t", t)->required();
  counting->add_option("--trials", trials)->required();

  auto* level = oracle->add_subcommand("level", "Smallest admissible split level for cliques");
  level->add_option("--r", r)->required();
  level->add_option("--s", s)->required();
  level->add_option("--k-min", k_min)->required();
  level->add_option("--k-max", k_max)->required();

  auto* dup = oracle->add_subcommand("duplicates", "Repeated random r-sets among t draws");
  dup->add_option("--n", n)->required();
  dup->add_option("--r", r)->required();
  dup->add_option("--t", t)->required();
  dup->add_option("--trials", trials)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (*seed_opt) g.seed = seed_flag;
  if (*threads_opt) g.threads = threads_flag;

  try {
    const unsigned threads = resolve_threads(g.threads);
    if (analyze->parsed()) {
      TargetSpec target;
      if (!config_path.empty()) {
        json j = load_json_file(config_path, "config");
        if (!j.contains("target")) throw ParameterError("config: missing field 'target'");
        target = target_from_json(j.at("target"));
        if (j.contains("r") && r == 0) r = detail::int_field(j, "r", "config");
      } else if (!target_text.empty()) {
        target = target_from_flag(target_text);
      } else {
        throw ParameterError("analyze: field 'target' is required (--target or --config)");
      }
      if (r == 0) throw ParameterError("analyze: field 'r' is required");
      auto h = build_target(target);
      json doc = {{"target", target_to_json(target)}, {"report", report_to_json(threshold_report(h, r))}};
      emit(g, render(g, doc));
    } else if (simulate->parsed()) {
      auto cfg = load_experiment(config_path, g);
      std::vector<PointResult> pts;
      for (Vertex nn : cfg.n)
        for (std::uint64_t tt : cfg.t.grid(nn)) pts.push_back(estimate_success(cfg, nn, tt, threads));
      if (!trace_path.empty()) {
        const Vertex nn = cfg.n.front();
        const auto grid = cfg.t.grid(nn);
        if (grid.empty()) throw ParameterError("config: field 't' is empty");
        auto target = build_target(cfg.target);
        auto strategy = make_strategy_factory(cfg.strategy, cfg.target, cfg.r)();
        RunOptions opt;
        opt.record_trace = true;
        opt.full_verification = cfg.full_verification;
        opt.check_interval = cfg.check_interval;
        auto outcome = run({nn, cfg.r, target.uniformity(), grid.front()}, *strategy, target, *cfg.seed, trace_trial, opt);
        std::ostringstream os;
        write_trace_csv(os, outcome.trace);
        write_atomic(trace_path, os.str());
      }
      emit(g, points_output(g, pts, cfg, std::nullopt));
    } else if (sweep->parsed()) {
      auto cfg = load_experiment(config_path, g);
      auto res = sweep_and_fit(cfg, threads);
      emit(g, points_output(g, res.points, cfg, res.fit));
      if (g.format == "csv" && !g.out.empty()) write_atomic(g.out + ".fit.json", fit_to_json(res.fit).dump(2) + "\n");
    } else if (verify->parsed()) {
      json ranges = ranges_text.empty() ? json(nullptr) : parse_json_text(ranges_text, "ranges");
      auto rg = appendix_ranges_from_json(ranges);
      auto rep = claims.empty() ? verify_appendix(rg) : verify_appendix(rg, claims);
      emit(g, render(g, appendix_report_to_json(rep)));
      return rep.all_pass() ? 0 : 5;
    } else if (hit->parsed()) {
      auto mult = parse_int_list(mult_text, "mult");
      DpMode m = mode == "exact" ? DpMode::exact : mode == "floating" ? DpMode::floating : DpMode::automatic;
      auto h = exact_hit_probability(mult, n, r, t, m);
      json doc = hit_probability_to_json(h);
      doc["asymptotic"] = asymptotic_hit_probability(mult, n, r, t);
      doc["ratio"] = doc["asymptotic"].get<double>() > 0 ? h.value / doc["asymptotic"].get<double>() : 0.0;
      emit(g, render(g, doc));
    } else if (phi->parsed()) {
      auto f = build_target(target_from_flag(target_text));
      auto res = phi_F(f, n, parse_probability(p_text));
      json doc = {{"log_value", static_cast<double>(res.log_value)}, {"v", res.v}, {"e", res.e},
                  {"argmin_vertices", res.argmin.vertices}};
      emit(g, render(g, doc));
    } else if (counting->parsed()) {
      const std::uint64_t seed = require_seed(g, std::nullopt);
      auto target = target_from_flag(target_text);
      json strategy = strategy_text.find('{') == std::string::npos ? json(strategy_text)
                                                                    : parse_json_text(strategy_text, "strategy");
      auto factory = make_strategy_factory(strategy, target, r);
      auto rep = expectation_bound_check(build_target(target), r, factory, n, t, trials, seed, threads);
      emit(g, render(g, expectation_to_json(rep)));
    } else if (level->parsed()) {
      if (k_min > k_max) throw ParameterError("level: field 'k-min' exceeds 'k-max'");
      json rows = json::array();
      for (long long k = k_min; k <= k_max; ++k) {
        long long l = clique_split_level(r, s, k);
        json row = {{"k", k}, {"level", l}, {"upper_exponent", rational_to_json(clique_upper_exponent(r, s, k, l))}};
        if (r == 2 && s == 3) row["closed_form"] = split_level_closed_form(k);
        rows.push_back(row);
      }
      emit(g, render(g, json{{"r", r}, {"s", s}, {"levels", rows}}));
    } else if (dup->parsed()) {
      const std::uint64_t seed = require_seed(g, std::nullopt);
      auto rep = duplicate_rate_check(n, r, t, trials, seed);
      emit(g, render(g, json{{"n", n}, {"r", r}, {"t", t}, {"trials", trials}, {"mean", rep.mean}, {"bound", rep.bound}}));
    }
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const StrategyContractViolation& e) {
    std::cerr << "strategy contract violation (trial " << e.trial() << "): " << e.what() << '\n';
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}

}  // namespace semirandom::cli
