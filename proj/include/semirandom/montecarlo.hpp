#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "json.hpp"
#include "semirandom/strategies/registry.hpp"

namespace semirandom {

inline constexpr std::uint64_t kBudgetCap = 100000000;
inline constexpr double kWilsonZ = 1.959963984540054;

struct TRule {
  std::vector<std::uint64_t> explicit_t;
  // t = round(c * n^kappa) for each constant c.
  std::vector<double> constants;
  double kappa = 0;

  std::vector<std::uint64_t> grid(Vertex n) const {
    std::vector<std::uint64_t> out = explicit_t;
    for (double c : constants)
      out.push_back(static_cast<std::uint64_t>(std::llround(c * std::pow(static_cast<double>(n), kappa))));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

struct ExperimentConfig {
  int version = 1;
  TargetSpec target;
  int r = 0;
  nlohmann::json strategy;
  std::vector<Vertex> n;
  TRule t;
  std::uint64_t trials = 0;
  std::optional<std::uint64_t> seed;
  std::string rng = kRngAlgorithm;
  bool full_verification = false;
  std::uint64_t check_interval = 1;
};

namespace detail {

inline std::uint64_t uint_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.at(key).is_number_unsigned() && !(j.at(key).is_number_integer() && j.at(key).get<long long>() >= 0))
    throw ParameterError(where + ": field '" + key + "' must be a non-negative integer");
  return j.at(key).get<std::uint64_t>();
}

}  // namespace detail

inline ExperimentConfig experiment_from_json(const nlohmann::json& j) {
  const std::string where = "config";
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  detail::reject_unknown(j, {"version", "target", "r", "strategy", "n", "t", "trials", "seed", "rng", "verification"},
                         where);
  ExperimentConfig c;
  c.version = detail::int_field(j, "version", where);
  if (c.version != 1) throw ParameterError("config: field 'version' must be 1");
  if (!j.contains("target")) throw ParameterError("config: missing field 'target'");
  c.target = target_from_json(j.at("target"));
  c.r = detail::int_field(j, "r", where);
  if (!j.contains("strategy")) throw ParameterError("config: missing field 'strategy'");
  c.strategy = j.at("strategy");
  if (!j.contains("n") || !j.at("n").is_array() || j.at("n").empty())
    throw ParameterError("config: field 'n' must be a non-empty array");
  for (const auto& v : j.at("n")) {
    if (!v.is_number_integer() || v.get<long long>() < 1) throw ParameterError("config: field 'n' has a non-positive entry");
    c.n.push_back(v.get<Vertex>());
  }
  if (!j.contains("t")) throw ParameterError("config: missing field 't'");
  const auto& t = j.at("t");
  if (t.is_array()) {
    for (const auto& v : t) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw ParameterError("config: field 't' has a negative entry");
      c.t.explicit_t.push_back(v.get<std::uint64_t>());
    }
  } else if (t.is_object()) {
    detail::reject_unknown(t, {"constants", "kappa"}, "config.t");
    if (!t.contains("constants") || !t.at("constants").is_array() || !t.contains("kappa") || !t.at("kappa").is_number())
      throw ParameterError("config.t: needs 'constants' (array) and 'kappa' (number)");
    for (const auto& v : t.at("constants")) {
      if (!v.is_number() || v.get<double>() <= 0) throw ParameterError("config.t: field 'constants' must be positive");
      c.t.constants.push_back(v.get<double>());
    }
    c.t.kappa = t.at("kappa").get<double>();
  } else {
    throw ParameterError("config: field 't' must be an array or {constants, kappa}");
  }
  if (!j.contains("trials")) throw ParameterError("config: missing field 'trials'");
  c.trials = detail::uint_field(j, "trials", where);
  if (c.trials < 1) throw ParameterError("config: field 'trials' must be at least 1");
  if (j.contains("seed")) c.seed = detail::uint_field(j, "seed", where);
  if (j.contains("rng")) {
    if (!j.at("rng").is_string() || j.at("rng").get<std::string>() != kRngAlgorithm)
      throw ParameterError(std::string("config: field 'rng' must be \"") + kRngAlgorithm + "\"");
  }
  if (j.contains("verification")) {
    const auto& v = j.at("verification");
    if (!v.is_object()) throw ParameterError("config: field 'verification' must be an object");
    detail::reject_unknown(v, {"full", "check_interval"}, "config.verification");
    if (v.contains("full")) {
      if (!v.at("full").is_boolean()) throw ParameterError("config.verification: field 'full' must be a boolean");
      c.full_verification = v.at("full").get<bool>();
    }
    if (v.contains("check_interval")) c.check_interval = detail::uint_field(v, "check_interval", "config.verification");
  }
  const int s = build_target(c.target).uniformity();
  for (Vertex n : c.n)
    if (n < static_cast<Vertex>(s)) throw ParameterError("config: field 'n' has an entry below s");
  if (c.r < 1 || c.r > s) throw ParameterError("config: field 'r' must satisfy 1 <= r <= s");
  make_strategy_factory(c.strategy, c.target, c.r);
  return c;
}

inline nlohmann::json experiment_to_json(const ExperimentConfig& c) {
  nlohmann::json t;
  if (c.t.constants.empty()) {
    t = c.t.explicit_t;
  } else {
    t = {{"constants", c.t.constants}, {"kappa", c.t.kappa}};
  }
  nlohmann::json j = {{"version", c.version}, {"target", target_to_json(c.target)}, {"r", c.r},
                      {"strategy", c.strategy}, {"n", c.n}, {"t", t}, {"trials", c.trials}, {"rng", c.rng},
                      {"verification", {{"full", c.full_verification}, {"check_interval", c.check_interval}}}};
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

struct Interval {
  double lo = 0, hi = 0;
};

inline Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kWilsonZ) {
  if (trials == 0) return {0, 1};
  const double nn = static_cast<double>(trials), p = static_cast<double>(successes) / nn;
  const double denom = 1 + z * z / nn;
  const double center = (p + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct PointResult {
  Vertex n = 0;
  std::uint64_t t = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0;
  Interval ci;
  bool censored = false;  // t above the per-trial step cap: not run
};

inline unsigned resolve_threads(std::optional<unsigned> requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("SEMIRANDOM_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `trials` independent trials; trial i uses the streams of (seed, i), so the result does
// not depend on the thread count or execution order.
template <class TrialFn>
void parallel_trials(std::uint64_t trials, unsigned threads, TrialFn&& fn) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), trials));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = trials;
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

inline PointResult estimate_success(const ExperimentConfig& cfg, Vertex n, std::uint64_t t, unsigned threads = 1) {
  if (!cfg.seed) throw ParameterError("config: field 'seed' is required");
  PointResult res;
  res.n = n;
  res.t = t;
  res.trials = cfg.trials;
  if (t > kBudgetCap) {
    res.censored = true;
    res.ci = {0, 1};
    return res;
  }
  const MultiHypergraph target = build_target(cfg.target);
  const StrategyFactory factory = make_strategy_factory(cfg.strategy, cfg.target, cfg.r);
  const GameParams g{n, cfg.r, target.uniformity(), t};
  RunOptions opt;
  opt.full_verification = cfg.full_verification;
  opt.check_interval = cfg.check_interval;
  std::vector<char> success(cfg.trials, 0);
  parallel_trials(cfg.trials, threads, [&](std::uint64_t i) {
    auto strategy = factory();
    success[i] = run(g, *strategy, target, *cfg.seed, i, opt).success_step.has_value();
  });
  for (char s : success) res.successes += static_cast<std::uint64_t>(s);
  res.p_hat = static_cast<double>(res.successes) / static_cast<double>(res.trials);
  res.ci = wilson_interval(res.successes, res.trials);
  return res;
}

struct Crossing {
  Vertex n = 0;
  std::optional<double> t_star;
  std::string censored;  // "below_grid", "above_grid" or "" when t_star is set
};

struct Fit {
  std::optional<double> slope, intercept, stderr_slope;
  std::vector<Crossing> crossings;
  std::vector<double> residuals;  // aligned with the uncensored crossings
};

struct SweepResult {
  std::vector<PointResult> points;
  Fit fit;
};

inline double logit_smoothed(std::uint64_t successes, std::uint64_t trials) {
  double p = (static_cast<double>(successes) + 0.5) / (static_cast<double>(trials) + 1);
  return std::log(p / (1 - p));
}

// First crossing of 1/2 along t, interpolated linearly in (log t, logit p).
inline Crossing find_crossing(Vertex n, const std::vector<PointResult>& pts) {
  Crossing c;
  c.n = n;
  std::vector<const PointResult*> row;
  for (const auto& p : pts)
    if (p.n == n && !p.censored) row.push_back(&p);
  std::sort(row.begin(), row.end(), [](const PointResult* a, const PointResult* b) { return a->t < b->t; });
  if (row.empty()) {
    c.censored = "above_grid";
    return c;
  }
  if (row.front()->p_hat >= 0.5) {
    c.censored = "below_grid";
    return c;
  }
  for (std::size_t i = 0; i + 1 < row.size(); ++i) {
    const PointResult& a = *row[i];
    const PointResult& b = *row[i + 1];
    if (a.p_hat < 0.5 && b.p_hat >= 0.5) {
      double la = logit_smoothed(a.successes, a.trials), lb = logit_smoothed(b.successes, b.trials);
      double xa = std::log(static_cast<double>(std::max<std::uint64_t>(a.t, 1)));
      double xb = std::log(static_cast<double>(b.t));
      double frac = lb > la ? (0 - la) / (lb - la) : 1.0;
      frac = std::clamp(frac, 0.0, 1.0);
      c.t_star = std::exp(xa + frac * (xb - xa));
      return c;
    }
  }
  c.censored = "above_grid";
  return c;
}

inline Fit fit_crossings(const std::vector<Vertex>& ns, const std::vector<PointResult>& pts) {
  Fit fit;
  std::vector<double> xs, ys;
  for (Vertex n : ns) {
    fit.crossings.push_back(find_crossing(n, pts));
    if (fit.crossings.back().t_star) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(*fit.crossings.back().t_star));
    }
  }
  const std::size_t k = xs.size();
  if (k < 2) return fit;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < k; ++i) mx += xs[i], my += ys[i];
  mx /= static_cast<double>(k);
  my /= static_cast<double>(k);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - *fit.slope * mx;
  double ssr = 0;
  for (std::size_t i = 0; i < k; ++i) {
    double res = ys[i] - (*fit.intercept + *fit.slope * xs[i]);
    fit.residuals.push_back(res);
    ssr += res * res;
  }
  if (k > 2) fit.stderr_slope = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
  return fit;
}

inline SweepResult sweep_and_fit(const ExperimentConfig& cfg, unsigned threads = 1) {
  SweepResult out;
  for (Vertex n : cfg.n)
    for (std::uint64_t t : cfg.t.grid(n)) out.points.push_back(estimate_success(cfg, n, t, threads));
  out.fit = fit_crossings(cfg.n, out.points);
  return out;
}

// Adjacent grid points (same n) where p-hat drops significantly: one-sided two-proportion z-test.
inline std::vector<std::pair<PointResult, PointResult>> monotonicity_violations(const std::vector<PointResult>& pts,
                                                                               double alpha = 1e-3) {
  std::vector<std::pair<PointResult, PointResult>> bad;
  boost::math::normal normal;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[i + 1];
    if (a.n != b.n || a.censored || b.censored || b.p_hat >= a.p_hat) continue;
    double pooled = static_cast<double>(a.successes + b.successes) / static_cast<double>(a.trials + b.trials);
    double se = std::sqrt(pooled * (1 - pooled) * (1.0 / static_cast<double>(a.trials) + 1.0 / static_cast<double>(b.trials)));
    if (se == 0) continue;
    double z = (a.p_hat - b.p_hat) / se;
    if (boost::math::cdf(boost::math::complement(normal, z)) < alpha) bad.emplace_back(a, b);
  }
  return bad;
}

// Shortest round-trip rendering, identical to the JSON output.
inline std::string format_double(double x) { return nlohmann::json(x).dump(); }

inline void write_points_csv(std::ostream& os, const std::vector<PointResult>& pts) {
  os << "n,t,trials,successes,p_hat,ci_lo,ci_hi\n";
  for (const auto& p : pts) {
    if (p.censored) continue;
    os << p.n << ',' << p.t << ',' << p.trials << ',' << p.successes << ',' << format_double(p.p_hat) << ','
       << format_double(p.ci.lo) << ',' << format_double(p.ci.hi) << '\n';
  }
}

inline nlohmann::json point_to_json(const PointResult& p) {
  nlohmann::json j = {{"n", p.n}, {"t", p.t}, {"trials", p.trials}, {"successes", p.successes}, {"p_hat", p.p_hat},
                      {"ci_lo", p.ci.lo}, {"ci_hi", p.ci.hi}};
  if (p.censored) j["censored"] = true;
  return j;
}

inline nlohmann::json fit_to_json(const Fit& f) {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json points = nlohmann::json::array();
  std::size_t k = 0;
  for (const auto& c : f.crossings) {
    nlohmann::json p = {{"n", c.n}};
    if (c.t_star) {
      p["t_star"] = *c.t_star;
      if (k < f.residuals.size()) p["residual"] = f.residuals[k];
      ++k;
    } else {
      p["censored"] = c.censored;
    }
    points.push_back(p);
  }
  return {{"slope", opt(f.slope)}, {"intercept", opt(f.intercept)}, {"stderr", opt(f.stderr_slope)}, {"points", points}};
}

}  // namespace semirandom
