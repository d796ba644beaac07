#pragma once

#include <functional>
#include <memory>
#include <string>

#include "json.hpp"

#include "semirandom/strategies/baseline.hpp"
#include "semirandom/strategies/clique_builder.hpp"
#include "semirandom/strategies/path_cycle.hpp"
#include "semirandom/strategies/starplus_builder.hpp"

namespace semirandom {

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

namespace detail {

inline int param_or(const nlohmann::json& j, const char* key, std::optional<int> fallback, const std::string& where) {
  if (j.contains(key)) return int_field(j, key, where);
  if (!fallback) throw ParameterError(where + "." + key + ": required");
  return *fallback;
}

inline std::optional<double> fraction_field(const nlohmann::json& j, const std::string& where) {
  if (!j.contains("phase1_fraction")) return std::nullopt;
  const auto& v = j.at("phase1_fraction");
  if (!v.is_number()) throw ParameterError(where + ".phase1_fraction: expected a number");
  double f = v.get<double>();
  if (!(f > 0 && f <= 1)) throw ParameterError(where + ".phase1_fraction: must lie in (0, 1]");
  return f;
}

}  // namespace detail

inline const std::vector<std::string>& strategy_names() {
  static const std::vector<std::string> names = {"path_builder",     "loose_cycle_builder", "cycle_three_phase",
                                                 "cycle_general_x",  "starplus_builder",    "clique_builder",
                                                 "baseline_random",  "lexicographic"};
  return names;
}

// Builds a factory from {"strategy": name, ...params}; missing shape parameters are taken from
// the target. Construction errors surface here, before any trial runs.
inline StrategyFactory make_strategy_factory(const nlohmann::json& cfg, const TargetSpec& target, int r) {
  const std::string where = "strategy";
  nlohmann::json j = cfg.is_string() ? nlohmann::json{{"strategy", cfg}} : cfg;
  if (!j.is_object() || !j.contains("strategy") || !j.at("strategy").is_string())
    throw ParameterError("strategy: expected a name or an object with a \"strategy\" field");
  const std::string name = j.at("strategy").get<std::string>();
  std::optional<int> tm, ts, tl, tk;
  if (auto* p = std::get_if<TightPath>(&target)) tm = p->m, ts = p->s, tl = p->ell;
  if (auto* c = std::get_if<TightCycle>(&target)) tm = c->m, ts = c->s, tl = c->ell;
  if (auto* q = std::get_if<Clique>(&target)) tk = q->k, ts = q->s;

  StrategyFactory factory;
  if (name == "path_builder" || name == "loose_cycle_builder" || name == "cycle_three_phase" ||
      name == "cycle_general_x") {
    detail::reject_unknown(j, {"strategy", "m", "s", "ell"}, where);
    int m = detail::param_or(j, "m", tm, where), s = detail::param_or(j, "s", ts, where),
        ell = detail::param_or(j, "ell", tl, where);
    if (name == "path_builder") factory = [=] { return std::make_unique<PathBuilder>(m, s, ell, r); };
    if (name == "loose_cycle_builder") factory = [=] { return std::make_unique<LooseCycleBuilder>(m, s, ell, r); };
    if (name == "cycle_three_phase") factory = [=] { return std::make_unique<CycleThreePhase>(m, s, ell, r); };
    if (name == "cycle_general_x") factory = [=] { return std::make_unique<CycleGeneralX>(m, s, ell, r); };
  } else if (name == "starplus_builder") {
    detail::reject_unknown(j, {"strategy", "phase1_fraction"}, where);
    StarplusOptions opt{detail::fraction_field(j, where)};
    auto shared = std::make_shared<MultiHypergraph>(build_target(target));
    factory = [=] { return std::make_unique<StarplusBuilder>(*shared, r, opt); };
  } else if (name == "clique_builder") {
    detail::reject_unknown(j, {"strategy", "k", "s", "phase0_cap", "phase1_fraction"}, where);
    int k = detail::param_or(j, "k", tk, where), s = detail::param_or(j, "s", ts, where);
    CliqueOptions opt;
    if (j.contains("phase0_cap")) opt.phase0_cap = static_cast<std::uint64_t>(detail::int_field(j, "phase0_cap", where));
    opt.phase1_fraction = detail::fraction_field(j, where);
    factory = [=] { return std::make_unique<CliqueBuilder>(k, s, r, opt); };
  } else if (name == "baseline_random") {
    detail::reject_unknown(j, {"strategy"}, where);
    factory = [] { return std::make_unique<BaselineRandom>(); };
  } else if (name == "lexicographic") {
    detail::reject_unknown(j, {"strategy"}, where);
    factory = [] { return std::make_unique<LexicographicStrategy>(); };
  } else {
    throw ParameterError("strategy: unknown strategy \"" + name + "\"");
  }
  factory();  // surface parameter errors now
  return factory;
}

}  // namespace semirandom
