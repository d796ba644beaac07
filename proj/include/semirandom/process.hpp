#pragma once

#include <cmath>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "semirandom/containment.hpp"
#include "semirandom/rational.hpp"
#include "semirandom/rng.hpp"

namespace semirandom {

struct GameParams {
  Vertex n = 0;
  int r = 0;
  int s = 0;
  std::uint64_t budget = 0;
};

inline void validate_game(const GameParams& g) {
  if (g.s < 1) throw ParameterError("s must be at least 1");
  if (g.r < 1 || g.r > g.s) throw ParameterError("r must satisfy 1 <= r <= s");
  if (g.n < static_cast<Vertex>(g.s)) throw ParameterError("n must be at least s");
}

// Read-only view handed to the strategy each step; `step` is the index of the current round (1-based).
struct GameView {
  const GameParams& params;
  std::uint64_t step;
  const MultiHypergraph& graph;
};

struct TrialContext {
  GameParams params;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(const TrialContext& ctx) = 0;
  // V_t: s-r vertices disjoint from u.
  virtual VertexSet respond(const GameView& view, const VertexSet& u) = 0;
  // After the edge of the current round is inserted: an embedding of the target if the strategy claims success.
  virtual std::optional<Embedding> claimed_embedding() const { return std::nullopt; }
  // Strategies that never report are checked by the engine's containment search.
  virtual bool self_reporting() const { return true; }
  virtual nlohmann::json diagnostics() const { return nlohmann::json::object(); }
};

struct TraceRow {
  VertexSet u;
  VertexSet v;
  bool duplicate = false;
};

struct RunOptions {
  bool record_trace = false;
  // Fall back to a full containment search when a claimed embedding does not check out.
  bool full_verification = false;
  // For non-reporting strategies: 1 = anchored search through every new edge, k > 1 = full search every k steps,
  // 0 = no search.
  std::uint64_t check_interval = 1;
  bool stop_on_success = true;
};

struct ProcessOutcome {
  std::optional<std::uint64_t> success_step;
  std::optional<Embedding> embedding;
  MultiHypergraph final_graph;
  std::uint64_t duplicate_draws = 0;
  std::uint64_t steps = 0;
  std::vector<TraceRow> trace;
  nlohmann::json diagnostics;
};

inline void check_response(const GameParams& g, const VertexSet& u, const VertexSet& v, std::uint64_t trial) {
  if (static_cast<int>(v.size()) != g.s - g.r)
    throw StrategyContractViolation("strategy returned " + std::to_string(v.size()) + " vertices, expected " +
                                        std::to_string(g.s - g.r),
                                    trial);
  if (!is_strictly_increasing(v)) throw StrategyContractViolation("strategy returned an unsorted or repeated V", trial);
  if (!v.empty() && (v.front() < 1 || v.back() > g.n))
    throw StrategyContractViolation("strategy returned a vertex outside [1, n]", trial);
  if (!disjoint(u, v)) throw StrategyContractViolation("strategy returned V intersecting U", trial);
}

// Plays one trial. The process draws from stream 0 of (seed, trial); strategies use their own streams.
inline ProcessOutcome run(const GameParams& g, Strategy& strategy, const MultiHypergraph& target, std::uint64_t seed,
                          std::uint64_t trial, const RunOptions& opt = {}) {
  validate_game(g);
  if (target.uniformity() != g.s) throw ParameterError("target uniformity differs from s");
  RandomStream rng(seed, trial, 0);
  strategy.reset(TrialContext{g, seed, trial});
  ProcessOutcome out;
  out.final_graph = MultiHypergraph(g.s, g.n);
  MultiHypergraph& graph = out.final_graph;
  VertexSetMap<char> seen;
  std::optional<EmbeddingSearch> search;
  const bool reporting = strategy.self_reporting();
  if (!reporting || opt.full_verification) search.emplace(target);
  if (opt.record_trace) out.trace.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(g.budget, 1u << 22)));

  for (std::uint64_t step = 1; step <= g.budget; ++step) {
    VertexSet u = draw_uniform_r_subset(rng, g.n, g.r);
    bool dup = !seen.emplace(u, 1).second;
    out.duplicate_draws += dup;
    GameView view{g, step, graph};
    VertexSet v = strategy.respond(view, u);
    check_response(g, u, v, trial);
    VertexSet e = set_union(u, v);
    graph.add_edge(e);
    out.steps = step;
    if (opt.record_trace) out.trace.push_back({std::move(u), std::move(v), dup});

    if (out.success_step) continue;
    std::optional<Embedding> found;
    if (reporting) {
      auto claim = strategy.claimed_embedding();
      if (claim) {
        if (is_embedding(graph, target, *claim)) {
          found = claim;
        } else if (opt.full_verification) {
          found = search->find(graph);
          if (!found)
            throw StrategyContractViolation("claimed embedding fails and no copy of the target exists", trial);
        } else {
          throw StrategyContractViolation("claimed embedding is not a copy of the target", trial);
        }
      }
    } else if (opt.check_interval == 1) {
      found = search->find_through(graph, e);
    } else if (opt.check_interval > 1 && (step % opt.check_interval == 0 || step == g.budget)) {
      found = search->find(graph);
    }
    if (found) {
      out.success_step = step;
      out.embedding = found;
      if (opt.stop_on_success) break;
    }
  }
  out.diagnostics = strategy.diagnostics();
  return out;
}

inline void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& trace) {
  os << "step,U,V,duplicate_flag\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    os << (i + 1) << ',' << set_to_string(trace[i].u) << ',' << set_to_string(trace[i].v) << ','
       << (trace[i].duplicate ? 1 : 0) << '\n';
}

inline VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(static_cast<Vertex>(std::stoul(item)));
  return out;
}

inline std::vector<TraceRow> read_trace_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "step,U,V,duplicate_flag") throw ParameterError("trace: bad header");
  std::vector<TraceRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
    if (line.back() == ',') cols.push_back("");
    if (cols.size() != 4) throw ParameterError("trace: expected 4 columns");
    if (std::stoull(cols[0]) != rows.size() + 1) throw ParameterError("trace: steps out of order");
    rows.push_back({parse_vertex_list(cols[1]), parse_vertex_list(cols[2]), cols[3] == "1"});
  }
  return rows;
}

inline MultiHypergraph replay_trace(const std::vector<TraceRow>& trace, int s, Vertex n) {
  MultiHypergraph g(s, n);
  for (const auto& row : trace) g.add_edge(set_union(row.u, row.v));
  return g;
}

// Smallest `count` vertices outside `u` for which `reserved` is false.
template <class Reserved>
VertexSet waste_move(Vertex n, const VertexSet& u, int count, Reserved&& reserved) {
  VertexSet v;
  for (Vertex x = 1; x <= n && static_cast<int>(v.size()) < count; ++x)
    if (!contains_vertex(u, x) && !reserved(x)) v.push_back(x);
  if (static_cast<int>(v.size()) < count) {
    // Everything is reserved: fall back to any vertices outside u.
    v.clear();
    for (Vertex x = 1; x <= n && static_cast<int>(v.size()) < count; ++x)
      if (!contains_vertex(u, x)) v.push_back(x);
  }
  return v;
}

inline VertexSet waste_move(Vertex n, const VertexSet& u, int count) {
  return waste_move(n, u, count, [](Vertex) { return false; });
}

// Vertices never touched by any edge, handed out from n downwards.
class FreshPool {
 public:
  explicit FreshPool(Vertex n = 0) : cursor_(n) {}

  // `count` untouched vertices outside `avoid` for which `reserved` is false; nullopt if the pool runs dry.
  template <class Reserved>
  std::optional<VertexSet> take(const MultiHypergraph& g, const VertexSet& avoid, int count, Reserved&& reserved) {
    VertexSet out;
    Vertex c = cursor_;
    while (static_cast<int>(out.size()) < count && c >= 1) {
      Vertex x = c--;
      if (g.degree(x) > 0 || contains_vertex(avoid, x) || reserved(x)) continue;
      out.push_back(x);
    }
    if (static_cast<int>(out.size()) < count) return std::nullopt;
    // Skipped vertices are touched by this round's edge (avoid = U) or stay reserved.
    cursor_ = c;
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<VertexSet> take(const MultiHypergraph& g, const VertexSet& avoid, int count) {
    return take(g, avoid, count, [](Vertex) { return false; });
  }

 private:
  Vertex cursor_;
};

// Always plays the lexicographically smallest valid V_t; never reports success.
class LexicographicStrategy : public Strategy {
 public:
  std::string name() const override { return "lexicographic"; }
  void reset(const TrialContext& ctx) override { params_ = ctx.params; }
  VertexSet respond(const GameView&, const VertexSet& u) override { return waste_move(params_.n, u, params_.s - params_.r); }
  bool self_reporting() const override { return false; }

 private:
  GameParams params_;
};

struct DuplicateRateReport {
  double mean = 0;
  double bound = 0;  // 2 t^2/C(n,r) + 3 sqrt(t^2/C(n,r))
  std::vector<std::uint64_t> counts;
};

// Counts repeated r-sets among t uniform draws, over independent trials.
inline DuplicateRateReport duplicate_rate_check(Vertex n, int r, std::uint64_t t, std::uint64_t trials,
                                                std::uint64_t seed) {
  if (trials == 0) throw ParameterError("trials must be positive");
  DuplicateRateReport rep;
  double total = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    RandomStream rng(seed, i, 0);
    VertexSetMap<char> seen;
    std::uint64_t dups = 0;
    for (std::uint64_t step = 0; step < t; ++step) dups += !seen.emplace(draw_uniform_r_subset(rng, n, r), 1).second;
    rep.counts.push_back(dups);
    total += static_cast<double>(dups);
  }
  rep.mean = total / static_cast<double>(trials);
  double x = static_cast<double>(t) * static_cast<double>(t) / to_double(Rational(binom(n, r)));
  rep.bound = 2 * x + 3 * std::sqrt(x);
  return rep;
}

}  // namespace semirandom
