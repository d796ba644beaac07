#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "semirandom/montecarlo.hpp"

// X_j(t): the number of k-sets inducing at least j edges (with multiplicity) in the played graph.

namespace semirandom {

inline constexpr double kCountingLimit = 5e7;

struct DenseSetCounts {
  std::uint64_t at_least_one = 0;  // X_1
  std::uint64_t at_least_m = 0;    // X_m
};

// Every k-set with an edge is e + X for its lexicographically smallest distinct edge e and some
// (k-s)-set X outside e; each k-set is counted once, at that edge.
inline DenseSetCounts count_dense_sets(const MultiHypergraph& g, int k, long long m) {
  const int s = g.uniformity();
  const Vertex n = g.vertex_count();
  if (k < s) throw ParameterError("dense-set count needs k >= s");
  DenseSetCounts out;
  const double work = static_cast<double>(g.distinct_edge_count()) * to_double(Rational(binom(n - s, k - s)));
  if (work > kCountingLimit) throw ResourceError("dense-set count too large at j = 1");
  for (const auto& e : g.distinct_edges()) {
    VertexSet rest;
    for (Vertex v = 1; v <= n; ++v)
      if (!contains_vertex(e, v)) rest.push_back(v);
    for_each_subset(rest, static_cast<std::size_t>(k - s), [&](const VertexSet& x) {
      VertexSet w = set_union(e, x);
      bool owner = true;
      long long inside = 0;
      for_each_subset(w, static_cast<std::size_t>(s), [&](const VertexSet& f) {
        int mult = g.multiplicity(f);
        if (mult > 0 && f < e) {
          owner = false;
          return false;
        }
        inside += mult;
        return true;
      });
      if (owner) {
        ++out.at_least_one;
        out.at_least_m += inside >= m;
      }
      return true;
    });
  }
  return out;
}

// t^j k^{r(j-1)} n^{k-s+r-rj}.
inline long double counting_bound(int j, int k, int s, int r, Vertex n, std::uint64_t t) {
  const long double lt = std::log(static_cast<long double>(t)), lk = std::log(static_cast<long double>(k)),
                    ln = std::log(static_cast<long double>(n));
  if (t == 0) return 0;
  return std::exp(j * lt + r * (j - 1) * lk + (k - s + r - static_cast<long double>(r) * j) * ln);
}

struct ExpectationReport {
  int k = 0, s = 0, r = 0;
  long long m = 0;
  Vertex n = 0;
  std::uint64_t t = 0, trials = 0;
  std::vector<std::uint64_t> x1, xm;
  double mean_x1 = 0, mean_xm = 0;
  double bound_x1 = 0, bound_xm = 0;
  double deterministic_x1 = 0;  // t * C(n-s, k-s)
  bool deterministic_ok = true;
  bool mean_ok = false;
};

inline ExpectationReport expectation_bound_check(const MultiHypergraph& h, int r, const StrategyFactory& factory,
                                                 Vertex n, std::uint64_t t, std::uint64_t trials, std::uint64_t seed,
                                                 unsigned threads = 1) {
  ExpectationReport rep;
  rep.k = static_cast<int>(h.vertex_count());
  rep.s = h.uniformity();
  rep.r = r;
  rep.m = static_cast<long long>(h.edge_count());
  rep.n = n;
  rep.t = t;
  rep.trials = trials;
  if (trials == 0) throw ParameterError("trials must be positive");
  rep.x1.assign(trials, 0);
  rep.xm.assign(trials, 0);
  const GameParams g{n, r, rep.s, t};
  RunOptions opt;
  opt.stop_on_success = false;
  opt.check_interval = 0;
  parallel_trials(trials, threads, [&](std::uint64_t i) {
    auto strategy = factory();
    auto out = run(g, *strategy, h, seed, i, opt);
    auto counts = count_dense_sets(out.final_graph, rep.k, rep.m);
    rep.x1[i] = counts.at_least_one;
    rep.xm[i] = counts.at_least_m;
  });
  rep.deterministic_x1 = static_cast<double>(t) * to_double(Rational(binom(n - rep.s, rep.k - rep.s)));
  for (std::uint64_t i = 0; i < trials; ++i) {
    rep.mean_x1 += static_cast<double>(rep.x1[i]);
    rep.mean_xm += static_cast<double>(rep.xm[i]);
    rep.deterministic_ok = rep.deterministic_ok && static_cast<double>(rep.x1[i]) <= rep.deterministic_x1;
  }
  rep.mean_x1 /= static_cast<double>(trials);
  rep.mean_xm /= static_cast<double>(trials);
  rep.bound_x1 = static_cast<double>(counting_bound(1, rep.k, rep.s, r, n, t));
  rep.bound_xm = static_cast<double>(counting_bound(static_cast<int>(rep.m), rep.k, rep.s, r, n, t));
  rep.mean_ok = rep.mean_x1 <= rep.bound_x1 && rep.mean_xm <= rep.bound_xm;
  return rep;
}

inline nlohmann::json expectation_to_json(const ExpectationReport& rep) {
  return {{"k", rep.k},           {"s", rep.s},           {"r", rep.r},
          {"m", rep.m},           {"n", rep.n},           {"t", rep.t},
          {"trials", rep.trials}, {"mean_x1", rep.mean_x1}, {"bound_x1", rep.bound_x1},
          {"mean_xm", rep.mean_xm}, {"bound_xm", rep.bound_xm}, {"deterministic_x1", rep.deterministic_x1},
          {"deterministic_ok", rep.deterministic_ok}, {"mean_ok", rep.mean_ok}};
}

}  // namespace semirandom
