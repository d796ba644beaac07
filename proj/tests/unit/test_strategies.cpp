#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "semirandom/strategies/registry.hpp"

using namespace semirandom;

namespace {

long long oracle_binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

// Plays chosen draws against a strategy and keeps the graph, as the engine would.
struct Driver {
  GameParams params;
  MultiHypergraph graph;
  std::uint64_t step = 0;

  Driver(Strategy& st, Vertex n, int r, int s, std::uint64_t budget) : params{n, r, s, budget}, graph(s, n), strategy(st) {
    strategy.reset(TrialContext{params, 1, 0});
  }

  VertexSet play(const VertexSet& u) {
    ++step;
    GameView view{params, step, graph};
    VertexSet v = strategy.respond(view, u);
    check_response(params, u, v, 0);
    graph.add_edge(set_union(u, v));
    return v;
  }

  Strategy& strategy;
};

struct RunSummary {
  int successes = 0;
  std::vector<std::uint64_t> steps;
};

RunSummary run_many(const StrategyFactory& make, const MultiHypergraph& target, GameParams g, int trials,
                    std::uint64_t seed, RunOptions opt = {}) {
  RunSummary s;
  for (int i = 0; i < trials; ++i) {
    auto st = make();
    auto out = run(g, *st, target, seed, static_cast<std::uint64_t>(i), opt);
    if (out.success_step) {
      ++s.successes;
      s.steps.push_back(*out.success_step);
    }
  }
  return s;
}

// Independent check that a set of pairs forms a single 4-cycle.
bool is_four_cycle(const std::vector<VertexSet>& pairs) {
  std::map<Vertex, int> deg;
  std::set<VertexSet> distinct(pairs.begin(), pairs.end());
  if (pairs.size() != 4 || distinct.size() != 4) return false;
  for (const auto& p : pairs) {
    if (p.size() != 2) return false;
    ++deg[p[0]];
    ++deg[p[1]];
  }
  if (deg.size() != 4) return false;
  for (auto [v, d] : deg)
    if (d != 2) return false;
  // Four vertices, all of degree 2: either a 4-cycle or two doubled edges, excluded by distinctness.
  return true;
}

}  // namespace

TEST(Template, PrefersUnusedSetsThenLightVertices) {
  std::vector<VertexSet> edges = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  auto picks = designate_template(edges, 2, [](Vertex) { return true; });
  EXPECT_TRUE(is_four_cycle(picks));
  for (std::size_t i = 0; i < edges.size(); ++i) EXPECT_TRUE(is_subset(picks[i], edges[i]));
  auto avoid = designate_template({{1, 2, 3}, {1, 3, 4}}, 2, [](Vertex v) { return v != 1; });
  EXPECT_EQ(avoid[0], (VertexSet{2, 3}));
  EXPECT_EQ(avoid[1], (VertexSet{3, 4}));
  EXPECT_THROW(designate_template({{1, 2, 3}}, 2, [](Vertex v) { return v == 1; }), ParameterError);
}

TEST(PathBuilder, TakesTwoEndVerticesAndOneFresh) {
  PathBuilder pb(4, 5, 2, 2);
  Driver d(pb, 100, 2, 5, 10);
  EXPECT_EQ(d.play({10, 20}), (VertexSet{98, 99, 100}));
  EXPECT_EQ(d.play({30, 40}), (VertexSet{10, 20, 97}));
  // The end-edge's degree-one vertices are {30, 40, 97}; two of them plus one fresh vertex.
  EXPECT_EQ(d.play({50, 60}), (VertexSet{30, 40, 96}));
  EXPECT_EQ(pb.path().edges(), 3);
  EXPECT_FALSE(pb.claimed_embedding());
}

TEST(PathBuilder, DrawOnThePathIsWasted) {
  PathBuilder pb(3, 5, 2, 2);
  Driver d(pb, 100, 2, 5, 10);
  d.play({10, 20});
  EXPECT_EQ(d.play({10, 55}), (VertexSet{1, 2, 3}));
  EXPECT_EQ(pb.path().edges(), 1);
}

TEST(PathBuilder, ClaimIsAPathCopy) {
  auto target = build_target(TightPath{5, 5, 2});
  auto res = run_many([] { return std::make_unique<PathBuilder>(5, 5, 2, 2); }, target, {10000, 2, 5, 5}, 100, 3);
  EXPECT_GE(res.successes, 95);
  for (auto st : res.steps) EXPECT_EQ(st, 5u);
}

TEST(PathBuilder, RejectsBadRegimes) {
  EXPECT_THROW(PathBuilder(3, 5, 3, 2), ParameterError);  // 2 ell > s
  EXPECT_THROW(PathBuilder(3, 5, 2, 4), ParameterError);  // s - r < ell
}

TEST(LooseCycle, ClosingUsesOneEndVertexFromEachSideAndOneFresh) {
  LooseCycleBuilder lc(4, 5, 1, 2);
  Driver d(lc, 100, 2, 5, 10);
  EXPECT_EQ(d.play({10, 20}), (VertexSet{98, 99, 100}));  // sequence 100 99 98 20 10
  EXPECT_EQ(d.play({30, 40}), (VertexSet{10, 96, 97}));   // block 97 96 40 30
  EXPECT_EQ(d.play({50, 60}), (VertexSet{30, 94, 95}));   // block 95 94 60 50
  // Closing: l = 1 vertex from each end-edge plus s - 2l - r = 1 fresh.
  EXPECT_EQ(d.play({70, 80}), (VertexSet{50, 93, 100}));
  auto phi = lc.claimed_embedding();
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_embedding(d.graph, build_target(TightCycle{4, 5, 1}), *phi));
}

TEST(LooseCycle, SucceedsInExactlyMSteps) {
  auto target = build_target(TightCycle{4, 5, 1});
  auto res = run_many([] { return std::make_unique<LooseCycleBuilder>(4, 5, 1, 2); }, target, {10000, 2, 5, 4}, 100, 8);
  EXPECT_GE(res.successes, 95);
  EXPECT_THROW(LooseCycleBuilder(4, 5, 2, 2), ParameterError);
}

TEST(CycleThreePhase, AlternatesBetweenTheTwoEnds) {
  CycleThreePhase cy(4, 3, 1, 2);
  Driver d(cy, 100, 2, 3, 100);
  EXPECT_EQ(d.play({1, 2}), (VertexSet{100}));  // Phase 0 builds P_1 = {1, 2, 100}
  EXPECT_EQ(cy.l_prime(), (VertexSet{100}));
  EXPECT_EQ(cy.l_double_prime(), (VertexSet{1}));
  EXPECT_EQ(d.play({10, 11}), (VertexSet{1}));    // even step: L''
  EXPECT_EQ(d.play({20, 21}), (VertexSet{100}));  // odd step: L'
  EXPECT_EQ(d.play({20, 30}), (VertexSet{3}));    // meets the structure: wasted
  EXPECT_EQ(cy.e_prime().size(), 1u);
  EXPECT_EQ(cy.e_double_prime().size(), 1u);
}

TEST(CycleThreePhase, PhaseTwoClosesTheCycle) {
  // Budget 7: Phase 0 takes one step, Phase 1 the next three, Phase 2 the rest.
  CycleThreePhase cy(4, 3, 1, 2);
  Driver d(cy, 100, 2, 3, 7);
  d.play({1, 2});
  d.play({10, 11});  // e'' = {1, 10, 11}
  d.play({20, 21});  // e' = {20, 21, 100}
  d.play({30, 31});  // e'' = {1, 30, 31}
  // Phase 2: U meets e' \ L' in one vertex and misses some e''.
  EXPECT_EQ(d.play({20, 50}), (VertexSet{10}));
  auto phi = cy.claimed_embedding();
  ASSERT_TRUE(phi);
  EXPECT_TRUE(is_embedding(d.graph, build_target(TightCycle{4, 3, 1}), *phi));
}

TEST(CycleThreePhase, VerifiedSuccessesForSeveralLengths) {
  for (int m : {3, 4, 5, 6}) {
    auto target = build_target(TightCycle{m, 3, 1});
    RunOptions opt;
    opt.full_verification = true;
    auto res = run_many([m] { return std::make_unique<CycleThreePhase>(m, 3, 1, 2); }, target, {400, 2, 3, 600}, 30, 5, opt);
    EXPECT_GT(res.successes, 15) << "m = " << m;
  }
  // s = 5, l = 2, r = 2: s - r = 3 = 2l - 1.
  auto target = build_target(TightCycle{4, 5, 2});
  auto res = run_many([] { return std::make_unique<CycleThreePhase>(4, 5, 2, 2); }, target, {300, 2, 5, 600}, 30, 6);
  EXPECT_GT(res.successes, 15);
}

TEST(CycleGeneralX, ZonesAndVerifiedSuccesses) {
  CycleGeneralX gx(4, 4, 2, 2);
  EXPECT_EQ(gx.x(), 2);
  Driver d(gx, 90, 2, 4, 100);
  d.play({1, 2});  // Phase 0: P_1
  std::map<int, int> sizes;
  for (Vertex v = 1; v <= 90; ++v) ++sizes[gx.zone(v)];
  EXPECT_EQ(sizes[0], 4);
  EXPECT_NEAR(sizes[1], 86.0 / 3, 1.0);
  EXPECT_NEAR(sizes[2], 86.0 / 3, 1.0);
  // A draw straddling W1 and W2 is wasted.
  Vertex a = 0, b = 0;
  for (Vertex v = 1; v <= 90; ++v) {
    if (gx.zone(v) == 1 && !a) a = v;
    if (gx.zone(v) == 2 && !b) b = v;
  }
  d.play({a, b});
  EXPECT_TRUE(gx.e_prime().empty());
  EXPECT_TRUE(gx.e_double_prime().empty());

  for (auto [m, s, ell, r, n, budget] : std::vector<std::array<int, 6>>{{4, 4, 2, 2, 200, 2500}, {5, 7, 3, 3, 60, 6000}}) {
    auto target = build_target(TightCycle{m, s, ell});
    RunOptions opt;
    opt.full_verification = true;
    auto res = run_many([=] { return std::make_unique<CycleGeneralX>(m, s, ell, r); }, target,
                        {static_cast<Vertex>(n), r, s, static_cast<std::uint64_t>(budget)}, 20, 2, opt);
    EXPECT_GT(res.successes, 0) << "C_" << m << "^(" << s << "," << ell << ")";
  }
  EXPECT_THROW(CycleGeneralX(4, 3, 1, 2), ParameterError);
}

TEST(CliqueBuilder, DoubleCliqueAssignmentForKSix) {
  CliqueBuilder cb(6, 3, 2);
  EXPECT_EQ(cb.level(), 2);
  EXPECT_EQ(cb.multiplicity({}), 2);
  EXPECT_EQ(cb.multiplicity({1}), 1);
  EXPECT_EQ(cb.multiplicity({2}), 0);
  Driver d(cb, 50, 2, 3, 100);
  EXPECT_EQ(cb.reserved_set(), (VertexSet{49, 50}));
  EXPECT_EQ(d.play({3, 7}), (VertexSet{49}));
  EXPECT_EQ(d.play({3, 7}), (VertexSet{50}));
  EXPECT_EQ(d.play({3, 7}), (VertexSet{1}));  // third hit: wasted
  EXPECT_EQ(d.play({5, 49}), (VertexSet{50}));
  EXPECT_EQ(d.play({5, 50}), (VertexSet{1}));
  // Phase-2 designated pairs on the four outside vertices form a 4-cycle.
  EXPECT_EQ(cb.phase2_edges().size(), 4u);
  EXPECT_TRUE(is_four_cycle(cb.phase2_template()));
}

TEST(CliqueBuilder, GeneralKAssignmentForPairs) {
  // r = 2, s = 3: U = {u, j} with j in L gets j + i on its i-th hit while i <= l - j.
  for (int k : {6, 8, 12, 20}) {
    CliqueBuilder cb(k, 3, 2);
    int ell = cb.level();
    for (int j = 1; j <= ell; ++j) {
      EXPECT_EQ(cb.multiplicity({static_cast<Vertex>(j)}), ell - j);
      auto it = cb.assignment().find({static_cast<Vertex>(j)});
      if (ell - j == 0) continue;
      ASSERT_NE(it, cb.assignment().end());
      for (int i = 1; i <= ell - j; ++i)
        EXPECT_EQ(set_difference(it->second[i - 1], {static_cast<Vertex>(j)}), (VertexSet{static_cast<Vertex>(j + i)}));
    }
  }
}

TEST(CliqueBuilder, AssignmentMultiplicitiesSumToBinomials) {
  for (auto [r, s, k] : std::vector<std::array<int, 3>>{{2, 3, 7}, {2, 3, 20}, {2, 4, 9}, {3, 4, 9}, {3, 5, 12}, {2, 5, 14}}) {
    CliqueBuilder cb(k, s, r);
    int ell = cb.level();
    std::map<std::size_t, long long> by_size;
    for (const auto& [t, list] : cb.assignment()) {
      by_size[t.size()] += static_cast<long long>(list.size());
      for (const auto& S : list) {
        EXPECT_TRUE(is_subset(t, S));
        EXPECT_EQ(S.size(), static_cast<std::size_t>(s) - (r - t.size()));
      }
    }
    for (int j = std::max(1, s - ell); j <= r; ++j)
      EXPECT_EQ(by_size[static_cast<std::size_t>(r - j)], oracle_binom(ell, s - j)) << r << s << k << " j=" << j;
  }
}

TEST(CliqueBuilder, BaseCaseSucceedsAtOnce) {
  auto target = build_target(Clique{3, 3});
  auto res = run_many([] { return std::make_unique<CliqueBuilder>(3, 3, 2); }, target, {20, 2, 3, 5}, 10, 1);
  EXPECT_EQ(res.successes, 10);
  for (auto st : res.steps) EXPECT_EQ(st, 1u);
}

TEST(CliqueBuilder, VerifiedSuccessesOnSmallCliques) {
  RunOptions opt;
  opt.full_verification = true;
  auto k4 = run_many([] { return std::make_unique<CliqueBuilder>(4, 3, 2); }, build_target(Clique{4, 3}), {40, 2, 3, 1500}, 20,
                     4, opt);
  EXPECT_GT(k4.successes, 10);
  auto k5 = run_many([] { return std::make_unique<CliqueBuilder>(5, 3, 2); }, build_target(Clique{5, 3}), {30, 2, 3, 3000}, 10,
                     4, opt);
  EXPECT_GT(k5.successes, 0);
}

TEST(StarplusBuilder, KFourDecompositionAndTemplate) {
  StarplusBuilder sp(build_target(Clique{4, 3}), 2);
  EXPECT_EQ(sp.decomposition().center, (VertexSet{1}));
  ASSERT_EQ(sp.cap_edges().size(), 1u);
  EXPECT_EQ(sp.cap_edges()[0], (VertexSet{2, 3, 4}));
  EXPECT_EQ(sp.template_r_sets()[0], (VertexSet{2, 3}));
}

TEST(StarplusBuilder, LedgerInvariantsAndVerifiedSuccess) {
  auto target = build_target(Clique{4, 3});
  int successes = 0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    StarplusBuilder sp(target, 2);
    RunOptions opt;
    opt.full_verification = true;
    auto out = run({60, 2, 3, 1500}, sp, target, 12, trial, opt);
    successes += out.success_step.has_value();
    const auto& copies = sp.ledger().copies();
    for (std::size_t i = 0; i < copies.size(); ++i) {
      EXPECT_FALSE(contains_vertex(copies[i].vertices, 1));
      for (const auto& e : copies[i].edges) EXPECT_GE(out.final_graph.multiplicity(set_union(e, {1})), 1);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_LT(set_intersection(copies[i].vertices, copies[j].vertices).size(), 2u);
        for (const auto& e : copies[i].edges)
          for (const auto& f : copies[j].edges) EXPECT_NE(e, f);
      }
    }
  }
  EXPECT_GT(successes, 10);
}

TEST(StarplusBuilder, NoCapMeansSinglePhase) {
  // A 2-star with center {1, 2} and flower a single pair: success at the first flower.
  auto target = build_target(Starplus{2, {{1, 2, 3, 4}}, {}});
  auto res = run_many([&] { return std::make_unique<StarplusBuilder>(target, 2); }, target, {10000, 2, 4, 3}, 20, 1);
  EXPECT_EQ(res.successes, 20);
  for (auto st : res.steps) EXPECT_EQ(st, 1u);
}

TEST(Baseline, ValidAndReproducible) {
  auto target = build_target(Clique{4, 3});
  RunOptions opt;
  opt.record_trace = true;
  opt.stop_on_success = false;
  BaselineRandom a, b;
  auto x = run({200, 2, 3, 400}, a, target, 5, 0, opt);
  auto y = run({200, 2, 3, 400}, b, target, 5, 0, opt);
  ASSERT_EQ(x.trace.size(), y.trace.size());
  for (std::size_t i = 0; i < x.trace.size(); ++i) {
    EXPECT_EQ(x.trace[i].v, y.trace[i].v);
    EXPECT_EQ(x.trace[i].v.size(), 1u);
    EXPECT_TRUE(disjoint(x.trace[i].u, x.trace[i].v));
  }
}

TEST(Baseline, RarelyBuildsKFourFarBelowThreshold) {
  // t = n is far below n^(5/4); even 20 trials should show no or very few successes.
  auto target = build_target(Clique{4, 3});
  auto res = run_many([] { return std::make_unique<BaselineRandom>(); }, target, {2000, 2, 3, 2000}, 40, 21);
  EXPECT_LE(res.successes, 2);
}

TEST(Registry, BuildsFromConfigAndRejectsUnknownFields) {
  auto target = TargetSpec{Clique{6, 3}};
  auto f = make_strategy_factory(nlohmann::json{{"strategy", "clique_builder"}, {"k", 6}}, target, 2);
  EXPECT_EQ(f()->name(), "clique_builder");
  EXPECT_EQ(make_strategy_factory("baseline_random", target, 2)()->name(), "baseline_random");
  EXPECT_THROW(make_strategy_factory(nlohmann::json{{"strategy", "clique_builder"}, {"kk", 6}}, target, 2), ParameterError);
  EXPECT_THROW(make_strategy_factory("no_such_strategy", target, 2), ParameterError);
  EXPECT_THROW(make_strategy_factory("path_builder", target, 2), ParameterError);  // no path shape available
  auto cyc = TargetSpec{TightCycle{4, 3, 1}};
  EXPECT_EQ(make_strategy_factory("cycle_three_phase", cyc, 2)()->name(), "cycle_three_phase");
  EXPECT_THROW(make_strategy_factory("loose_cycle_builder", cyc, 2), ParameterError);
  EXPECT_THROW(make_strategy_factory(nlohmann::json{{"strategy", "starplus_builder"}, {"phase1_fraction", 2.0}},
                                     TargetSpec{Clique{4, 3}}, 2),
               ParameterError);
}
