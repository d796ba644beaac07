#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "semirandom/threshold.hpp"

using namespace semirandom;

namespace {

// Five vertices: all triples of {1,2,3,4} plus {3,4,5}.
MultiHypergraph clique_with_pendant_triple() {
  return build_target(Custom{3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}}});
}

// Center {1,2}; rays pair it with every pair of {3,4,5,6} but {5,6}; three cap edges.
MultiHypergraph two_center_starplus() {
  return build_target(Starplus{2,
                               {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 4, 5}, {1, 2, 4, 6}},
                               {{3, 4, 5, 6}, {1, 3, 4, 5}, {2, 3, 5, 6}}});
}

Rational q(long long a, long long b) { return Rational(a, b); }

const BoundEntry* find_bound(const std::vector<BoundEntry>& list, const std::string& source) {
  for (const auto& b : list)
    if (b.source == source) return &b;
  return nullptr;
}

}  // namespace

TEST(Ratio, KnownValues) {
  EXPECT_EQ(edge_vertex_ratio(clique_with_pendant_triple(), 2), q(5, 4));
  EXPECT_EQ(edge_vertex_ratio(build_target(Clique{4, 3}), 2), q(4, 3));
  for (int r = 1; r <= 3; ++r) EXPECT_EQ(edge_vertex_ratio(build_target(Clique{4, 4}), r), q(1, r));
  EXPECT_THROW(edge_vertex_ratio(MultiHypergraph(3, 2), 2), ParameterError);
}

TEST(MaxRatio, DenseCoreWins) {
  auto res = max_edge_vertex_ratio(clique_with_pendant_triple(), 2);
  EXPECT_EQ(res.value, q(4, 3));
  EXPECT_EQ(res.witness.vertices, (VertexSet{1, 2, 3, 4}));
}

TEST(MaxRatio, PathsWithSingleVertexShift) {
  for (int s = 2; s <= 4; ++s)
    for (int m = 1; m <= 5; ++m) EXPECT_EQ(max_edge_vertex_ratio(build_target(TightPath{m, s, s - 1}), 1).value, 1);
}

TEST(MaxRatio, LooseCycleOfFourQuadruples) {
  auto c = build_target(TightCycle{4, 4, 2});
  EXPECT_EQ(max_edge_vertex_ratio(c, 2).value, oracle::brute_mu(c, 2));
  EXPECT_EQ(max_edge_vertex_ratio(c, 2).value, q(4, 6));
}

TEST(MaxRatio, InducedSearchMatchesAllSubgraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    int s = 2 + trial % 3;
    auto h = oracle::random_hypergraph(rng, s, 7, 0.35);
    if (h.edge_count() == 0 || h.edge_count() > 16) continue;
    for (int r = 1; r < s + 1; ++r) EXPECT_EQ(max_edge_vertex_ratio(h, r).value, oracle::brute_mu(h, r));
  }
}

TEST(MaxRatio, PathAndCycleClosedForms) {
  // Path: max(1/r, m/((s-l)m + l - s + r)); cycle: max(1/r, m/((s-l)m - s + r)).
  for (int s = 2; s <= 6; ++s)
    for (int ell = 1; ell < s; ++ell)
      for (int m = 1; (s - ell) * m + ell <= 12; ++m)
        for (int r = 1; r <= s; ++r) {
          Rational path_form = std::max(q(1, r), q(m, (s - ell) * m + ell - s + r));
          EXPECT_EQ(max_edge_vertex_ratio(build_target(TightPath{m, s, ell}), r).value, path_form);
          int k = (s - ell) * m;
          if (m >= (s + 1) / (s - ell) && k >= s + 1 && k <= 12) {
            Rational cyc_form = std::max(q(1, r), q(m, k - s + r));
            EXPECT_EQ(max_edge_vertex_ratio(build_target(TightCycle{m, s, ell}), r).value, cyc_form)
                << "m=" << m << " s=" << s << " ell=" << ell << " r=" << r;
          }
        }
}

TEST(Balance, TightCyclesAreEdgeBalanced) {
  for (auto [m, s] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {6, 4}}) {
    auto c = build_target(TightCycle{m, s, s - 1});
    auto rep = balance_report(c);
    EXPECT_TRUE(rep.is_edge_balanced);
    EXPECT_TRUE(rep.is_balanced);
    EXPECT_EQ(rep.is_edge_balanced, oracle::brute_edge_balanced(c));
  }
}

TEST(Balance, CliquesAreEdgeBalanced) {
  for (int r = 2; r <= 3; ++r)
    for (int t = r + 1; t <= 6; ++t) EXPECT_TRUE(balance_report(build_target(Clique{t, r})).is_edge_balanced);
}

TEST(Balance, DensityOfTightCycle) {
  auto c7 = build_target(TightCycle{7, 3, 2});
  EXPECT_EQ(balance_report(c7).g, q(3, 2));
  EXPECT_EQ(edge_density(c7), oracle::g_of(7, 7, 3));
}

TEST(Balance, AgreesWithBruteForceAndImpliesBalanced) {
  std::mt19937_64 rng(1234);
  int balanced = 0, unbalanced = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int u = 2 + trial % 2;
    auto f = oracle::random_hypergraph(rng, u, 6, 0.3);
    // A single edge plus isolated vertices is edge-balanced by definition but not balanced.
    if (f.edge_count() == 0 || f.edge_count() > 16 || f.covered_vertices().size() != f.vertex_count()) continue;
    auto rep = balance_report(f, 2);
    EXPECT_EQ(rep.is_edge_balanced, oracle::brute_edge_balanced(f));
    if (rep.is_edge_balanced) {
      EXPECT_TRUE(rep.is_balanced);
      ++balanced;
    } else {
      EXPECT_TRUE(rep.witness.has_value());
      ++unbalanced;
    }
  }
  EXPECT_GT(balanced, 5);
  EXPECT_GT(unbalanced, 5);
}

TEST(Degeneracy, PathsCyclesCliques) {
  for (int s = 2; s <= 5; ++s)
    for (int ell = 1; ell < s; ++ell)
      for (int m = 1; m <= 6; ++m) {
        EXPECT_EQ(degeneracy(build_target(TightPath{m, s, ell})), 1);
        int k = (s - ell) * m;
        if (m >= (s + 1) / (s - ell) && k >= s + 1)
          EXPECT_EQ(degeneracy(build_target(TightCycle{m, s, ell})), s / (s - ell));
      }
  for (int s = 2; s <= 5; ++s) {
    auto k = build_target(Clique{s + 1, s});
    EXPECT_EQ(degeneracy(k), s);
    EXPECT_EQ(oracle::brute_degeneracy(k), s);
  }
}

TEST(Degeneracy, AgreesWithBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = oracle::random_hypergraph(rng, 2 + trial % 3, 8, 0.3);
    if (trial % 5 == 0 && h.edge_count()) h.add_edge(h.distinct_edges().front());
    EXPECT_EQ(degeneracy(h), oracle::brute_degeneracy(h));
  }
}

TEST(SplitLevel, SpotValues) {
  EXPECT_EQ(clique_split_level(2, 3, 6), 2);
  EXPECT_EQ(clique_split_level(2, 3, 7), 2);
  EXPECT_EQ(clique_split_level(2, 3, 8), 3);
  EXPECT_EQ(clique_split_level(2, 3, 20), 11);
  for (int s = 3; s <= 7; ++s)
    for (int r = 2; r < s; ++r) EXPECT_EQ(clique_split_level(r, s, s), s - r);
  EXPECT_THROW(clique_split_level(3, 3, 5), ParameterError);
}

TEST(SplitLevel, ClosedFormAndQuadratic) {
  for (long long k = 4; k <= 500; ++k) {
    long long level = clique_split_level(2, 3, k);
    EXPECT_EQ(level, split_level_closed_form(k)) << k;
    long long quad = 0;
    while (quad * quad - (2 * k + 3) * quad + k * k - 3 * k + 2 > 0) ++quad;
    EXPECT_EQ(level, quad) << k;
  }
}

TEST(SplitLevel, RangeAndMonotoneExponent) {
  for (int s = 3; s <= 6; ++s)
    for (int r = 2; r < s; ++r)
      for (int k = s; k <= 14; ++k) {
        long long level = clique_split_level(r, s, k);
        EXPECT_GE(level, s - r);
        EXPECT_LE(level, k - r);
        for (long long l = std::max(1, s - r); l + 1 <= k - r; ++l)
          EXPECT_LT(clique_upper_exponent(r, s, k, l), clique_upper_exponent(r, s, k, l + 1));
      }
}

TEST(FallingQuotient, Values) {
  EXPECT_EQ(falling_factorial_quotient(6, 2, 3), 30);
  for (int s = 1; s <= 5; ++s)
    for (int k = 1; k <= 12; ++k) EXPECT_EQ(falling_factorial_quotient(k, k - 1, s), Rational(falling(k, s) - falling(k - 1, s)));
  EXPECT_THROW(falling_factorial_quotient(3, 3, 2), ParameterError);
}

TEST(Starplus, CliqueOnFiveVertices) {
  auto k5 = build_target(Clique{5, 3});
  auto d = starplus_decompose(k5, 1);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->rays, 6);
  EXPECT_EQ(d->excess, 4);
  EXPECT_EQ(d->center, VertexSet{1});
  auto k4 = build_target(Clique{4, 3});
  EXPECT_TRUE(contains_copy(d->cap, k4));
  EXPECT_EQ(d->density_condition, ConditionStatus::equality);
  EXPECT_TRUE(d->flower_edge_balanced);
}

TEST(Starplus, TwoVertexCenter) {
  auto h = two_center_starplus();
  auto d = starplus_decompose(h, 2);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->center, (VertexSet{1, 2}));
  EXPECT_EQ(d->rays, 5);
  EXPECT_EQ(d->excess, 3);
  MultiHypergraph k4_minus_edge(2, 4);
  for (const auto& e : std::vector<VertexSet>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}) k4_minus_edge.add_edge(e);
  EXPECT_EQ(d->flower, k4_minus_edge);
}

TEST(Starplus, SingleEdge) {
  auto d = starplus_decompose(build_target(Clique{3, 3}), 1);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->rays, 1);
  EXPECT_EQ(d->excess, 0);
}

TEST(Thresholds, CliqueOnFiveVerticesIsTight) {
  auto rep = threshold_report(build_target(Clique{5, 3}), 2);
  EXPECT_EQ(rep.best_lower, q(8, 5));
  ASSERT_TRUE(rep.best_upper);
  EXPECT_EQ(*rep.best_upper, q(8, 5));
  EXPECT_TRUE(rep.tight);
  ASSERT_TRUE(find_bound(rep.upper_bounds, "full_starplus"));
}

TEST(Thresholds, CliqueOnSixVertices) {
  auto rep = threshold_report(build_target(Clique{6, 3}), 2);
  EXPECT_EQ(rep.lower_general, q(7, 4));
  ASSERT_TRUE(find_bound(rep.upper_bounds, "clique_three_phase"));
  EXPECT_EQ(find_bound(rep.upper_bounds, "clique_three_phase")->exponent, q(9, 5));
  ASSERT_TRUE(find_bound(rep.upper_bounds, "generic_starplus_embedding"));
  EXPECT_EQ(find_bound(rep.upper_bounds, "generic_starplus_embedding")->exponent, Rational(2) - q(2, 11));
  EXPECT_FALSE(find_bound(rep.upper_bounds, "balanced_starplus"));
  EXPECT_FALSE(rep.tight);
}

TEST(Thresholds, LargerCliques) {
  auto k7 = threshold_report(build_target(Clique{7, 3}), 2);
  EXPECT_EQ(k7.lower_general, q(64, 35));
  EXPECT_EQ(find_bound(k7.upper_bounds, "clique_three_phase")->exponent, q(13, 7));
  auto k8 = threshold_report(build_target(Clique{8, 3}), 2);
  EXPECT_EQ(find_bound(k8.upper_bounds, "clique_three_phase")->exponent, Rational(2) - q(5, 55));
}

TEST(Thresholds, PendantTriple) {
  auto rep = threshold_report(clique_with_pendant_triple(), 2);
  EXPECT_EQ(rep.lower_general, q(6, 5));
  EXPECT_EQ(rep.lower_mu, q(5, 4));
  EXPECT_EQ(rep.mu, q(4, 3));
}

TEST(Thresholds, LooseCycleOfQuadruples) {
  for (int m = 4; m <= 6; ++m) {
    auto rep = threshold_report(build_target(TightCycle{m, 4, 2}), 2);
    EXPECT_EQ(rep.best_lower, q(2, 3));
    EXPECT_TRUE(rep.tight);
    EXPECT_EQ(rep.lower_mu, q(2, m));
  }
}

TEST(Thresholds, Wheel) {
  auto rep = threshold_report(build_target(Wheel{8, 5, 1}), 4);
  EXPECT_EQ(rep.best_lower, q(7, 2));
  ASSERT_TRUE(find_bound(rep.upper_bounds, "balanced_starplus"));
  EXPECT_EQ(find_bound(rep.upper_bounds, "balanced_starplus")->exponent, q(7, 2));
  EXPECT_TRUE(rep.tight);
}

TEST(Thresholds, Invariants) {
  std::vector<MultiHypergraph> targets = {build_target(Clique{4, 3}), build_target(Clique{6, 3}),
                                          build_target(TightPath{4, 3, 1}), build_target(TightCycle{5, 3, 2}),
                                          clique_with_pendant_triple(), two_center_starplus()};
  for (const auto& h : targets)
    for (int r = 1; r < h.uniformity(); ++r) {
      auto rep = threshold_report(h, r);
      EXPECT_GE(rep.lower_mu, rep.lower_general);
      for (const auto& lo : rep.lower_bounds) {
        EXPECT_GE(lo.exponent, 0);
        EXPECT_LE(lo.exponent, r);
        for (const auto& up : rep.upper_bounds) EXPECT_LE(lo.exponent, up.exponent) << lo.source << " vs " << up.source;
      }
    }
  EXPECT_THROW(threshold_report(build_target(Clique{4, 3}), 3), ParameterError);
}

TEST(Thresholds, JsonCarriesExactRationals) {
  auto j = report_to_json(threshold_report(build_target(Clique{5, 3}), 2));
  EXPECT_EQ(j["best_upper"]["num"], 8);
  EXPECT_EQ(j["best_upper"]["den"], 5);
  EXPECT_EQ(j["best_upper"]["approx"], "1.6");
  EXPECT_TRUE(j["tight"].get<bool>());
}

TEST(LoosePathCycle, Regimes) {
  EXPECT_EQ(loose_path_cycle_threshold(LooseKind::path, 3, 5, 2, 2), 0);
  EXPECT_EQ(loose_path_cycle_threshold(LooseKind::cycle, 4, 3, 1, 2), q(1, 2));
  EXPECT_EQ(loose_path_cycle_threshold(LooseKind::cycle, 4, 4, 2, 2), q(2, 3));
  EXPECT_EQ(loose_path_cycle_threshold(LooseKind::cycle, 4, 5, 1, 2), 0);
  EXPECT_THROW(loose_path_cycle_threshold(LooseKind::cycle, 4, 3, 2, 1), ParameterError);
  EXPECT_THROW(loose_path_cycle_threshold(LooseKind::path, 2, 5, 2, 2), ParameterError);
}
