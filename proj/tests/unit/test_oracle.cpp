#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semirandom/analysis.hpp"
#include "semirandom/oracle/appendix.hpp"
#include "semirandom/oracle/expectation.hpp"
#include "semirandom/oracle/hit_dp.hpp"
#include "semirandom/oracle/phi.hpp"
#include "semirandom/strategies/baseline.hpp"

using namespace semirandom;

namespace {

Rational pow_rational(const Rational& x, std::uint64_t k) {
  Rational out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= x;
  return out;
}

MultiHypergraph graph_from(int s, Vertex n, const std::vector<VertexSet>& edges) {
  MultiHypergraph h(s, n);
  for (const auto& e : edges) h.add_edge(e);
  return h;
}

}  // namespace

TEST(HitDp, SingleSetMatchesComplement) {
  // n = 10, r = 2: 45 outcomes; P(hit once in t draws) = 1 - (44/45)^t.
  for (std::uint64_t t : {0u, 1u, 5u, 40u}) {
    auto h = exact_hit_probability({1}, 10, 2, t, DpMode::exact);
    ASSERT_TRUE(h.exact.has_value());
    EXPECT_EQ(*h.exact, Rational(1) - pow_rational(make_rational(44, 45), t));
  }
}

TEST(HitDp, TwoSetsMatchInclusionExclusion) {
  const std::uint64_t t = 30;
  auto h = exact_hit_probability({1, 1}, 10, 2, t, DpMode::exact);
  Rational want = Rational(1) - 2 * pow_rational(make_rational(44, 45), t) + pow_rational(make_rational(43, 45), t);
  EXPECT_EQ(*h.exact, want);
}

TEST(HitDp, MatchesSequenceEnumeration) {
  // n = 4, r = 2: 6 outcomes, every draw sequence of length t enumerated.
  const std::vector<std::vector<int>> cases{{2}, {2, 1}, {1, 1, 1}, {2, 2}, {3, 1}};
  for (const auto& mult : cases)
    for (int t = 0; t <= 6; ++t) {
      auto h = exact_hit_probability(mult, 4, 2, static_cast<std::uint64_t>(t), DpMode::exact);
      EXPECT_EQ(*h.exact, oracle::brute_hit_probability(mult, 6, t)) << "t=" << t;
    }
}

TEST(HitDp, FloatingAgreesWithExactAndConservesMass) {
  auto exact = exact_hit_probability({2, 1, 1}, 30, 2, 300, DpMode::exact);
  auto fl = exact_hit_probability({2, 1, 1}, 30, 2, 300, DpMode::floating);
  EXPECT_EQ(fl.mode, "floating");
  EXPECT_NEAR(fl.value, exact.value, 1e-12);
  EXPECT_LT(fl.mass_error, 1e-12);
}

TEST(HitDp, MonotoneInBudgetAndGroundSet) {
  double prev = 0;
  for (std::uint64_t t = 0; t <= 400; t += 50) {
    double v = exact_hit_probability({2, 1}, 40, 2, t).value;
    EXPECT_GE(v, prev);
    prev = v;
  }
  prev = 1;
  for (Vertex n : {20u, 40u, 80u, 160u}) {
    double v = exact_hit_probability({2, 1}, n, 2, 200).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(HitDp, AsymptoticFormulaForSmallBudget) {
  // Few draws against many outcomes: the DP approaches p^m / prod m_i!.
  auto h = exact_hit_probability({2, 1}, 2000, 2, 2000);
  double a = asymptotic_hit_probability({2, 1}, 2000, 2, 2000);
  EXPECT_NEAR(h.value / a, 1.0, 0.01);
}

TEST(HitDp, RejectsBadInput) {
  EXPECT_THROW(exact_hit_probability({0}, 10, 2, 5), ParameterError);
  EXPECT_THROW(exact_hit_probability({1}, 1, 2, 5), ParameterError);
  EXPECT_THROW(exact_hit_probability(std::vector<int>(8, 9), 100, 2, 5), ResourceError);
}

TEST(Phi, SingleEdge) {
  auto f = graph_from(3, 3, {{1, 2, 3}});
  const long double lp = std::log(0.01L);
  auto res = phi_F(f, 1000, lp);
  EXPECT_NEAR(static_cast<double>(res.log_value), static_cast<double>(3 * std::log(1000.0L) + lp), 1e-12);
  EXPECT_EQ(res.v, 3);
  EXPECT_EQ(res.e, 1);
}

TEST(Phi, EdgeBalancedMinimizerIsWholeGraph) {
  for (auto f : {build_target(TightCycle{5, 3, 2}), build_target(Clique{4, 2}), build_target(Clique{5, 3})}) {
    ASSERT_TRUE(balance_report(f).is_edge_balanced);
    const Rational g = balance_report(f).g;
    const Vertex n = 100000;
    const long double ln = std::log(static_cast<long double>(n));
    const long double lp = -ln / static_cast<long double>(to_double(g)) - std::log(ln);
    auto res = phi_F(f, n, lp);
    EXPECT_EQ(res.v, static_cast<int>(f.vertex_count()));
    EXPECT_EQ(res.e, static_cast<long long>(f.edge_count()));
    EXPECT_NEAR(static_cast<double>(res.log_value), static_cast<double>(oracle::brute_log_phi(f, n, lp)), 1e-9);
  }
}

TEST(Phi, TrianglePlusPendantPicksTriangle) {
  auto f = graph_from(2, 4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
  const Vertex n = 10000;
  const long double lp = -std::log(static_cast<long double>(n)) * 0.9L;
  auto res = phi_F(f, n, lp);
  EXPECT_EQ(res.argmin.vertices, (VertexSet{1, 2, 3}));
  EXPECT_NEAR(static_cast<double>(res.log_value), static_cast<double>(oracle::brute_log_phi(f, n, lp)), 1e-9);
}

TEST(Phi, AgreesWithEdgeSubsetEnumeration) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    auto f = oracle::random_hypergraph(rng, 2, 7, 0.5);
    if (f.edge_count() == 0 || f.distinct_edges().size() > 16) continue;
    for (double alpha : {0.3, 0.7, 1.2}) {
      const long double lp = -alpha * std::log(1000.0L);
      auto res = phi_F(f, 1000, lp);
      EXPECT_NEAR(static_cast<double>(res.log_value), static_cast<double>(oracle::brute_log_phi(f, 1000, lp)), 1e-9);
    }
  }
  EXPECT_THROW(phi_F(build_target(Clique{4, 2}), 10, Rational(1)), ParameterError);
}

TEST(DenseSets, MatchBruteForce) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    auto g = oracle::random_hypergraph(rng, 3, 10, 0.08);
    if (g.edge_count() == 0) continue;
    g.add_edge(g.distinct_edges().front());  // a repeated edge
    for (int k : {3, 4, 5, 6}) {
      for (long long m : {2LL, 3LL, 4LL}) {
        auto c = count_dense_sets(g, k, m);
        EXPECT_EQ(c.at_least_one, oracle::brute_dense_sets(g, k, 1));
        EXPECT_EQ(c.at_least_m, oracle::brute_dense_sets(g, k, m));
      }
    }
  }
}

TEST(CountingBound, Values) {
  EXPECT_EQ(counting_bound(1, 4, 3, 2, 100, 0), 0.0L);
  // j = 1: t n^{k-s}.
  EXPECT_NEAR(static_cast<double>(counting_bound(1, 4, 3, 2, 100, 50)), 5000.0, 1e-6);
  // j = 4, k = 4, s = 3, r = 2: t^4 4^6 n^{-5}.
  EXPECT_NEAR(static_cast<double>(counting_bound(4, 4, 3, 2, 10, 10)), 1e4 * 4096 * 1e-5, 1e-6);
}

TEST(Expectation, BaselineRespectsDeterministicBound) {
  auto h = build_target(Clique{4, 3});
  StrategyFactory factory = [] { return std::make_unique<BaselineRandom>(); };
  auto rep = expectation_bound_check(h, 2, factory, 40, 40, 4, 3);
  EXPECT_TRUE(rep.deterministic_ok);
  EXPECT_EQ(rep.x1.size(), 4u);
  EXPECT_GT(rep.mean_x1, 0.0);
}

TEST(Appendix, AllClaimsPassOnDefaultRanges) {
  auto rep = verify_appendix();
  EXPECT_EQ(rep.claims.size(), appendix_claim_ids().size());
  for (const auto& c : rep.claims) {
    EXPECT_TRUE(c.pass) << claim_to_json(c).dump();
    EXPECT_GT(c.checked, 0u) << c.id;
  }
  EXPECT_TRUE(appendix_report_to_json(rep)["all_pass"].get<bool>());
}

TEST(Appendix, RangesFromJson) {
  auto rg = appendix_ranges_from_json({{"quad_max_k", 50}});
  EXPECT_EQ(rg.quad_max_k, 50);
  EXPECT_THROW(appendix_ranges_from_json({{"bogus", 1}}), ParameterError);
  EXPECT_THROW(appendix_ranges_from_json({{"ebal_r2_vertices", 9}}), ResourceError);
  EXPECT_THROW(run_appendix_claim("nonexistent"), ParameterError);
}
