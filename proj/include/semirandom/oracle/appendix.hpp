#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "semirandom/analysis.hpp"
#include "semirandom/clique_split.hpp"
#include "semirandom/containment.hpp"
#include "semirandom/starplus.hpp"
#include "semirandom/targets.hpp"

// Finite-range checks of the combinatorial facts the threshold bounds rest on. Each check
// enumerates its range and reports the first counterexample, if any.

namespace semirandom {

struct AppendixRanges {
  int ebal_r2_vertices = 7;
  int ebal_r3_vertices = 6;
  int loose_max_s = 6;
  int loose_max_vertices = 12;
  int tight_cycle_max_s = 5;
  int tight_cycle_max_m = 14;
  int clique_max_vertices = 10;
  int ineq_min_s = 3;
  int ineq_max_s = 12;
  int starbal_max_k = 8;
  int starbal_max_s = 5;
  int starbal_samples = 200;
  int mono_max_s = 8;
  int mono_max_k = 30;
  int quad_min_k = 4;
  int quad_max_k = 500;
  int estimate_max_a = 20;
  int estimate_max_k = 500;
};

struct ClaimResult {
  std::string id;
  nlohmann::json range;
  bool pass = true;
  std::uint64_t checked = 0;
  std::optional<nlohmann::json> counterexample;

  void fail(nlohmann::json witness) {
    if (!counterexample) counterexample = std::move(witness);
    pass = false;
  }
};

inline nlohmann::json claim_to_json(const ClaimResult& c) {
  nlohmann::json j = {{"claim", c.id}, {"range", c.range}, {"status", c.pass ? "pass" : "fail"}, {"checked", c.checked}};
  if (c.counterexample) j["counterexample"] = *c.counterexample;
  return j;
}

namespace appendix {

inline nlohmann::json edges_json(const MultiHypergraph& h) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, m] : h.sorted_edges())
    for (int i = 0; i < m; ++i) arr.push_back(e);
  return arr;
}

// Every edge-balanced r-graph without isolated vertices on at most `max_v` labels is balanced.
// Graphs are edge masks over the r-subsets of [max_v]; sub-graphs are induced on vertex masks.
inline void edge_balanced_implies_balanced(ClaimResult& res, int r, int max_v) {
  std::vector<std::uint64_t> edge_masks;
  for_each_subset(vertex_range(1, static_cast<Vertex>(max_v)), static_cast<std::size_t>(r), [&](const VertexSet& e) {
    std::uint64_t m = 0;
    for (Vertex v : e) m |= std::uint64_t{1} << (v - 1);
    edge_masks.push_back(m);
    return true;
  });
  const std::size_t q = edge_masks.size();
  if (q > 30) throw ResourceError("edge-balanced enumeration limited to 30 possible edges");
  const std::uint32_t vsets = 1u << max_v;
  // inside[w] = edges (as a mask over the q candidates) contained in vertex set w.
  std::vector<std::uint32_t> inside(vsets, 0);
  for (std::uint32_t w = 0; w < vsets; ++w)
    for (std::size_t i = 0; i < q; ++i)
      if ((edge_masks[i] & ~static_cast<std::uint64_t>(w)) == 0) inside[w] |= 1u << i;
  for (std::uint32_t graph = 1; graph < (1u << q); ++graph) {
    std::uint32_t cover = 0;
    for (std::size_t i = 0; i < q; ++i)
      if (graph >> i & 1) cover |= static_cast<std::uint32_t>(edge_masks[i]);
    const long long v = __builtin_popcount(cover), e = __builtin_popcount(graph);
    bool edge_balanced = true, balanced = true;
    for (std::uint32_t w = cover; w; w = (w - 1) & cover) {
      const long long ew = __builtin_popcount(graph & inside[w]);
      if (ew == 0) continue;
      const long long vw = __builtin_popcount(w);
      // g(W) <= g(F), with g = 1/r for one edge and (e-1)/(v-r) otherwise.
      const long long gn = ew == 1 ? 1 : ew - 1, gd = ew == 1 ? r : vw - r;
      const long long fn = e == 1 ? 1 : e - 1, fd = e == 1 ? r : v - r;
      if (gn * fd > fn * gd) {
        edge_balanced = false;
        break;
      }
      if (ew * v > e * vw) balanced = false;
    }
    ++res.checked;
    if (edge_balanced && !balanced) {
      nlohmann::json edges = nlohmann::json::array();
      for (std::size_t i = 0; i < q; ++i)
        if (graph >> i & 1) edges.push_back(mask_to_set(edge_masks[i]));
      res.fail({{"r", r}, {"edges", edges}});
      return;
    }
  }
}

struct LooseShapeParams {
  int m, s, ell;
};

// (m, s, l) with a well-defined l-cycle on at most max_v vertices.
inline std::vector<LooseShapeParams> cycle_grid(int max_s, int max_v) {
  std::vector<LooseShapeParams> out;
  for (int s = 2; s <= max_s; ++s)
    for (int ell = 1; ell < s; ++ell)
      for (int m = 2; (s - ell) * m <= max_v; ++m)
        if ((s - ell) * m >= s + 1 && m >= (s + 1) / (s - ell)) out.push_back({m, s, ell});
  return out;
}

inline std::vector<LooseShapeParams> path_grid(int max_s, int max_v) {
  std::vector<LooseShapeParams> out;
  for (int s = 2; s <= max_s; ++s)
    for (int ell = 1; ell < s; ++ell)
      for (int m = 1; (s - ell) * m + ell <= max_v; ++m) out.push_back({m, s, ell});
  return out;
}

inline nlohmann::json shape_json(const char* family, const LooseShapeParams& p) {
  return {{"family", family}, {"m", p.m}, {"s", p.s}, {"ell", p.ell}};
}

}  // namespace appendix

inline ClaimResult check_edge_balanced_implies_balanced(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "edge_balanced_implies_balanced";
  res.range = {{"r2_max_vertices", rg.ebal_r2_vertices}, {"r3_max_vertices", rg.ebal_r3_vertices},
               {"note", "graphs without isolated vertices"}};
  appendix::edge_balanced_implies_balanced(res, 2, rg.ebal_r2_vertices);
  if (res.pass) appendix::edge_balanced_implies_balanced(res, 3, rg.ebal_r3_vertices);
  return res;
}

inline ClaimResult check_path_cycle_degeneracy(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "path_cycle_degeneracy";
  res.range = {{"max_s", rg.loose_max_s}, {"max_vertices", rg.loose_max_vertices}};
  for (const auto& p : appendix::path_grid(rg.loose_max_s, rg.loose_max_vertices)) {
    ++res.checked;
    long long d = degeneracy(build_target(TightPath{p.m, p.s, p.ell}));
    if (d != 1) res.fail({{"target", appendix::shape_json("tight_path", p)}, {"degeneracy", d}, {"expected", 1}});
  }
  for (const auto& p : appendix::cycle_grid(rg.loose_max_s, rg.loose_max_vertices)) {
    ++res.checked;
    long long d = degeneracy(build_target(TightCycle{p.m, p.s, p.ell}));
    long long want = p.s / (p.s - p.ell);
    if (d != want) res.fail({{"target", appendix::shape_json("tight_cycle", p)}, {"degeneracy", d}, {"expected", want}});
  }
  return res;
}

inline ClaimResult check_path_cycle_max_density(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "path_cycle_max_density";
  res.range = {{"max_s", rg.loose_max_s}, {"max_vertices", rg.loose_max_vertices}, {"r", "2..s"}};
  for (const auto& p : appendix::path_grid(rg.loose_max_s, rg.loose_max_vertices)) {
    auto h = build_target(TightPath{p.m, p.s, p.ell});
    for (int r = 2; r <= p.s; ++r) {
      ++res.checked;
      Rational want = r <= p.s - p.ell ? make_rational(1, r)
                                        : make_rational(p.m, (p.s - p.ell) * p.m + p.ell - p.s + r);
      Rational got = max_edge_vertex_ratio(h, r).value;
      if (got != want)
        res.fail({{"target", appendix::shape_json("tight_path", p)}, {"r", r}, {"mu", to_string(got)},
                  {"expected", to_string(want)}});
    }
  }
  for (const auto& p : appendix::cycle_grid(rg.loose_max_s, rg.loose_max_vertices)) {
    auto h = build_target(TightCycle{p.m, p.s, p.ell});
    for (int r = 2; r <= p.s; ++r) {
      ++res.checked;
      Rational want = std::max(make_rational(p.m, (p.s - p.ell) * p.m - p.s + r), make_rational(1, r));
      Rational got = max_edge_vertex_ratio(h, r).value;
      if (got != want)
        res.fail({{"target", appendix::shape_json("tight_cycle", p)}, {"r", r}, {"mu", to_string(got)},
                  {"expected", to_string(want)}});
      // r >= s - l: the cycle is r-balanced.
      if (r >= p.s - p.ell && got != edge_vertex_ratio(h, r))
        res.fail({{"target", appendix::shape_json("tight_cycle", p)}, {"r", r}, {"not_r_balanced", true}});
    }
  }
  return res;
}

inline ClaimResult check_tight_cycle_edge_balanced(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "tight_cycle_edge_balanced";
  res.range = {{"s", {2, rg.tight_cycle_max_s}}, {"m", "s+1.." + std::to_string(rg.tight_cycle_max_m)}};
  for (int s = 2; s <= rg.tight_cycle_max_s; ++s)
    for (int m = s + 1; m <= rg.tight_cycle_max_m; ++m) {
      ++res.checked;
      auto h = build_target(TightCycle{m, s, s - 1});
      if (!balance_report(h).is_edge_balanced) res.fail({{"m", m}, {"s", s}});
    }
  return res;
}

inline ClaimResult check_clique_edge_balanced(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "clique_edge_balanced";
  res.range = {{"r", "2..t-1"}, {"t", {3, rg.clique_max_vertices}}};
  for (int t = 3; t <= rg.clique_max_vertices; ++t)
    for (int r = 2; r < t; ++r) {
      ++res.checked;
      if (!balance_report(build_target(Clique{t, r})).is_edge_balanced) res.fail({{"t", t}, {"r", r}});
    }
  return res;
}

// C(k-1, s) <= ((s-1) C(k-1, s-1) - (k-1)) / (k-s) for s < k <= 2s-1.
inline ClaimResult check_full_starplus_clique_inequality(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "full_starplus_clique_inequality";
  res.range = {{"s", {rg.ineq_min_s, rg.ineq_max_s}}, {"k", "s+1..2s-1"}};
  for (long long s = rg.ineq_min_s; s <= rg.ineq_max_s; ++s)
    for (long long k = s + 1; k <= 2 * s - 1; ++k) {
      ++res.checked;
      Rational lhs(binom(k - 1, s));
      Rational rhs = make_rational((s - 1) * binom(k - 1, s - 1) - (k - 1), k - s);
      if (lhs > rhs) res.fail({{"s", s}, {"k", k}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}});
    }
  return res;
}

// Full (s, s-r)-starpluses with excess within the limit are r-balanced. Caps are all admissible
// edge sets when few, otherwise a fixed-seed sample.
inline ClaimResult check_full_starplus_r_balanced(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "full_starplus_r_balanced";
  res.range = {{"max_k", rg.starbal_max_k}, {"max_s", rg.starbal_max_s}, {"samples_per_excess", rg.starbal_samples}};
  std::mt19937_64 rng(20240611);
  for (int s = 3; s <= rg.starbal_max_s; ++s)
    for (int r = 2; r < s; ++r)
      for (int k = s + 1; k <= rg.starbal_max_k; ++k) {
        const int c = s - r;
        const VertexSet center = vertex_range(1, static_cast<Vertex>(c));
        std::vector<VertexSet> free_edges;
        for_each_subset(vertex_range(1, static_cast<Vertex>(k)), static_cast<std::size_t>(s), [&](const VertexSet& e) {
          if (!is_subset(center, e)) free_edges.push_back(e);
          return true;
        });
        Rational limit = full_starplus_excess_limit(k, s, r);
        long long max_excess = std::min<long long>(floor_of(limit).convert_to<long long>(),
                                                   static_cast<long long>(free_edges.size()));
        for (long long lambda = 0; lambda <= max_excess; ++lambda) {
          std::vector<std::vector<VertexSet>> caps;
          BigInt total = binom(static_cast<long long>(free_edges.size()), lambda);
          if (total <= rg.starbal_samples) {
            std::vector<Vertex> idx(free_edges.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<Vertex>(i);
            for_each_subset(idx, static_cast<std::size_t>(lambda), [&](const VertexSet& pick) {
              std::vector<VertexSet> cap;
              for (Vertex i : pick) cap.push_back(free_edges[i]);
              caps.push_back(cap);
              return true;
            });
          } else {
            for (int i = 0; i < rg.starbal_samples; ++i) {
              std::vector<VertexSet> pool = free_edges;
              std::shuffle(pool.begin(), pool.end(), rng);
              caps.emplace_back(pool.begin(), pool.begin() + lambda);
            }
          }
          for (const auto& cap : caps) {
            ++res.checked;
            auto h = build_target(FullStarplus{k, s, c, cap});
            if (!is_r_balanced(h, r)) {
              res.fail({{"k", k}, {"s", s}, {"r", r}, {"cap", cap}});
              return res;
            }
          }
        }
      }
  return res;
}

// f_s(k, l) = ((k)_s - (l)_s) / (k - l): equals its sum form, never decreases in k or l, and
// increases strictly in both once s >= 2 and k >= s (f_1 is constant).
inline ClaimResult check_falling_factorial_quotient_monotone(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "falling_factorial_quotient_monotone";
  res.range = {{"s", {1, rg.mono_max_s}}, {"k", {1, rg.mono_max_k}}, {"l", "0..k-1"}};
  for (long long s = 1; s <= rg.mono_max_s; ++s)
    for (long long k = 1; k <= rg.mono_max_k; ++k)
      for (long long l = 0; l < k; ++l) {
        ++res.checked;
        Rational f = falling_factorial_quotient(k, l, s);
        BigInt sum = 0;
        for (long long i = 1; i <= s; ++i) sum += falling(l, s - i) * falling(k - s + i - 1, i - 1);
        if (f != Rational(sum)) res.fail({{"s", s}, {"k", k}, {"l", l}, {"sum_form", to_string(Rational(sum))}});
        Rational fk = falling_factorial_quotient(k + 1, l, s);
        bool strict = s >= 2 && k >= s;
        if (fk < f || (strict && fk == f)) res.fail({{"s", s}, {"k", k}, {"l", l}, {"direction", "k"}});
        if (l + 1 < k) {
          Rational fl = falling_factorial_quotient(k, l + 1, s);
          if (fl < f || (strict && fl == f)) res.fail({{"s", s}, {"k", k}, {"l", l}, {"direction", "l"}});
        }
      }
  return res;
}

// For r = 2, s = 3 and levels 1 <= l <= k - 2 the split constraint is equivalent to
// l^2 - (2k+3) l + k^2 - 3k + 2 <= 0, and the smallest admissible level matches the closed form.
inline ClaimResult check_split_level_quadratic(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "split_level_quadratic";
  res.range = {{"k", {rg.quad_min_k, rg.quad_max_k}}, {"l", "1..k-2"}};
  for (long long k = rg.quad_min_k; k <= rg.quad_max_k; ++k) {
    for (long long l = 1; l <= k - 2; ++l) {
      ++res.checked;
      bool constraint = clique_split_slack(2, 3, k, l) <= 0;
      bool quad = l * l - (2 * k + 3) * l + k * k - 3 * k + 2 <= 0;
      if (constraint != quad) res.fail({{"k", k}, {"l", l}, {"constraint", constraint}, {"quadratic", quad}});
    }
    long long level = clique_split_level(2, 3, k);
    if (level != split_level_closed_form(k)) res.fail({{"k", k}, {"level", level}, {"closed_form", split_level_closed_form(k)}});
  }
  return res;
}

// l_k <= k + 5/2 - sqrt(6k + 1/4) <= k - a for every k >= a(a+5)/6 + 1.
inline ClaimResult check_split_level_upper_estimate(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "split_level_upper_estimate";
  res.range = {{"a", {1, rg.estimate_max_a}}, {"k", "a(a+5)/6+1.." + std::to_string(rg.estimate_max_k)}};
  for (long long k = 3; k <= rg.estimate_max_k; ++k) {
    long long level = clique_split_level(2, 3, k);
    // level <= k + 5/2 - sqrt(6k + 1/4)  <=>  2k + 5 - 2 level >= 0 and (2k + 5 - 2 level)^2 >= 24k + 1.
    long long d = 2 * k + 5 - 2 * level;
    ++res.checked;
    if (d < 0 || d * d < 24 * k + 1) res.fail({{"k", k}, {"level", level}, {"bound", "k+5/2-sqrt(6k+1/4)"}});
    for (long long a = 1; a <= rg.estimate_max_a; ++a) {
      if (6 * k < a * (a + 5) + 6) continue;
      ++res.checked;
      // k + 5/2 - sqrt(6k + 1/4) <= k - a  <=>  (2a + 5)^2 <= 24k + 1.
      if ((2 * a + 5) * (2 * a + 5) > 24 * k + 1 || level > k - a) res.fail({{"k", k}, {"a", a}, {"level", level}});
    }
  }
  return res;
}

// Every induced proper sub-s-graph of an l-cycle (isolated vertices dropped) embeds in the path
// with one edge fewer; connected ones are spanning sub-s-graphs of a shorter path.
inline ClaimResult check_induced_subgraph_of_cycle_is_path_subgraph(const AppendixRanges& rg) {
  ClaimResult res;
  res.id = "induced_subgraph_of_cycle_is_path_subgraph";
  res.range = {{"max_s", rg.loose_max_s}, {"max_vertices", rg.loose_max_vertices}};
  for (const auto& p : appendix::cycle_grid(rg.loose_max_s, rg.loose_max_vertices)) {
    auto cycle = build_target(TightCycle{p.m, p.s, p.ell});
    const int v = static_cast<int>(cycle.vertex_count());
    MaskedEdges masked(cycle);
    std::set<std::uint64_t> seen;  // edge subsets already handled
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << v); ++w) {
      std::uint64_t edges = 0, cover = 0;
      for (std::size_t i = 0; i < masked.masks.size(); ++i)
        if ((masked.masks[i] & ~w) == 0) {
          edges |= std::uint64_t{1} << i;
          cover |= masked.masks[i];
        }
      if (edges == 0 || __builtin_popcountll(edges) == p.m || !seen.insert(edges).second) continue;
      ++res.checked;
      auto sub = induced(cycle, mask_to_set(cover)).graph;
      auto shorter = build_target(TightPath{p.m - 1, p.s, p.ell});
      if (!contains_copy(shorter, sub)) {
        res.fail({{"target", appendix::shape_json("tight_cycle", p)}, {"edges", appendix::edges_json(sub)}});
        continue;
      }
      // Connected: spanning in the path with the same number of vertices.
      std::uint64_t reach = masked.masks[static_cast<std::size_t>(__builtin_ctzll(edges))];
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < masked.masks.size(); ++i)
          if ((edges >> i & 1) && (masked.masks[i] & reach) && (masked.masks[i] & ~reach)) {
            reach |= masked.masks[i];
            grew = true;
          }
      }
      if (reach != cover) continue;
      const int sv = __builtin_popcountll(cover);
      if ((sv - p.ell) % (p.s - p.ell) != 0) {
        res.fail({{"target", appendix::shape_json("tight_cycle", p)}, {"edges", appendix::edges_json(sub)},
                  {"reason", "no path with the same vertex count"}});
        continue;
      }
      const int mp = (sv - p.ell) / (p.s - p.ell);
      if (mp >= p.m || !contains_copy(build_target(TightPath{mp, p.s, p.ell}), sub))
        res.fail({{"target", appendix::shape_json("tight_cycle", p)}, {"edges", appendix::edges_json(sub)},
                  {"reason", "not spanning in a shorter path"}});
    }
  }
  return res;
}

inline std::vector<std::string> appendix_claim_ids() {
  return {"edge_balanced_implies_balanced",
          "path_cycle_degeneracy",
          "path_cycle_max_density",
          "tight_cycle_edge_balanced",
          "clique_edge_balanced",
          "full_starplus_clique_inequality",
          "full_starplus_r_balanced",
          "falling_factorial_quotient_monotone",
          "split_level_quadratic",
          "split_level_upper_estimate",
          "induced_subgraph_of_cycle_is_path_subgraph"};
}

inline ClaimResult run_appendix_claim(const std::string& id, const AppendixRanges& rg = {}) {
  if (id == "edge_balanced_implies_balanced") return check_edge_balanced_implies_balanced(rg);
  if (id == "path_cycle_degeneracy") return check_path_cycle_degeneracy(rg);
  if (id == "path_cycle_max_density") return check_path_cycle_max_density(rg);
  if (id == "tight_cycle_edge_balanced") return check_tight_cycle_edge_balanced(rg);
  if (id == "clique_edge_balanced") return check_clique_edge_balanced(rg);
  if (id == "full_starplus_clique_inequality") return check_full_starplus_clique_inequality(rg);
  if (id == "full_starplus_r_balanced") return check_full_starplus_r_balanced(rg);
  if (id == "falling_factorial_quotient_monotone") return check_falling_factorial_quotient_monotone(rg);
  if (id == "split_level_quadratic") return check_split_level_quadratic(rg);
  if (id == "split_level_upper_estimate") return check_split_level_upper_estimate(rg);
  if (id == "induced_subgraph_of_cycle_is_path_subgraph") return check_induced_subgraph_of_cycle_is_path_subgraph(rg);
  throw ParameterError("verify: unknown claim '" + id + "'");
}

inline AppendixRanges appendix_ranges_from_json(const nlohmann::json& j) {
  AppendixRanges rg;
  if (j.is_null()) return rg;
  if (!j.is_object()) throw ParameterError("ranges must be a JSON object");
  struct Field {
    const char* key;
    int AppendixRanges::*member;
  };
  const Field fields[] = {{"ebal_r2_vertices", &AppendixRanges::ebal_r2_vertices},
                          {"ebal_r3_vertices", &AppendixRanges::ebal_r3_vertices},
                          {"loose_max_s", &AppendixRanges::loose_max_s},
                          {"loose_max_vertices", &AppendixRanges::loose_max_vertices},
                          {"tight_cycle_max_s", &AppendixRanges::tight_cycle_max_s},
                          {"tight_cycle_max_m", &AppendixRanges::tight_cycle_max_m},
                          {"clique_max_vertices", &AppendixRanges::clique_max_vertices},
                          {"ineq_min_s", &AppendixRanges::ineq_min_s},
                          {"ineq_max_s", &AppendixRanges::ineq_max_s},
                          {"starbal_max_k", &AppendixRanges::starbal_max_k},
                          {"starbal_max_s", &AppendixRanges::starbal_max_s},
                          {"starbal_samples", &AppendixRanges::starbal_samples},
                          {"mono_max_s", &AppendixRanges::mono_max_s},
                          {"mono_max_k", &AppendixRanges::mono_max_k},
                          {"quad_min_k", &AppendixRanges::quad_min_k},
                          {"quad_max_k", &AppendixRanges::quad_max_k},
                          {"estimate_max_a", &AppendixRanges::estimate_max_a},
                          {"estimate_max_k", &AppendixRanges::estimate_max_k}};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const auto& f : fields)
      if (it.key() == f.key) {
        if (!it.value().is_number_integer()) throw ParameterError(std::string("ranges: field '") + f.key + "' must be an integer");
        rg.*(f.member) = it.value().get<int>();
        known = true;
      }
    if (!known) throw ParameterError("ranges: unknown field '" + it.key() + "'");
  }
  if (rg.ebal_r2_vertices > 8 || rg.ebal_r3_vertices > 6)
    throw ResourceError("ranges: edge-balanced enumeration limited to 8 vertices (r=2) and 6 (r=3)");
  return rg;
}

struct AppendixReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

inline AppendixReport verify_appendix(const AppendixRanges& rg = {}, const std::vector<std::string>& ids = appendix_claim_ids()) {
  AppendixReport rep;
  for (const auto& id : ids) rep.claims.push_back(run_appendix_claim(id, rg));
  return rep;
}

inline nlohmann::json appendix_report_to_json(const AppendixReport& rep) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : rep.claims) claims.push_back(claim_to_json(c));
  return {{"suite", "appendix"}, {"all_pass", rep.all_pass()}, {"claims", claims}};
}

}  // namespace semirandom
