#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semirandom/analysis.hpp"
#include "semirandom/clique_split.hpp"
#include "semirandom/starplus.hpp"
#include "semirandom/targets.hpp"

namespace semirandom {

// Exponent bounds: tau(H) lies between n^lower and n^upper.
struct BoundEntry {
  std::string source;       // which construction or argument produced the bound
  Rational exponent;
  std::string certificate;  // why it applies
};

struct ThresholdReport {
  int r = 0, s = 0;
  long long vertices = 0, edges = 0;
  Rational ratio;  // e/(v - s + r)
  Rational mu;     // max ratio over sub-hypergraphs
  VertexSet mu_witness;
  Rational lower_general;
  Rational lower_mu;
  std::vector<BoundEntry> lower_bounds;
  std::vector<BoundEntry> upper_bounds;
  Rational best_lower;
  std::optional<Rational> best_upper;
  bool tight = false;
};

enum class LooseKind { path, cycle };

// Exact threshold exponent for ell-overlapping paths and cycles in the covered regime.
inline Rational loose_path_cycle_threshold(LooseKind kind, int m, int s, int ell, int r) {
  if (!(m >= 3 && s >= 3 && ell >= 1 && 2 * ell <= s && s - r >= ell && r >= 1))
    throw ParameterError("parameters outside the covered path/cycle regime (need m>=3, s>=3, 1<=ell<=s/2, s-r>=ell)");
  if (kind == LooseKind::path) return 0;
  if (s - r >= 2 * ell) return 0;
  if (s - r == 2 * ell - 1) return make_rational(1, 2);
  return make_rational(r - s + 2 * ell, 3);
}

struct LooseShape {
  LooseKind kind;
  int m, ell;
};

// Recognizes H as an ell-overlapping path or cycle (up to isomorphism).
inline std::optional<LooseShape> recognize_path_or_cycle(const MultiHypergraph& h) {
  if (!h.is_simple() || h.edge_count() == 0) return std::nullopt;
  const int s = h.uniformity();
  const long long v = h.vertex_count(), m = static_cast<long long>(h.edge_count());
  for (int ell = 1; ell < s; ++ell) {
    if (v == (s - ell) * m + ell) {
      MultiHypergraph p = build_target(TightPath{static_cast<int>(m), s, ell});
      if (contains_copy(h, p)) return LooseShape{LooseKind::path, static_cast<int>(m), ell};
    }
    if (v == (s - ell) * m && m >= (s + 1) / (s - ell) && v >= s + 1) {
      MultiHypergraph c = build_tight_cycle_on(static_cast<int>(m), s, ell);
      if (contains_copy(h, c)) return LooseShape{LooseKind::cycle, static_cast<int>(m), ell};
    }
  }
  return std::nullopt;
}

inline bool is_clique(const MultiHypergraph& h) {
  return h.is_simple() && static_cast<int>(h.vertex_count()) >= h.uniformity() &&
         BigInt(h.edge_count()) == binom(h.vertex_count(), h.uniformity());
}

inline ThresholdReport threshold_report(const MultiHypergraph& h, int r) {
  const int s = h.uniformity();
  if (r < 1 || r >= s) throw ParameterError("threshold report needs 1 <= r < s");
  if (h.edge_count() == 0) throw ParameterError("threshold report needs at least one edge");
  if (static_cast<int>(h.vertex_count()) < s) throw ParameterError("target has fewer than s vertices");
  ThresholdReport rep;
  rep.r = r;
  rep.s = s;
  const long long k = h.vertex_count(), m = static_cast<long long>(h.edge_count());
  rep.vertices = k;
  rep.edges = m;
  rep.ratio = edge_vertex_ratio(h, r);
  auto mu = max_edge_vertex_ratio(h, r);
  rep.mu = mu.value;
  rep.mu_witness = mu.witness.vertices;

  Rational general = Rational(r) - make_rational(k - s + r, m);
  if (general < 0) general = 0;
  rep.lower_general = general;
  rep.lower_mu = Rational(r) - 1 / rep.mu;
  rep.lower_bounds.push_back({"vertex_edge_count", rep.lower_general, "r - (v-s+r)/e, clamped at 0"});
  rep.lower_bounds.push_back({"max_density", rep.lower_mu, "r - 1/mu, mu attained on " + set_to_string(rep.mu_witness, ',')});

  if (r == 1 && h.is_simple()) {
    long long d = degeneracy(h);
    Rational exact = Rational(1) - make_rational(1, d);
    std::string cert = "r = 1, degeneracy " + std::to_string(d);
    rep.lower_bounds.push_back({"degeneracy", exact, cert});
    rep.upper_bounds.push_back({"degeneracy", exact, cert});
  }

  if (r >= 2 && h.is_simple()) {
    // Starplus with center of size s - r.
    for (const auto& d : starplus_decompositions(h, s - r)) {
      if (d.density_condition == ConditionStatus::violated || !d.flower_edge_balanced) continue;
      std::string cert = "center " + set_to_string(d.center, ',') + ", rays " + std::to_string(d.rays) + ", excess " +
                         std::to_string(d.excess) + ", density condition " + to_string(d.density_condition) +
                         ", flower edge-balanced";
      rep.upper_bounds.push_back({"balanced_starplus", Rational(r) - make_rational(k - s + r, d.rays + d.excess), cert});
      break;
    }
    if (k > s) {
      BigInt full_rays = binom(k - s + r, r);
      for (const auto& d : starplus_decompositions(h, s - r)) {
        if (BigInt(d.rays) != full_rays) continue;
        if (Rational(d.excess) > full_starplus_excess_limit(k, s, r)) continue;
        std::string cert = "center " + set_to_string(d.center, ',') + ", full flower, excess " +
                           std::to_string(d.excess) + " within limit " + to_string(full_starplus_excess_limit(k, s, r));
        rep.upper_bounds.push_back({"full_starplus", full_starplus_exponent(k, s, r, d.excess), cert});
        break;
      }
    }
    // Embed H into a larger full starplus through a max-degree (s-r)-set.
    long long lambda = m - max_codegree(h, s - r);
    for (long long kk = std::max<long long>(k, s + 1);; ++kk) {
      if (kk > 1000000) throw ResourceError("no admissible host size found for the generic starplus bound");
      if (Rational(lambda) <= full_starplus_excess_limit(kk, s, r)) {
        std::string cert = "excess " + std::to_string(lambda) + " fits a full starplus on " + std::to_string(kk) + " vertices";
        rep.upper_bounds.push_back({"generic_starplus_embedding", full_starplus_exponent(kk, s, r, lambda), cert});
        break;
      }
    }
    if (is_clique(h)) {
      long long level = clique_split_level(r, s, k);
      Rational slack = clique_split_slack(r, s, k, level);
      std::string cert = "split level " + std::to_string(level) + ", constraint " + (slack == 0 ? "equality" : "strict");
      rep.upper_bounds.push_back({"clique_three_phase", clique_upper_exponent(r, s, k, level), cert});
    }
  }

  if (auto shape = recognize_path_or_cycle(h)) {
    if (shape->m >= 3 && s >= 3 && 2 * shape->ell <= s && s - r >= shape->ell) {
      Rational exact = loose_path_cycle_threshold(shape->kind, shape->m, s, shape->ell, r);
      std::string cert = std::string(shape->kind == LooseKind::path ? "path" : "cycle") +
                         " m=" + std::to_string(shape->m) + " ell=" + std::to_string(shape->ell);
      rep.lower_bounds.push_back({"loose_path_cycle", exact, cert});
      rep.upper_bounds.push_back({"loose_path_cycle", exact, cert});
    }
  }

  rep.best_lower = rep.lower_bounds.front().exponent;
  for (const auto& b : rep.lower_bounds) rep.best_lower = std::max(rep.best_lower, b.exponent);
  for (const auto& b : rep.upper_bounds)
    if (!rep.best_upper || b.exponent < *rep.best_upper) rep.best_upper = b.exponent;
  rep.tight = rep.best_upper && *rep.best_upper == rep.best_lower;
  return rep;
}

inline nlohmann::json bound_to_json(const BoundEntry& b) {
  return {{"source", b.source}, {"exponent", rational_to_json(b.exponent)}, {"certificate", b.certificate}};
}

inline nlohmann::json report_to_json(const ThresholdReport& rep) {
  nlohmann::json lower = nlohmann::json::array(), upper = nlohmann::json::array();
  for (const auto& b : rep.lower_bounds) lower.push_back(bound_to_json(b));
  for (const auto& b : rep.upper_bounds) upper.push_back(bound_to_json(b));
  nlohmann::json j = {{"r", rep.r},
                      {"s", rep.s},
                      {"vertices", rep.vertices},
                      {"edges", rep.edges},
                      {"ratio", rational_to_json(rep.ratio)},
                      {"mu", rational_to_json(rep.mu)},
                      {"mu_witness", rep.mu_witness},
                      {"lower_general", rational_to_json(rep.lower_general)},
                      {"lower_mu", rational_to_json(rep.lower_mu)},
                      {"lower_bounds", lower},
                      {"upper_bounds", upper},
                      {"best_lower", rational_to_json(rep.best_lower)},
                      {"best_upper", rep.best_upper ? rational_to_json(*rep.best_upper) : nlohmann::json(nullptr)},
                      {"tight", rep.tight}};
  return j;
}

}  // namespace semirandom
