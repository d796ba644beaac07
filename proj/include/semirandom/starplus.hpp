#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semirandom/analysis.hpp"

namespace semirandom {

enum class ConditionStatus { strict, equality, violated };

inline const char* to_string(ConditionStatus c) {
  switch (c) {
    case ConditionStatus::strict: return "strict";
    case ConditionStatus::equality: return "equality";
    default: return "violated";
  }
}

// Split of an s-graph into rays (edges containing the center) and cap (the rest).
struct StarplusDecomposition {
  VertexSet center;
  long long rays = 0;    // lambda_1
  long long excess = 0;  // lambda_2
  // Rays minus the center, an (s-c)-graph on the k-c non-center vertices; flower vertex i
  // is flower_vertices[i-1] of the original hypergraph.
  MultiHypergraph flower;
  VertexSet flower_vertices;
  MultiHypergraph cap;  // on the original labels
  // (rays + excess)/(rays - 1) against (k-s+r)/(k-s), with r = s - c.
  ConditionStatus density_condition = ConditionStatus::violated;
  bool flower_edge_balanced = false;
};

// (l1 + l2)(k - s) <= (k - s + r)(l1 - 1), compared without division.
inline ConditionStatus starplus_density_condition(long long rays, long long excess, long long k, long long s,
                                                  long long r) {
  long long lhs = (rays + excess) * (k - s);
  long long rhs = (k - s + r) * (rays - 1);
  if (lhs < rhs) return ConditionStatus::strict;
  if (lhs == rhs) return ConditionStatus::equality;
  return ConditionStatus::violated;
}

inline StarplusDecomposition decompose_at(const MultiHypergraph& h, const VertexSet& center) {
  const int s = h.uniformity();
  const int c = static_cast<int>(center.size());
  StarplusDecomposition d;
  d.center = center;
  for (Vertex v = 1; v <= h.vertex_count(); ++v)
    if (!contains_vertex(center, v)) d.flower_vertices.push_back(v);
  std::vector<Vertex> relabel(h.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < d.flower_vertices.size(); ++i) relabel[d.flower_vertices[i]] = static_cast<Vertex>(i + 1);
  d.flower = MultiHypergraph(s - c, static_cast<Vertex>(d.flower_vertices.size()));
  d.cap = MultiHypergraph(s, h.vertex_count());
  for (std::size_t id = 0; id < h.distinct_edges().size(); ++id) {
    const VertexSet& e = h.distinct_edges()[id];
    int mult = h.multiplicity_at(id);
    if (is_subset(center, e)) {
      VertexSet petal;
      for (Vertex v : e)
        if (!contains_vertex(center, v)) petal.push_back(relabel[v]);
      d.flower.add_edge(petal, mult);
      d.rays += mult;
    } else {
      d.cap.add_edge(e, mult);
      d.excess += mult;
    }
  }
  d.density_condition = starplus_density_condition(d.rays, d.excess, h.vertex_count(), s, s - c);
  d.flower_edge_balanced = d.rays > 0 && d.flower.is_simple() && balance_report(d.flower).is_edge_balanced;
  return d;
}

// Every center of size c lying in at least one edge, in lexicographic order.
inline std::vector<StarplusDecomposition> starplus_decompositions(const MultiHypergraph& h, int c) {
  if (c < 1 || c >= h.uniformity()) throw ParameterError("center size must satisfy 1 <= c < s");
  std::set<VertexSet> centers;
  for (const auto& e : h.distinct_edges())
    for_each_subset(e, c, [&](const VertexSet& sub) {
      centers.insert(sub);
      return true;
    });
  std::vector<StarplusDecomposition> out;
  for (const auto& center : centers) out.push_back(decompose_at(h, center));
  return out;
}

// The center with the most rays; ties go to the lexicographically smallest center.
inline std::optional<StarplusDecomposition> starplus_decompose(const MultiHypergraph& h, int c) {
  auto all = starplus_decompositions(h, c);
  std::optional<StarplusDecomposition> best;
  for (auto& d : all)
    if (!best || d.rays > best->rays) best = std::move(d);
  return best;
}

// Right-hand side of the full-starplus excess condition, as an exact rational:
// (r C(k-s+r, r) - (k-s+r)) / (k-s), for k > s.
inline Rational full_starplus_excess_limit(long long k, long long s, long long r) {
  if (k <= s) throw ParameterError("excess limit needs k > s");
  return make_rational(r * binom(k - s + r, r) - (k - s + r), k - s);
}

// r - (k-s+r)/(C(k-s+r, r) + excess): the exponent for a full starplus.
inline Rational full_starplus_exponent(long long k, long long s, long long r, long long excess) {
  return Rational(r) - make_rational(k - s + r, binom(k - s + r, r) + excess);
}

}  // namespace semirandom
