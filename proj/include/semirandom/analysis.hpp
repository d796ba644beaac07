#pragma once

#include <optional>

#include "semirandom/containment.hpp"
#include "semirandom/hypergraph.hpp"
#include "semirandom/rational.hpp"

// Densities and balance notions. All maxima run over induced sub-hypergraphs: at a fixed
// vertex set, adding edges only increases the edge count, hence every ratio below.

namespace semirandom {

// e_H / (v_H - s + r).
inline Rational edge_vertex_ratio(const MultiHypergraph& h, int r) {
  const int s = h.uniformity();
  if (static_cast<int>(h.vertex_count()) < s) throw ParameterError("ratio needs at least s vertices");
  if (r < 1) throw ParameterError("r must be positive");
  return make_rational(static_cast<long long>(h.edge_count()), static_cast<long long>(h.vertex_count()) - s + r);
}

struct MaxRatio {
  Rational value;
  SubHypergraph witness;
};

namespace detail {

// Lexicographically smaller vertex list among two masks of equal popcount.
inline bool lex_less(std::uint64_t a, std::uint64_t b) { return mask_to_set(a) < mask_to_set(b); }

}  // namespace detail

// Maximum of e/(v - s + r) over induced sub-hypergraphs with at least s vertices.
// Ties go to fewer vertices, then the lexicographically smallest vertex set.
inline MaxRatio max_edge_vertex_ratio(const MultiHypergraph& h, int r) {
  const int s = h.uniformity();
  const int v = static_cast<int>(h.vertex_count());
  if (v < s) throw ParameterError("ratio needs at least s vertices");
  if (v > 24) throw ResourceError("exhaustive ratio search limited to 24 vertices");
  MaskedEdges masked(h);
  Rational best = -1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << v); ++w) {
    int size = __builtin_popcountll(w);
    if (size < s) continue;
    Rational f = make_rational(masked.edges_inside(w), size - s + r);
    int best_size = __builtin_popcountll(best_mask);
    if (f > best || (f == best && (size < best_size || (size == best_size && detail::lex_less(w, best_mask))))) {
      best = f;
      best_mask = w;
    }
  }
  return {best, induced(h, mask_to_set(best_mask))};
}

// g(F) = 1/u for a single edge, (e - 1)/(v - u) otherwise, u the uniformity of F.
inline Rational edge_density(const MultiHypergraph& f) {
  const int u = f.uniformity();
  if (f.edge_count() == 0) throw ParameterError("density of an empty hypergraph");
  if (!f.is_simple()) throw ParameterError("density requires a simple hypergraph");
  if (f.edge_count() == 1) return make_rational(1, u);
  return make_rational(static_cast<long long>(f.edge_count()) - 1, static_cast<long long>(f.vertex_count()) - u);
}

struct BalanceReport {
  Rational g;
  bool is_balanced = false;
  bool is_edge_balanced = false;
  std::optional<bool> is_r_balanced;
  std::optional<SubHypergraph> witness;  // first sub-hypergraph violating a checked inequality
};

inline BalanceReport balance_report(const MultiHypergraph& f, std::optional<int> r = std::nullopt) {
  if (f.edge_count() == 0) throw ParameterError("balance report of an empty hypergraph");
  const int u = f.uniformity();
  const int v = static_cast<int>(f.vertex_count());
  if (v > 24) throw ResourceError("exhaustive balance check limited to 24 vertices");
  BalanceReport rep;
  rep.g = edge_density(f);
  rep.is_balanced = true;
  rep.is_edge_balanced = true;
  const long long e = static_cast<long long>(f.edge_count());
  MaskedEdges masked(f);
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << v); ++w) {
    long long ew = masked.edges_inside(w);
    if (ew == 0) continue;
    long long vw = __builtin_popcountll(w);
    Rational gw = ew == 1 ? make_rational(1, u) : make_rational(ew - 1, vw - u);
    bool edge_ok = gw <= rep.g;
    bool bal_ok = ew * v <= e * vw;
    if ((!edge_ok || !bal_ok) && !rep.witness) rep.witness = induced(f, mask_to_set(w));
    rep.is_edge_balanced = rep.is_edge_balanced && edge_ok;
    rep.is_balanced = rep.is_balanced && bal_ok;
  }
  if (r) rep.is_r_balanced = max_edge_vertex_ratio(f, *r).value == edge_vertex_ratio(f, *r);
  return rep;
}

inline bool is_r_balanced(const MultiHypergraph& h, int r) {
  return max_edge_vertex_ratio(h, r).value == edge_vertex_ratio(h, r);
}

// max over sub-hypergraphs of the minimum degree, by min-degree peeling.
inline long long degeneracy(const MultiHypergraph& h) {
  if (h.vertex_count() == 0) throw ParameterError("degeneracy of an empty hypergraph");
  return peel_order(h);
}

}  // namespace semirandom
