#pragma once

#include <cmath>

#include "semirandom/hypergraph.hpp"
#include "semirandom/rational.hpp"

namespace semirandom {

// min over sub-hypergraphs F' with at least one edge of n^{v_F'} p^{e_F'}, in log form.
struct PhiResult {
  long double log_value = 0;
  int v = 0;
  long long e = 0;
  SubHypergraph argmin;
};

// At a fixed vertex set the induced sub-hypergraph has the most edges, so with p < 1 it is the
// best candidate; the search therefore runs over vertex sets. Ties go to fewer vertices, then
// the lexicographically smallest set.
inline PhiResult phi_F(const MultiHypergraph& f, Vertex n, long double log_p) {
  if (f.edge_count() == 0) throw ParameterError("phi needs a hypergraph with at least one edge");
  if (!(log_p < 0)) throw ParameterError("phi needs 0 < p < 1");
  const int v = static_cast<int>(f.vertex_count());
  if (v > 24) throw ResourceError("phi search limited to 24 vertices");
  const long double log_n = std::log(static_cast<long double>(n));
  MaskedEdges masked(f);
  std::optional<std::uint64_t> best;
  PhiResult res;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << v); ++w) {
    long long e = masked.edges_inside(w);
    if (e == 0) continue;
    int size = __builtin_popcountll(w);
    long double val = size * log_n + e * log_p;
    const long double tol = 1e-12L * (1 + std::fabs(val));
    bool better = !best || val < res.log_value - tol;
    if (!better && best && std::fabs(val - res.log_value) <= tol)
      better = size < res.v || (size == res.v && mask_to_set(w) < mask_to_set(*best));
    if (better) {
      best = w;
      res.log_value = val;
      res.v = size;
      res.e = e;
    }
  }
  res.argmin = induced(f, mask_to_set(*best));
  return res;
}

inline PhiResult phi_F(const MultiHypergraph& f, Vertex n, const Rational& p) {
  if (p <= 0 || p >= 1) throw ParameterError("phi needs 0 < p < 1");
  long double lp = std::log(static_cast<long double>(numerator_of(p).convert_to<double>())) -
                   std::log(static_cast<long double>(denominator_of(p).convert_to<double>()));
  return phi_F(f, n, lp);
}

}  // namespace semirandom
