#pragma once

// Brute-force reference computations used as independent oracles in the unit tests.
// They share no code with the library beyond the MultiHypergraph container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "semirandom/hypergraph.hpp"
#include "semirandom/rational.hpp"

namespace oracle {

using semirandom::MultiHypergraph;
using semirandom::Rational;
using semirandom::Vertex;
using semirandom::VertexSet;

// Tries every injection V(pattern) -> V(host).
inline bool naive_contains(const MultiHypergraph& host, const MultiHypergraph& pattern) {
  const Vertex n = host.vertex_count(), k = pattern.vertex_count();
  if (k > n) return false;
  std::vector<Vertex> hosts(n);
  for (Vertex v = 0; v < n; ++v) hosts[v] = v + 1;
  // Enumerate k-permutations via choose + permute.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < n; ++v)
      if (pick[v]) chosen.push_back(hosts[v]);
    std::sort(chosen.begin(), chosen.end());
    do {
      bool ok = true;
      for (const auto& e : pattern.distinct_edges()) {
        VertexSet img;
        for (Vertex p : e) img.push_back(chosen[p - 1]);
        std::sort(img.begin(), img.end());
        if (!host.has_edge(img)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

inline std::uint64_t mask_of(const VertexSet& e) {
  std::uint64_t m = 0;
  for (Vertex v : e) m |= std::uint64_t{1} << (v - 1);
  return m;
}

// max over vertex subsets W of the minimum degree inside H[W].
inline long long brute_degeneracy(const MultiHypergraph& h) {
  const Vertex n = h.vertex_count();
  long long best = 0;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    long long mn = -1;
    for (Vertex v = 1; v <= n; ++v) {
      if (!(w >> (v - 1) & 1)) continue;
      long long d = 0;
      for (std::size_t id = 0; id < h.distinct_edges().size(); ++id) {
        std::uint64_t m = mask_of(h.distinct_edges()[id]);
        if ((m & ~w) == 0 && (m >> (v - 1) & 1)) d += h.multiplicity_at(id);
      }
      if (mn < 0 || d < mn) mn = d;
    }
    best = std::max(best, mn);
  }
  return best;
}

// max of e'/(v'-s+r) over all (not only induced) sub-hypergraphs with v' >= s of a simple H.
inline Rational brute_mu(const MultiHypergraph& h, int r) {
  const int s = h.uniformity();
  const auto& edges = h.distinct_edges();
  Rational best = 0;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << edges.size()); ++sel) {
    std::uint64_t cover = 0;
    long long e = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (sel >> i & 1) {
        cover |= mask_of(edges[i]);
        ++e;
      }
    long long v = std::max<long long>(__builtin_popcountll(cover), s);
    if (v > static_cast<long long>(h.vertex_count())) continue;
    best = std::max(best, Rational(e) / Rational(v - s + r));
  }
  return best;
}

// g over all non-empty edge subsets (vertex set = union of the chosen edges).
inline Rational g_of(long long e, long long v, int u) {
  if (e == 1) return Rational(1, u);
  return Rational(e - 1, v - u);
}

inline bool brute_edge_balanced(const MultiHypergraph& f) {
  const int u = f.uniformity();
  const auto& edges = f.distinct_edges();
  Rational whole = g_of(static_cast<long long>(edges.size()), f.vertex_count(), u);
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << edges.size()); ++sel) {
    std::uint64_t cover = 0;
    long long e = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (sel >> i & 1) {
        cover |= mask_of(edges[i]);
        ++e;
      }
    if (g_of(e, __builtin_popcountll(cover), u) > whole) return false;
  }
  return true;
}

inline MultiHypergraph random_hypergraph(std::mt19937_64& rng, int s, Vertex n, double density) {
  MultiHypergraph h(s, n);
  std::bernoulli_distribution coin(density);
  semirandom::for_each_subset(semirandom::vertex_range(1, n), s, [&](const VertexSet& e) {
    if (coin(rng)) h.add_edge(e);
    return true;
  });
  return h;
}

inline long long brute_codegree(const MultiHypergraph& h, int d) {
  long long best = 0;
  semirandom::for_each_subset(semirandom::vertex_range(1, h.vertex_count()), d, [&](const VertexSet& D) {
    long long c = 0;
    for (std::size_t id = 0; id < h.distinct_edges().size(); ++id)
      if (std::includes(h.distinct_edges()[id].begin(), h.distinct_edges()[id].end(), D.begin(), D.end()))
        c += h.multiplicity_at(id);
    best = std::max(best, c);
    return true;
  });
  return best;
}

}  // namespace oracle

namespace oracle {

// Expected number of draws, among t uniform draws from N outcomes, that repeat an earlier draw.
inline double expected_duplicates(double outcomes, std::uint64_t t) {
  double sum = 0;
  for (std::uint64_t i = 1; i <= t; ++i) sum += 1.0 - std::pow(1.0 - 1.0 / outcomes, static_cast<double>(i - 1));
  return sum;
}

}  // namespace oracle

namespace oracle {

// Probability that t uniform draws from `outcomes` items hit item i at least mult[i] times,
// by enumerating all outcomes^t draw sequences.
inline Rational brute_hit_probability(const std::vector<int>& mult, int outcomes, int t) {
  long long total = 1;
  for (int i = 0; i < t; ++i) total *= outcomes;
  long long good = 0;
  std::vector<int> seq(static_cast<std::size_t>(t), 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::vector<int> hits(mult.size(), 0);
    for (int i = 0; i < t; ++i) {
      int d = static_cast<int>(c % outcomes);
      c /= outcomes;
      if (d < static_cast<int>(mult.size())) ++hits[static_cast<std::size_t>(d)];
    }
    bool ok = true;
    for (std::size_t i = 0; i < mult.size(); ++i) ok = ok && hits[i] >= mult[i];
    good += ok;
  }
  return Rational(good) / Rational(total);
}

// min over all non-empty edge subsets of v log n + e log p, with the vertex set the union of the edges.
inline long double brute_log_phi(const MultiHypergraph& f, Vertex n, long double log_p) {
  const auto& edges = f.distinct_edges();
  long double best = 0;
  bool any = false;
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << edges.size()); ++sel) {
    std::uint64_t cover = 0;
    long long e = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (sel >> i & 1) {
        cover |= mask_of(edges[i]);
        e += f.multiplicity_at(i);
      }
    long double val = __builtin_popcountll(cover) * std::log(static_cast<long double>(n)) + e * log_p;
    if (!any || val < best) best = val;
    any = true;
  }
  return best;
}

// Number of k-subsets of [n] inducing at least j edges (with multiplicity).
inline std::uint64_t brute_dense_sets(const MultiHypergraph& g, int k, long long j) {
  const Vertex n = g.vertex_count();
  std::uint64_t count = 0;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
    if (__builtin_popcountll(w) != k) continue;
    long long inside = 0;
    for (std::size_t id = 0; id < g.distinct_edges().size(); ++id)
      if ((mask_of(g.distinct_edges()[id]) & ~w) == 0) inside += g.multiplicity_at(id);
    count += inside >= j;
  }
  return count;
}

}  // namespace oracle
