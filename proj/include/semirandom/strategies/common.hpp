#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "semirandom/process.hpp"

namespace semirandom {

// Phase boundaries as step counts: phase 0 covers steps 1..t0, phase 1 the next t1, phase 2 the rest.
struct PhaseClock {
  std::uint64_t t0 = 0, t1 = 0, t2 = 0;

  int phase_at(std::uint64_t step) const {
    if (step <= t0) return 0;
    if (step <= t0 + t1) return 1;
    return 2;
  }
};

// Picks one r-subset of each edge, using only vertices where `allowed` holds. Edges are handled
// in the given order; among candidates the rule prefers the fewest earlier picks of the same
// r-set, then the smallest maximum vertex load, then the lexicographically smallest.
inline std::vector<VertexSet> designate_template(const std::vector<VertexSet>& edges, int r,
                                                 const std::function<bool(Vertex)>& allowed) {
  std::vector<VertexSet> picks;
  VertexSetMap<int> used;
  std::unordered_map<Vertex, int> load;
  for (const auto& e : edges) {
    VertexSet pool;
    for (Vertex v : e)
      if (allowed(v)) pool.push_back(v);
    if (static_cast<int>(pool.size()) < r) throw ParameterError("edge has fewer than r admissible vertices");
    VertexSet best;
    int best_used = 0, best_load = 0;
    for_each_subset(pool, static_cast<std::size_t>(r), [&](const VertexSet& cand) {
      int u = used.count(cand) ? used[cand] : 0;
      int l = 0;
      for (Vertex v : cand) l = std::max(l, load.count(v) ? load[v] : 0);
      if (best.empty() || u < best_used || (u == best_used && l < best_load)) {
        best = cand;
        best_used = u;
        best_load = l;
      }
      return true;
    });
    ++used[best];
    for (Vertex v : best) ++load[v];
    picks.push_back(best);
  }
  return picks;
}

// One l-loose path grown edge by edge. The vertex sequence lists the path in order; each
// new block of s-l vertices is stored in decreasing order, so the last l entries are the l
// smallest degree-one vertices of the end-edge.
class PathGrower {
 public:
  PathGrower() = default;
  PathGrower(Vertex n, int s, int ell) : s_(s), ell_(ell), mark_(n + 1, 0) {}

  int edges() const { return edges_; }
  const std::vector<Vertex>& sequence() const { return seq_; }
  bool contains(Vertex v) const { return mark_[v] != 0; }
  bool meets(const VertexSet& u) const {
    return std::any_of(u.begin(), u.end(), [&](Vertex v) { return mark_[v] != 0; });
  }
  VertexSet left_end() const { return sorted_set(VertexSet(seq_.begin(), seq_.begin() + ell_)); }
  VertexSet right_end() const { return sorted_set(VertexSet(seq_.end() - ell_, seq_.end())); }

  // Appends the block of new vertices (u plus fresh ones) as a new edge.
  void append(const VertexSet& block) {
    VertexSet b = block;
    std::sort(b.rbegin(), b.rend());
    for (Vertex v : b) {
      seq_.push_back(v);
      mark_[v] = 1;
    }
    ++edges_;
  }

  // Plays u: the first edge is u plus fresh vertices, later edges take l end vertices plus fresh
  // ones. Returns V, or nullopt (path unchanged) when u meets the path or fresh vertices run out.
  std::optional<VertexSet> grow(const MultiHypergraph& g, const VertexSet& u, int r, FreshPool& pool,
                                const std::function<bool(Vertex)>& reserved) {
    if (edges_ > 0 && meets(u)) return std::nullopt;
    int fresh_needed = edges_ == 0 ? s_ - r : s_ - ell_ - r;
    auto fresh = pool.take(g, u, fresh_needed, reserved);
    if (!fresh) return std::nullopt;
    VertexSet v = edges_ == 0 ? *fresh : set_union(right_end(), *fresh);
    append(set_union(u, *fresh));
    return v;
  }

  int s() const { return s_; }
  int ell() const { return ell_; }

 private:
  int s_ = 0, ell_ = 0;
  int edges_ = 0;
  std::vector<Vertex> seq_;
  std::vector<char> mark_;
};

}  // namespace semirandom
