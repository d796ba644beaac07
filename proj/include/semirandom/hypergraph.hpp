#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "semirandom/errors.hpp"

namespace semirandom {

using Vertex = std::uint32_t;
// Sorted, strictly increasing list of vertices. Used for edges, U_t, V_t and r-sets.
using VertexSet = std::vector<Vertex>;

struct VertexSetHash {
  std::size_t operator()(const VertexSet& set) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Vertex v : set) {
      h ^= v;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class T>
using VertexSetMap = std::unordered_map<VertexSet, T, VertexSetHash>;

inline bool is_strictly_increasing(std::span<const Vertex> set) {
  for (std::size_t i = 1; i < set.size(); ++i)
    if (set[i - 1] >= set[i]) return false;
  return true;
}

inline VertexSet sorted_set(VertexSet set) {
  std::sort(set.begin(), set.end());
  return set;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool contains_vertex(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

inline bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

inline std::string set_to_string(const VertexSet& set, char sep = ';') {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(set[i]);
  }
  return out;
}

// Calls fn(subset) for every k-subset of items in lexicographic order of positions.
// fn may return false to stop early; the function then returns false.
template <class Fn>
bool for_each_subset(const VertexSet& items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  VertexSet subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!fn(static_cast<const VertexSet&>(subset))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<VertexSet> all_subsets(const VertexSet& items, std::size_t k) {
  std::vector<VertexSet> out;
  for_each_subset(items, k, [&](const VertexSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

inline VertexSet vertex_range(Vertex first, Vertex last) {
  VertexSet out;
  for (Vertex v = first; v <= last; ++v) out.push_back(v);
  return out;
}

// s-uniform hypergraph with edge multiplicities on vertex set [n].
class MultiHypergraph {
 public:
  MultiHypergraph() = default;
  MultiHypergraph(int uniformity, Vertex vertex_count)
      : s_(uniformity), n_(vertex_count), incidence_(vertex_count + 1), degree_(vertex_count + 1, 0) {
    if (uniformity < 1) throw ParameterError("uniformity must be at least 1");
  }

  int uniformity() const { return s_; }
  Vertex vertex_count() const { return n_; }

  void check_edge(const VertexSet& e) const {
    if (static_cast<int>(e.size()) != s_)
      throw ParameterError("edge has " + std::to_string(e.size()) + " vertices, expected " + std::to_string(s_));
    if (!is_strictly_increasing(e)) throw ParameterError("edge vertices must be distinct and sorted");
    if (e.front() < 1 || e.back() > n_) throw ParameterError("edge vertex outside [1, n]");
  }

  // Returns the index of the distinct edge.
  std::size_t add_edge(const VertexSet& e, int times = 1) {
    check_edge(e);
    if (times < 1) throw ParameterError("multiplicity must be positive");
    total_ += static_cast<std::size_t>(times);
    auto it = index_.find(e);
    if (it != index_.end()) {
      mult_[it->second] += times;
      for (Vertex v : e) degree_[v] += times;
      return it->second;
    }
    std::size_t id = edges_.size();
    edges_.push_back(e);
    mult_.push_back(times);
    index_.emplace(e, id);
    for (Vertex v : e) {
      incidence_[v].push_back(static_cast<std::uint32_t>(id));
      degree_[v] += times;
    }
    return id;
  }

  int multiplicity(const VertexSet& e) const {
    auto it = index_.find(e);
    return it == index_.end() ? 0 : mult_[it->second];
  }
  bool has_edge(const VertexSet& e) const { return index_.count(e) > 0; }

  std::size_t edge_count() const { return total_; }
  std::size_t distinct_edge_count() const { return edges_.size(); }
  const std::vector<VertexSet>& distinct_edges() const { return edges_; }
  int multiplicity_at(std::size_t id) const { return mult_[id]; }

  const std::vector<std::uint32_t>& incident(Vertex v) const { return incidence_.at(v); }
  // Degree counted with multiplicity.
  long long degree(Vertex v) const { return degree_.at(v); }
  std::size_t distinct_degree(Vertex v) const { return incidence_.at(v).size(); }

  bool is_simple() const {
    return std::all_of(mult_.begin(), mult_.end(), [](int m) { return m == 1; });
  }

  // (edge, multiplicity) pairs in lexicographic edge order.
  std::vector<std::pair<VertexSet, int>> sorted_edges() const {
    std::vector<std::pair<VertexSet, int>> out;
    out.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) out.emplace_back(edges_[i], mult_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Vertices that lie in at least one edge, sorted.
  VertexSet covered_vertices() const {
    VertexSet out;
    for (Vertex v = 1; v <= n_; ++v)
      if (!incidence_[v].empty()) out.push_back(v);
    return out;
  }

  friend bool operator==(const MultiHypergraph& a, const MultiHypergraph& b) {
    if (a.s_ != b.s_ || a.n_ != b.n_ || a.total_ != b.total_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i)
      if (b.multiplicity(a.edges_[i]) != a.mult_[i]) return false;
    return true;
  }

 private:
  int s_ = 0;
  Vertex n_ = 0;
  std::size_t total_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<int> mult_;
  VertexSetMap<std::size_t> index_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<long long> degree_;
};

// The sub-hypergraph induced on `vertices` (original labels kept in `vertices`;
// `graph` uses labels 1..|vertices| in the same order).
struct SubHypergraph {
  VertexSet vertices;
  MultiHypergraph graph;
};

inline SubHypergraph induced(const MultiHypergraph& h, const VertexSet& vertices) {
  std::vector<Vertex> relabel(h.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) relabel.at(vertices[i]) = static_cast<Vertex>(i + 1);
  SubHypergraph sub{vertices, MultiHypergraph(h.uniformity(), static_cast<Vertex>(vertices.size()))};
  const auto& edges = h.distinct_edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    VertexSet e;
    bool inside = true;
    for (Vertex v : edges[id]) {
      if (!relabel[v]) {
        inside = false;
        break;
      }
      e.push_back(relabel[v]);
    }
    if (inside) sub.graph.add_edge(sorted_set(e), h.multiplicity_at(id));
  }
  return sub;
}

// Bitmask view of a hypergraph on at most 63 vertices, for exhaustive enumeration.
struct MaskedEdges {
  std::vector<std::uint64_t> masks;
  std::vector<int> mult;

  explicit MaskedEdges(const MultiHypergraph& h) {
    if (h.vertex_count() > 63) throw ResourceError("exhaustive enumeration limited to 63 vertices");
    for (std::size_t id = 0; id < h.distinct_edges().size(); ++id) {
      std::uint64_t m = 0;
      for (Vertex v : h.distinct_edges()[id]) m |= std::uint64_t{1} << (v - 1);
      masks.push_back(m);
      mult.push_back(h.multiplicity_at(id));
    }
  }

  long long edges_inside(std::uint64_t w) const {
    long long count = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if ((masks[i] & ~w) == 0) count += mult[i];
    return count;
  }
};

inline VertexSet mask_to_set(std::uint64_t w) {
  VertexSet out;
  for (Vertex v = 1; w; ++v, w >>= 1)
    if (w & 1) out.push_back(v);
  return out;
}

// Maximum number of edges (with multiplicity) containing a common d-set.
inline long long max_codegree(const MultiHypergraph& h, int d) {
  if (d < 1 || d > h.uniformity()) throw ParameterError("codegree order d must satisfy 1 <= d <= s");
  VertexSetMap<long long> counts;
  long long best = 0;
  const auto& edges = h.distinct_edges();
  for (std::size_t id = 0; id < edges.size(); ++id) {
    for_each_subset(edges[id], static_cast<std::size_t>(d), [&](const VertexSet& sub) {
      long long& c = counts[sub];
      c += h.multiplicity_at(id);
      best = std::max(best, c);
      return true;
    });
  }
  return best;
}

}  // namespace semirandom
