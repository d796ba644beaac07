#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "semirandom/hypergraph.hpp"

namespace semirandom {

// pattern vertex p (1-based) is mapped to host vertex embedding[p - 1].
using Embedding = std::vector<Vertex>;

// Hooks for restricting which host vertices may be used. push() is called when a host
// vertex is tentatively placed and may veto it; pop() undoes a successful push.
struct NoVertexConstraint {
  bool push(Vertex) { return true; }
  void pop(Vertex) {}
};

struct AcceptAny {
  bool operator()(const Embedding&) const { return true; }
};

// Vertices by min-degree peeling; peel[i] is the i-th removed vertex. Degrees count
// multiplicity. Returns the largest minimum degree seen along the way.
inline long long peel_order(const MultiHypergraph& h, std::vector<Vertex>* peel = nullptr) {
  const Vertex n = h.vertex_count();
  std::vector<long long> deg(n + 1);
  for (Vertex v = 1; v <= n; ++v) deg[v] = h.degree(v);
  std::vector<char> removed(n + 1, 0), edge_dead(h.distinct_edge_count(), 0);
  long long best = 0;
  for (Vertex step = 0; step < n; ++step) {
    Vertex pick = 0;
    for (Vertex v = 1; v <= n; ++v)
      if (!removed[v] && (pick == 0 || deg[v] < deg[pick])) pick = v;
    best = std::max(best, deg[pick]);
    removed[pick] = 1;
    if (peel) peel->push_back(pick);
    for (auto id : h.incident(pick)) {
      if (edge_dead[id]) continue;
      edge_dead[id] = 1;
      for (Vertex u : h.distinct_edges()[id])
        if (u != pick) deg[u] -= h.multiplicity_at(id);
    }
  }
  return best;
}

inline bool is_embedding(const MultiHypergraph& host, const MultiHypergraph& pattern, const Embedding& phi) {
  if (phi.size() != pattern.vertex_count()) return false;
  std::vector<Vertex> sorted(phi);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : phi)
    if (v < 1 || v > host.vertex_count()) return false;
  for (const auto& e : pattern.distinct_edges()) {
    VertexSet image;
    for (Vertex p : e) image.push_back(phi[p - 1]);
    if (!host.has_edge(sorted_set(image))) return false;
  }
  return true;
}

// Backtracking subgraph search for a fixed small simple pattern.
class EmbeddingSearch {
 public:
  explicit EmbeddingSearch(const MultiHypergraph& pattern) : pattern_(pattern) {
    if (!pattern.is_simple()) throw ParameterError("containment pattern must be simple");
    std::vector<Vertex> peel;
    peel_order(pattern, &peel);
    rank_.assign(pattern.vertex_count() + 1, 0);
    // Last peeled vertices sit in the densest part; place them first.
    for (std::size_t i = 0; i < peel.size(); ++i) rank_[peel[i]] = static_cast<int>(peel.size() - i);
    base_plan_ = make_plan({});
    for (const auto& e : pattern_.distinct_edges()) anchored_plans_.push_back(make_plan(e));
  }

  const MultiHypergraph& pattern() const { return pattern_; }

  template <class Constraint = NoVertexConstraint, class Accept = AcceptAny>
  std::optional<Embedding> find(const MultiHypergraph& host, Constraint&& constraint = {}, Accept&& accept = {}) const {
    check_host(host);
    return run(host, base_plan_, nullptr, constraint, accept);
  }

  // Only embeddings that map some pattern edge onto `host_edge`.
  template <class Constraint = NoVertexConstraint, class Accept = AcceptAny>
  std::optional<Embedding> find_through(const MultiHypergraph& host, const VertexSet& host_edge,
                                        Constraint&& constraint = {}, Accept&& accept = {}) const {
    check_host(host);
    if (!host.has_edge(host_edge)) return std::nullopt;
    for (const auto& plan : anchored_plans_) {
      auto found = run(host, plan, &host_edge, constraint, accept);
      if (found) return found;
    }
    return std::nullopt;
  }

 private:
  struct Plan {
    std::vector<Vertex> order;                      // pattern vertices in placement order
    std::vector<std::vector<std::size_t>> closing;  // edges completed at each position
    int anchor_size = 0;                            // leading positions mapped onto the anchor edge
  };

  void check_host(const MultiHypergraph& host) const {
    if (host.uniformity() != pattern_.uniformity()) throw ParameterError("uniformity mismatch between host and pattern");
  }

  Plan make_plan(const VertexSet& first) const {
    const Vertex k = pattern_.vertex_count();
    Plan plan;
    std::vector<char> placed(k + 1, 0);
    for (Vertex v : first) {
      plan.order.push_back(v);
      placed[v] = 1;
    }
    while (plan.order.size() < k) {
      Vertex best = 0;
      long long best_touch = -1;
      for (Vertex v = 1; v <= k; ++v) {
        if (placed[v]) continue;
        long long touch = 0;
        for (auto id : pattern_.incident(v))
          for (Vertex u : pattern_.distinct_edges()[id])
            if (placed[u]) {
              ++touch;
              break;
            }
        bool isolated = pattern_.incident(v).empty();
        if (isolated) touch = -1;
        if (best == 0 || touch > best_touch || (touch == best_touch && rank_[v] > rank_[best])) {
          best = v;
          best_touch = touch;
        }
      }
      placed[best] = 1;
      plan.order.push_back(best);
    }
    std::vector<int> pos(k + 1);
    for (std::size_t i = 0; i < plan.order.size(); ++i) pos[plan.order[i]] = static_cast<int>(i);
    plan.closing.assign(k, {});
    const auto& edges = pattern_.distinct_edges();
    for (std::size_t id = 0; id < edges.size(); ++id) {
      int last = 0;
      for (Vertex v : edges[id]) last = std::max(last, pos[v]);
      plan.closing[last].push_back(id);
    }
    plan.anchor_size = static_cast<int>(first.size());
    return plan;
  }

  template <class Constraint, class Accept>
  std::optional<Embedding> run(const MultiHypergraph& host, const Plan& plan, const VertexSet* anchor,
                               Constraint& constraint, Accept& accept) const {
    const Vertex k = pattern_.vertex_count();
    if (k > host.vertex_count()) return std::nullopt;
    Embedding phi(k, 0);
    std::vector<Vertex> used;
    used.reserve(k);
    std::optional<Embedding> result;
    search(host, plan, anchor, 0, phi, used, constraint, accept, result);
    return result;
  }

  template <class Constraint, class Accept>
  bool search(const MultiHypergraph& host, const Plan& plan, const VertexSet* anchor, std::size_t depth,
              Embedding& phi, std::vector<Vertex>& used, Constraint& constraint, Accept& accept,
              std::optional<Embedding>& result) const {
    if (depth == plan.order.size()) {
      if (accept(static_cast<const Embedding&>(phi))) {
        result = phi;
        return true;
      }
      return false;
    }
    const Vertex p = plan.order[depth];
    std::vector<Vertex> candidates = candidates_for(host, plan, anchor, depth, phi);
    const std::size_t need = pattern_.distinct_degree(p);
    for (Vertex h : candidates) {
      if (std::find(used.begin(), used.end(), h) != used.end()) continue;
      if (host.distinct_degree(h) < need) continue;
      phi[p - 1] = h;
      bool ok = true;
      for (auto id : plan.closing[depth]) {
        VertexSet image;
        for (Vertex u : pattern_.distinct_edges()[id]) image.push_back(phi[u - 1]);
        if (!host.has_edge(sorted_set(image))) {
          ok = false;
          break;
        }
      }
      if (!ok || !constraint.push(h)) continue;
      used.push_back(h);
      bool done = search(host, plan, anchor, depth + 1, phi, used, constraint, accept, result);
      used.pop_back();
      constraint.pop(h);
      if (done) return true;
    }
    phi[p - 1] = 0;
    return false;
  }

  std::vector<Vertex> candidates_for(const MultiHypergraph& host, const Plan& plan, const VertexSet* anchor,
                                     std::size_t depth, const Embedding& phi) const {
    const Vertex p = plan.order[depth];
    if (anchor && static_cast<int>(depth) < plan.anchor_size) return *anchor;
    // Pattern edge through p with the most placed vertices.
    const VertexSet* best_edge = nullptr;
    int best_placed = 0;
    for (auto id : pattern_.incident(p)) {
      int placed = 0;
      for (Vertex u : pattern_.distinct_edges()[id])
        if (phi[u - 1]) ++placed;
      if (placed > best_placed) {
        best_placed = placed;
        best_edge = &pattern_.distinct_edges()[id];
      }
    }
    std::vector<Vertex> out;
    if (!best_edge) {
      out.reserve(host.vertex_count());
      for (Vertex v = 1; v <= host.vertex_count(); ++v) out.push_back(v);
      return out;
    }
    VertexSet images;
    for (Vertex u : *best_edge)
      if (phi[u - 1]) images.push_back(phi[u - 1]);
    images = sorted_set(images);
    Vertex pivot = images.front();
    for (Vertex v : images)
      if (host.distinct_degree(v) < host.distinct_degree(pivot)) pivot = v;
    for (auto id : host.incident(pivot)) {
      const VertexSet& e = host.distinct_edges()[id];
      if (!is_subset(images, e)) continue;
      for (Vertex v : e)
        if (!contains_vertex(images, v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  MultiHypergraph pattern_;
  std::vector<int> rank_;
  Plan base_plan_;
  std::vector<Plan> anchored_plans_;
};

inline std::optional<Embedding> contains_copy(const MultiHypergraph& host, const MultiHypergraph& pattern) {
  if (host.uniformity() != pattern.uniformity()) throw ParameterError("uniformity mismatch between host and pattern");
  return EmbeddingSearch(pattern).find(host);
}

}  // namespace semirandom
