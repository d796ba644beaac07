#pragma once

#include <cmath>
#include <string>
#include <unordered_map>

#include "semirandom/starplus.hpp"
#include "semirandom/strategies/common.hpp"

namespace semirandom {

// A collected flower copy: its vertices and r-edges in the host, and the flower embedding.
struct FlowerCopy {
  VertexSet vertices;
  std::vector<VertexSet> edges;
  Embedding phi;  // flower vertex i -> phi[i-1]
};

// Copies pairwise share fewer than r vertices (hence are edge-disjoint) and avoid the center.
class FlowerLedger {
 public:
  explicit FlowerLedger(int r = 0) : r_(r) {}

  const std::vector<FlowerCopy>& copies() const { return copies_; }

  bool admissible(const VertexSet& vertices) const {
    std::unordered_map<std::size_t, int> shared;
    for (Vertex v : vertices) {
      auto it = owners_.find(v);
      if (it == owners_.end()) continue;
      for (std::size_t id : it->second)
        if (++shared[id] >= r_) return false;
    }
    return true;
  }

  std::size_t add(FlowerCopy copy) {
    std::size_t id = copies_.size();
    for (Vertex v : copy.vertices) owners_[v].push_back(id);
    copies_.push_back(std::move(copy));
    return id;
  }

 private:
  int r_;
  std::vector<FlowerCopy> copies_;
  std::unordered_map<Vertex, std::vector<std::size_t>> owners_;
};

struct StarplusOptions {
  // Share of the budget given to Phase 1; unset = 1 without cap, 1/2 when the density
  // condition is strict, 1/ceil(ln n) at equality.
  std::optional<double> phase1_fraction;
};

// Center C = [s-r] is reserved. Phase 1: U avoiding C becomes U + C, and flower copies formed by
// these r-sets are collected online. Phase 2: hits on a copy's designated r-sets place its cap.
class StarplusBuilder : public Strategy {
 public:
  StarplusBuilder(const MultiHypergraph& target, int r, StarplusOptions opt = {})
      : target_(target), r_(r), s_(target.uniformity()), opt_(opt) {
    if (r < 1 || r >= s_) throw ParameterError("starplus_builder needs 1 <= r < s");
    if (!target.is_simple()) throw ParameterError("starplus_builder needs a simple target");
    const int c = s_ - r;
    bool found = false;
    for (auto& d : starplus_decompositions(target, c)) {
      if (d.density_condition != ConditionStatus::violated && d.flower_edge_balanced) {
        dec_ = std::move(d);
        found = true;
        break;
      }
    }
    if (!found) throw ParameterError("starplus_builder: no center of size s-r with an edge-balanced flower meets the density condition");
    flower_search_.emplace(dec_.flower);
    for (Vertex v = 1; v <= target.vertex_count(); ++v) {
      role_.push_back(0);
      if (contains_vertex(dec_.center, v)) {
        role_.back() = -static_cast<int>(std::lower_bound(dec_.center.begin(), dec_.center.end(), v) - dec_.center.begin()) - 1;
      } else {
        role_.back() = static_cast<int>(std::lower_bound(dec_.flower_vertices.begin(), dec_.flower_vertices.end(), v) -
                                        dec_.flower_vertices.begin()) + 1;
      }
    }
    for (const auto& [e, mult] : dec_.cap.sorted_edges())
      for (int i = 0; i < mult; ++i) cap_edges_.push_back(e);
    auto in_center = [&](Vertex v) { return contains_vertex(dec_.center, v); };
    template_ = designate_template(cap_edges_, r, [&](Vertex v) { return !in_center(v); });
  }

  std::string name() const override { return "starplus_builder"; }

  const StarplusDecomposition& decomposition() const { return dec_; }
  // template_r_sets()[i] is the r-subset (target labels) designated for cap edge cap_edges()[i].
  const std::vector<VertexSet>& cap_edges() const { return cap_edges_; }
  const std::vector<VertexSet>& template_r_sets() const { return template_; }
  const FlowerLedger& ledger() const { return ledger_; }
  const PhaseClock& clock() const { return clock_; }

  void reset(const TrialContext& ctx) override {
    if (ctx.params.s != s_ || ctx.params.r != r_) throw ParameterError("starplus_builder: game (r, s) differs");
    n_ = ctx.params.n;
    const Vertex c = static_cast<Vertex>(s_ - r_);
    center_ = vertex_range(1, c);
    double frac = 1.0;
    if (opt_.phase1_fraction) {
      frac = *opt_.phase1_fraction;
    } else if (dec_.excess > 0) {
      frac = dec_.density_condition == ConditionStatus::strict ? 0.5
                                                              : 1.0 / std::ceil(std::log(static_cast<double>(n_)));
    }
    if (dec_.excess == 0) frac = 1.0;
    clock_ = PhaseClock{0, static_cast<std::uint64_t>(std::floor(frac * static_cast<double>(ctx.params.budget))), 0};
    clock_.t2 = ctx.params.budget - clock_.t1;
    r_graph_ = MultiHypergraph(r_, n_);
    ledger_ = FlowerLedger(r_);
    hit_map_.clear();
    remaining_.clear();
    claim_.reset();
  }

  VertexSet respond(const GameView& view, const VertexSet& u) override {
    const Vertex c = static_cast<Vertex>(s_ - r_);
    const bool meets_center = u.front() <= c;
    if (!claim_ && clock_.phase_at(view.step) == 1) {
      if (!meets_center) {
        bool fresh_set = !r_graph_.has_edge(u);
        r_graph_.add_edge(u);
        if (fresh_set) collect_through(u);
        return center_;
      }
    } else if (!claim_ && !meets_center) {
      auto it = hit_map_.find(u);
      if (it != hit_map_.end() && !it->second.second.empty()) {
        std::size_t copy = it->second.first;
        std::size_t cap_index = it->second.second.back();
        it->second.second.pop_back();
        VertexSet image = map_edge(cap_edges_[cap_index], ledger_.copies()[copy].phi);
        if (--remaining_[copy] == 0) claim_ = full_embedding(ledger_.copies()[copy].phi);
        return set_difference(image, u);
      }
    }
    return waste_move(n_, u, s_ - r_, [&](Vertex x) { return x <= c; });
  }

  std::optional<Embedding> claimed_embedding() const override { return claim_; }

  nlohmann::json diagnostics() const override {
    return {{"collected_flowers", ledger_.copies().size()}, {"phase1_steps", clock_.t1}};
  }

 private:
  struct AvoidCenter {
    Vertex c;
    bool push(Vertex v) { return v > c; }
    void pop(Vertex) {}
  };

  void collect_through(const VertexSet& u) {
    AvoidCenter avoid{static_cast<Vertex>(s_ - r_)};
    auto accept = [&](const Embedding& phi) { return ledger_.admissible(sorted_set(VertexSet(phi.begin(), phi.end()))); };
    auto phi = flower_search_->find_through(r_graph_, u, avoid, accept);
    if (!phi) return;
    FlowerCopy copy;
    copy.phi = *phi;
    copy.vertices = sorted_set(VertexSet(phi->begin(), phi->end()));
    for (const auto& e : dec_.flower.distinct_edges()) {
      VertexSet img;
      for (Vertex p : e) img.push_back((*phi)[p - 1]);
      copy.edges.push_back(sorted_set(img));
    }
    std::size_t id = ledger_.add(std::move(copy));
    const auto& phi_ref = ledger_.copies()[id].phi;
    if (cap_edges_.empty()) {
      claim_ = full_embedding(phi_ref);
      return;
    }
    remaining_[id] = cap_edges_.size();
    // Cap edges are consumed in template order; stored reversed so pop_back takes the first.
    for (std::size_t i = cap_edges_.size(); i-- > 0;) {
      VertexSet key = map_edge(template_[i], phi_ref);
      auto& slot = hit_map_[key];
      slot.first = id;
      slot.second.push_back(i);
    }
  }

  Vertex image_of(Vertex target_vertex, const Embedding& flower_phi) const {
    int role = role_[target_vertex - 1];
    return role < 0 ? static_cast<Vertex>(-role) : flower_phi[role - 1];
  }

  VertexSet map_edge(const VertexSet& e, const Embedding& flower_phi) const {
    VertexSet out;
    for (Vertex v : e) out.push_back(image_of(v, flower_phi));
    return sorted_set(out);
  }

  Embedding full_embedding(const Embedding& flower_phi) const {
    Embedding phi;
    for (Vertex v = 1; v <= target_.vertex_count(); ++v) phi.push_back(image_of(v, flower_phi));
    return phi;
  }

  MultiHypergraph target_;
  int r_, s_;
  StarplusOptions opt_;
  StarplusDecomposition dec_;
  std::optional<EmbeddingSearch> flower_search_;
  std::vector<int> role_;  // -(i+1): i-th center vertex; i > 0: flower vertex i
  std::vector<VertexSet> cap_edges_, template_;

  Vertex n_ = 0;
  VertexSet center_;
  PhaseClock clock_;
  MultiHypergraph r_graph_;
  FlowerLedger ledger_;
  VertexSetMap<std::pair<std::size_t, std::vector<std::size_t>>> hit_map_;
  std::unordered_map<std::size_t, std::size_t> remaining_;
  std::optional<Embedding> claim_;
};

}  // namespace semirandom
