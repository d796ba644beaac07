#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>

#include "semirandom/clique_split.hpp"
#include "semirandom/strategies/common.hpp"
#include "semirandom/targets.hpp"

namespace semirandom {

struct CliqueOptions {
  // Cap on the Phase-0 length; the effective length is min(cap, budget / 10).
  std::optional<std::uint64_t> phase0_cap;
  // Share of the post-Phase-0 budget given to Phase 1; unset = 1 when nothing remains for
  // Phase 2, 1/2 when the split constraint is strict, 1/ceil(ln n) at equality.
  std::optional<double> phase1_fraction;
};

// Builds K_k^(s) around a clique L on l = l_k(r,s) vertices. Phase 0 builds K_l^(s) with a
// nested builder (or takes L = the top l vertices when l < s). Phase 1 extends the i-th hit of U
// to U + S^(i)_{U cap L}; copies of the rooted r-graph F are collected online. Phase 2 places the
// edges with more than r vertices outside L through designated r-sets.
class CliqueBuilder : public Strategy {
 public:
  CliqueBuilder(int k, int s, int r, CliqueOptions opt = {}) : k_(k), s_(s), r_(r), opt_(opt) {
    if (!(1 <= r && r < s && s <= k)) throw ParameterError("clique_builder needs 1 <= r < s <= k");
    if (k == s) {
      ell_ = s - r;
      return;
    }
    if (r < 2) throw ParameterError("clique_builder needs r >= 2 when k > s");
    ell_ = static_cast<int>(clique_split_level(r, s, k));
    strict_ = clique_split_slack(r, s, k, ell_) < 0;
    h_ = k - ell_;
    j0_ = std::max(1, s - ell_);
    // Assignment T_S = the r-j smallest elements of S, for S ranging over (s-j)-subsets of [l].
    VertexSet lidx = vertex_range(1, static_cast<Vertex>(ell_));
    for (int j = j0_; j <= r; ++j) {
      for_each_subset(lidx, static_cast<std::size_t>(s - j), [&](const VertexSet& S) {
        VertexSet T(S.begin(), S.begin() + (r - j));
        assignment_[T].push_back(S);
        return true;
      });
    }
    // Phase-2 edges: s-subsets of [k] with at least r+1 vertices outside [l].
    VertexSet all = vertex_range(1, static_cast<Vertex>(k));
    for_each_subset(all, static_cast<std::size_t>(s), [&](const VertexSet& e) {
      int outside = static_cast<int>(std::count_if(e.begin(), e.end(), [&](Vertex v) { return v > static_cast<Vertex>(ell_); }));
      if (outside >= r + 1) h2_edges_.push_back(e);
      return true;
    });
    template_ = designate_template(h2_edges_, r, [&](Vertex v) { return v > static_cast<Vertex>(ell_); });
    MultiHypergraph pattern(r, static_cast<Vertex>(h_));
    for_each_subset(vertex_range(1, static_cast<Vertex>(h_)), static_cast<std::size_t>(r), [&](const VertexSet& e) {
      pattern.add_edge(e);
      return true;
    });
    f_search_.emplace(pattern);
  }

  std::string name() const override { return "clique_builder"; }

  int level() const { return ell_; }
  // T (indices into sorted L) -> the sets S^(1), S^(2), ... assigned to it, in order.
  const std::map<VertexSet, std::vector<VertexSet>>& assignment() const { return assignment_; }
  int multiplicity(const VertexSet& t) const {
    auto it = assignment_.find(t);
    return it == assignment_.end() ? 0 : static_cast<int>(it->second.size());
  }
  // Phase-2 edges (labels 1..k, L = 1..l) and their designated r-subsets.
  const std::vector<VertexSet>& phase2_edges() const { return h2_edges_; }
  const std::vector<VertexSet>& phase2_template() const { return template_; }
  const VertexSet& reserved_set() const { return l_; }
  // Outside vertex sets of the collected copies of F.
  const std::vector<VertexSet>& collected() const { return copies_; }
  const PhaseClock& clock() const { return clock_; }

  void reset(const TrialContext& ctx) override {
    if (ctx.params.s != s_ || ctx.params.r != r_) throw ParameterError("clique_builder: game (r, s) differs");
    n_ = ctx.params.n;
    budget_ = ctx.params.budget;
    claim_.reset();
    l_.clear();
    in_l_.assign(n_ + 1, 0);
    hits1_.clear();
    good_r_by_vertex_.clear();
    good_.clear();
    good_r_.clear();
    copies_.clear();
    hit_map_.clear();
    remaining_.clear();
    phase_ = 0;
    nested_.reset();
    if (k_ == s_) return;
    f_host_ = MultiHypergraph(r_, n_);
    if (ell_ >= s_) {
      std::uint64_t t0 = budget_ / 10;
      if (opt_.phase0_cap) t0 = std::min(t0, *opt_.phase0_cap);
      clock_ = PhaseClock{t0, 0, 0};
      nested_ = std::make_unique<CliqueBuilder>(ell_, s_, r_, CliqueOptions{opt_.phase0_cap, std::nullopt});
      GameParams inner = ctx.params;
      inner.budget = t0;
      nested_->reset(TrialContext{inner, ctx.seed, ctx.trial});
    } else {
      for (Vertex v = n_ - static_cast<Vertex>(ell_) + 1; v <= n_; ++v) l_.push_back(v);
      start_phase1(0);
    }
  }

  VertexSet respond(const GameView& view, const VertexSet& u) override {
    if (k_ == s_) {
      if (claim_) return waste_move(n_, u, s_ - r_);
      VertexSet v = waste_move(n_, u, s_ - r_);
      Embedding phi;
      for (Vertex x : set_union(u, v)) phi.push_back(x);
      claim_ = phi;
      return v;
    }
    auto reserved = [&](Vertex x) { return in_l_[x] != 0; };
    if (claim_) return waste_move(n_, u, s_ - r_, reserved);
    if (phase_ == 0) {
      if (view.step > clock_.t0) {
        phase_ = 3;  // Phase 0 failed: nothing left to do
      } else {
        VertexSet v = nested_->respond(view, u);
        if (auto inner = nested_->claimed_embedding()) {
          l_ = sorted_set(VertexSet(inner->begin(), inner->end()));
          start_phase1(view.step);
        }
        return v;
      }
    }
    if (phase_ == 1 && view.step > clock_.t0 + clock_.t1) phase_ = 2;
    if (phase_ == 1) {
      auto v = phase1(u);
      if (v) return *v;
    } else if (phase_ == 2) {
      auto v = phase2(u);
      if (v) return *v;
    }
    return waste_move(n_, u, s_ - r_, reserved);
  }

  std::optional<Embedding> claimed_embedding() const override { return claim_; }

  nlohmann::json diagnostics() const override {
    return {{"level", ell_}, {"collected", copies_.size()}, {"phase0_failed", phase_ == 3}};
  }

 private:
  void start_phase1(std::uint64_t phase0_end) {
    for (Vertex v : l_) in_l_[v] = 1;
    clock_.t0 = phase0_end;
    const std::uint64_t rest = budget_ - std::min(budget_, phase0_end);
    double frac;
    if (opt_.phase1_fraction) {
      frac = *opt_.phase1_fraction;
    } else if (h2_edges_.empty()) {
      frac = 1.0;
    } else {
      frac = strict_ ? 0.5 : 1.0 / std::ceil(std::log(static_cast<double>(n_)));
    }
    if (h2_edges_.empty()) frac = 1.0;
    clock_.t1 = static_cast<std::uint64_t>(std::floor(frac * static_cast<double>(rest)));
    clock_.t2 = rest - clock_.t1;
    phase_ = 1;
  }

  // Index set of U cap L within sorted L, and the part of U outside L.
  std::pair<VertexSet, VertexSet> split(const VertexSet& u) const {
    VertexSet t, y;
    for (Vertex x : u) {
      if (in_l_[x]) {
        t.push_back(static_cast<Vertex>(std::lower_bound(l_.begin(), l_.end(), x) - l_.begin()) + 1);
      } else {
        y.push_back(x);
      }
    }
    return {t, y};
  }

  VertexSet l_image(const VertexSet& idx) const {
    VertexSet out;
    for (Vertex i : idx) out.push_back(l_[i - 1]);
    return out;
  }

  std::optional<VertexSet> phase1(const VertexSet& u) {
    auto [t, y] = split(u);
    if (y.empty()) return std::nullopt;
    int i = ++hits1_[u];
    auto it = assignment_.find(t);
    std::optional<VertexSet> v;
    if (it != assignment_.end() && i <= static_cast<int>(it->second.size()))
      v = l_image(set_difference(it->second[i - 1], t));
    if (i == multiplicity(t)) on_saturated(y);
    return v;
  }

  bool is_good(const VertexSet& y) const {
    int j = static_cast<int>(y.size());
    if (j < j0_) return true;
    auto it = good_.find(y);
    return it != good_.end() && it->second;
  }

  // Whether every r-set y + T with m_T > 0 has reached its multiplicity.
  bool compute_good(const VertexSet& y) const {
    int j = static_cast<int>(y.size());
    if (j < j0_) return true;
    bool ok = true;
    for_each_subset(vertex_range(1, static_cast<Vertex>(ell_)), static_cast<std::size_t>(r_ - j), [&](const VertexSet& t) {
      int m = multiplicity(t);
      if (m == 0) return true;
      auto h = hits1_.find(set_union(y, l_image(t)));
      if (h == hits1_.end() || h->second < m) {
        ok = false;
        return false;
      }
      return true;
    });
    return ok;
  }

  bool fully_good(const VertexSet& y) const {
    bool ok = true;
    for (std::size_t q = 1; q <= y.size() && ok; ++q)
      for_each_subset(y, q, [&](const VertexSet& sub) {
        if (!is_good(sub)) ok = false;
        return ok;
      });
    return ok;
  }

  void on_saturated(const VertexSet& y) {
    if (good_.count(y) && good_[y]) return;
    if (!compute_good(y)) return;
    good_[y] = 1;
    if (static_cast<int>(y.size()) == r_) {
      for (Vertex v : y) good_r_by_vertex_[v].push_back(y);
      try_add(y);
    } else {
      // r-sets through y that were waiting for y.
      std::vector<VertexSet> candidates;
      for (const auto& z : good_r_by_vertex_[y.front()])
        if (is_subset(y, z)) candidates.push_back(z);
      for (const auto& z : candidates) try_add(z);
    }
  }

  void try_add(const VertexSet& z) {
    if (good_r_.count(z) || !fully_good(z)) return;
    good_r_.emplace(z, 1);
    f_host_.add_edge(z);
    auto accept = [&](const Embedding& phi) {
      VertexSet x = sorted_set(VertexSet(phi.begin(), phi.end()));
      for (const auto& c : copies_)
        if (static_cast<int>(set_intersection(c, x).size()) >= r_) return false;
      return true;
    };
    auto phi = f_search_->find_through(f_host_, z, NoVertexConstraint{}, accept);
    if (!phi) return;
    VertexSet x = sorted_set(VertexSet(phi->begin(), phi->end()));
    std::size_t id = copies_.size();
    copies_.push_back(x);
    if (h2_edges_.empty()) {
      claim_ = embedding_for(x);
      return;
    }
    remaining_[id] = h2_edges_.size();
    for (std::size_t i = h2_edges_.size(); i-- > 0;) {
      auto& slot = hit_map_[map_pattern(template_[i], x)];
      slot.first = id;
      slot.second.push_back(i);
    }
  }

  std::optional<VertexSet> phase2(const VertexSet& u) {
    auto it = hit_map_.find(u);
    if (it == hit_map_.end() || it->second.second.empty()) return std::nullopt;
    std::size_t id = it->second.first;
    std::size_t edge = it->second.second.back();
    it->second.second.pop_back();
    VertexSet image = map_pattern(h2_edges_[edge], copies_[id]);
    if (--remaining_[id] == 0) claim_ = embedding_for(copies_[id]);
    return set_difference(image, u);
  }

  // Pattern labels 1..l -> sorted L, l+1..k -> sorted outside set x.
  VertexSet map_pattern(const VertexSet& e, const VertexSet& x) const {
    VertexSet out;
    for (Vertex p : e) out.push_back(p <= static_cast<Vertex>(ell_) ? l_[p - 1] : x[p - ell_ - 1]);
    return sorted_set(out);
  }

  Embedding embedding_for(const VertexSet& x) const {
    Embedding phi(l_.begin(), l_.end());
    phi.insert(phi.end(), x.begin(), x.end());
    return phi;
  }

  int k_, s_, r_;
  CliqueOptions opt_;
  int ell_ = 0, h_ = 0, j0_ = 1;
  bool strict_ = false;
  std::map<VertexSet, std::vector<VertexSet>> assignment_;
  std::vector<VertexSet> h2_edges_, template_;
  std::optional<EmbeddingSearch> f_search_;

  Vertex n_ = 0;
  std::uint64_t budget_ = 0;
  int phase_ = 0;  // 0..2, 3 = gave up
  PhaseClock clock_;
  std::unique_ptr<CliqueBuilder> nested_;
  VertexSet l_;
  std::vector<char> in_l_;
  VertexSetMap<int> hits1_;
  VertexSetMap<char> good_;
  std::unordered_map<Vertex, std::vector<VertexSet>> good_r_by_vertex_;
  VertexSetMap<char> good_r_;
  MultiHypergraph f_host_;
  std::vector<VertexSet> copies_;
  VertexSetMap<std::pair<std::size_t, std::vector<std::size_t>>> hit_map_;
  std::unordered_map<std::size_t, std::size_t> remaining_;
  std::optional<Embedding> claim_;
};

}  // namespace semirandom
