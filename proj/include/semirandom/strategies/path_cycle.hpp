#pragma once

#include <string>
#include <unordered_map>

#include "semirandom/strategies/common.hpp"
#include "semirandom/targets.hpp"

namespace semirandom {

inline void check_loose_params(int m, int s, int ell, int r) {
  if (m < 1 || ell < 1 || 2 * ell > s) throw ParameterError("need m >= 1 and 1 <= ell <= s/2");
  if (r < 1 || s - r < ell) throw ParameterError("need s - r >= ell");
}

inline void check_cycle_params(int m, int s, int ell) {
  if (m < (s + 1) / (s - ell) || (s - ell) * m < s + 1) throw ParameterError("cycle length too small for s and ell");
}

// Grows one path from e_1, extending it whenever U misses the path.
class PathBuilder : public Strategy {
 public:
  PathBuilder(int m, int s, int ell, int r) : m_(m), s_(s), ell_(ell), r_(r) { check_loose_params(m, s, ell, r); }

  std::string name() const override { return "path_builder"; }

  void reset(const TrialContext& ctx) override {
    if (ctx.params.s != s_ || ctx.params.r != r_) throw ParameterError("path_builder: game (r, s) differs from the strategy's");
    n_ = ctx.params.n;
    path_ = PathGrower(n_, s_, ell_);
    pool_ = FreshPool(n_);
  }

  VertexSet respond(const GameView& view, const VertexSet& u) override {
    if (path_.edges() < m_) {
      auto v = path_.grow(view.graph, u, r_, pool_, [](Vertex) { return false; });
      if (v) return *v;
    }
    return waste_move(n_, u, s_ - r_, [&](Vertex x) { return path_.contains(x); });
  }

  std::optional<Embedding> claimed_embedding() const override {
    if (path_.edges() < m_) return std::nullopt;
    return Embedding(path_.sequence().begin(), path_.sequence().end());
  }

  const PathGrower& path() const { return path_; }

 private:
  int m_, s_, ell_, r_;
  Vertex n_ = 0;
  PathGrower path_;
  FreshPool pool_;
};

// Builds P_{m-1} and closes it with l end vertices from each end-edge (regime s - r >= 2l).
class LooseCycleBuilder : public Strategy {
 public:
  LooseCycleBuilder(int m, int s, int ell, int r) : m_(m), s_(s), ell_(ell), r_(r) {
    check_loose_params(m, s, ell, r);
    check_cycle_params(m, s, ell);
    if (s - r < 2 * ell) throw ParameterError("loose_cycle_builder needs s - r >= 2 ell");
  }

  std::string name() const override { return "loose_cycle_builder"; }

  void reset(const TrialContext& ctx) override {
    if (ctx.params.s != s_ || ctx.params.r != r_) throw ParameterError("loose_cycle_builder: game (r, s) differs");
    n_ = ctx.params.n;
    path_ = PathGrower(n_, s_, ell_);
    pool_ = FreshPool(n_);
    closing_.reset();
  }

  VertexSet respond(const GameView& view, const VertexSet& u) override {
    auto reserved = [&](Vertex x) { return path_.contains(x); };
    if (path_.edges() < m_ - 1) {
      auto v = path_.grow(view.graph, u, r_, pool_, [](Vertex) { return false; });
      if (v) return *v;
    } else if (!closing_ && !path_.meets(u)) {
      auto fresh = pool_.take(view.graph, u, s_ - 2 * ell_ - r_, reserved);
      if (fresh) {
        closing_ = set_union(u, *fresh);
        return set_union(set_union(path_.left_end(), path_.right_end()), *fresh);
      }
    }
    return waste_move(n_, u, s_ - r_, reserved);
  }

  std::optional<Embedding> claimed_embedding() const override {
    if (!closing_) return std::nullopt;
    Embedding phi(path_.sequence().begin(), path_.sequence().end());
    phi.insert(phi.end(), closing_->begin(), closing_->end());
    return phi;
  }

 private:
  int m_, s_, ell_, r_;
  Vertex n_ = 0;
  PathGrower path_;
  FreshPool pool_;
  std::optional<VertexSet> closing_;  // vertices of the closing edge outside the path
};

// Shared skeleton of the two cycle strategies for s - r <= 2l - 1: Phase 0 grows P = P_{m-3},
// Phase 1 collects edges E' through L' and E'' through L'', Phase 2 waits for a closing U.
class CycleStrategyBase : public Strategy {
 public:
  CycleStrategyBase(int m, int s, int ell, int r) : m_(m), s_(s), ell_(ell), r_(r) {
    check_loose_params(m, s, ell, r);
    check_cycle_params(m, s, ell);
    if (m < 3) throw ParameterError("cycle strategies need m >= 3");
  }

  void reset(const TrialContext& ctx) override {
    if (ctx.params.s != s_ || ctx.params.r != r_) throw ParameterError(name() + ": game (r, s) differs");
    n_ = ctx.params.n;
    budget_ = ctx.params.budget;
    path_ = PathGrower(n_, s_, ell_);
    pool_ = FreshPool(n_);
    structure_.assign(n_ + 1, 0);
    phase1_start_ = 0;
    claim_.reset();
    e1_.clear();
    e2_.clear();
    l1_.clear();
    l2_.clear();
    prefix_.clear();
    if (m_ == 3) {
      for (Vertex v = n_ - static_cast<Vertex>(ell_) + 1; v <= n_; ++v) l1_.push_back(v);
      l2_ = l1_;
      for (Vertex v : l1_) structure_[v] = 1;
      prefix_ = std::vector<Vertex>(l1_.begin(), l1_.end());
    }
    on_reset();
  }

  VertexSet respond(const GameView& view, const VertexSet& u) override {
    if (phase1_start_ == 0) {
      if (path_.edges() < m_ - 3) {
        auto v = path_.grow(view.graph, u, r_, pool_, [&](Vertex x) { return structure_[x] != 0; });
        if (v) {
          if (path_.edges() == m_ - 3) finish_phase0(view.step + 1);
          return *v;
        }
        return waste(u);
      }
      finish_phase0(view.step);
    }
    const std::uint64_t t1 = budget_ >= static_cast<std::uint64_t>(m_ - 3) ? (budget_ - (m_ - 3)) / 2 : 0;
    std::optional<VertexSet> v;
    if (view.step < phase1_start_ + t1) {
      v = phase1(view, u);
    } else {
      v = phase2(view, u);
    }
    return v ? *v : waste(u);
  }

  std::optional<Embedding> claimed_embedding() const override { return claim_; }

  std::uint64_t phase1_start() const { return phase1_start_; }
  const VertexSet& l_prime() const { return l1_; }
  const VertexSet& l_double_prime() const { return l2_; }
  const std::vector<VertexSet>& e_prime() const { return e1_; }
  const std::vector<VertexSet>& e_double_prime() const { return e2_; }

 protected:
  virtual void on_reset() {}
  virtual void on_phase0_done() {}
  virtual std::optional<VertexSet> phase1(const GameView& view, const VertexSet& u) = 0;
  virtual std::optional<VertexSet> phase2(const GameView& view, const VertexSet& u) = 0;

  VertexSet waste(const VertexSet& u) const {
    return waste_move(n_, u, s_ - r_, [&](Vertex x) { return structure_[x] != 0; });
  }

  bool meets_structure(const VertexSet& u) const {
    return std::any_of(u.begin(), u.end(), [&](Vertex x) { return structure_[x] != 0; });
  }

  void mark(const VertexSet& e) {
    for (Vertex v : e) structure_[v] = 1;
  }

  // The closing edge joins e'' (through L'') and e' (through L'). `shared2` and `shared1` are the
  // l vertices it takes from e'' and e'; `own` are its remaining s - 2l vertices.
  void claim(const VertexSet& e_first, const VertexSet& e_second, const VertexSet& shared1, const VertexSet& shared2,
             const VertexSet& own) {
    Embedding phi = prefix_;
    for (Vertex v : set_difference(set_difference(e_second, l2_), shared2)) phi.push_back(v);
    phi.insert(phi.end(), shared2.begin(), shared2.end());
    phi.insert(phi.end(), own.begin(), own.end());
    phi.insert(phi.end(), shared1.begin(), shared1.end());
    for (Vertex v : set_difference(set_difference(e_first, l1_), shared1)) phi.push_back(v);
    claim_ = std::move(phi);
  }

  int m_, s_, ell_, r_;
  Vertex n_ = 0;
  std::uint64_t budget_ = 0;
  PathGrower path_;
  FreshPool pool_;
  std::vector<char> structure_;  // P, L', L'' and all Phase-1 edges
  VertexSet l1_, l2_;            // L' and L''
  std::vector<Vertex> prefix_;   // P in path order (L alone when m = 3)
  std::vector<VertexSet> e1_, e2_;
  std::uint64_t phase1_start_ = 0;
  std::optional<Embedding> claim_;

 private:
  void finish_phase0(std::uint64_t next_step) {
    phase1_start_ = next_step;
    if (m_ >= 4) {
      l1_ = path_.left_end();
      l2_ = path_.right_end();
      prefix_ = path_.sequence();
      for (Vertex v : prefix_) structure_[v] = 1;
    }
    on_phase0_done();
  }
};

// Regime s - r = 2l - 1. Phase 1: a U missing every structure edge gets L' (odd steps) or L''
// (even steps) plus l - 1 fresh vertices. Phase 2: U missing P, meeting some e' in one vertex
// and missing some e'' closes the cycle.
class CycleThreePhase : public CycleStrategyBase {
 public:
  CycleThreePhase(int m, int s, int ell, int r) : CycleStrategyBase(m, s, ell, r) {
    if (s - r != 2 * ell - 1) throw ParameterError("cycle_three_phase needs s - r = 2 ell - 1");
  }

  std::string name() const override { return "cycle_three_phase"; }

 protected:
  void on_reset() override { owner_.clear(); }

  std::optional<VertexSet> phase1(const GameView& view, const VertexSet& u) override {
    if (meets_structure(u)) return std::nullopt;
    bool odd = view.step % 2 == 1;
    const VertexSet& lset = odd ? l1_ : l2_;
    auto fresh = pool_.take(view.graph, u, ell_ - 1, [&](Vertex x) { return structure_[x] != 0; });
    if (!fresh) return std::nullopt;
    VertexSet body = set_union(u, *fresh);  // the edge minus L
    auto& family = odd ? e1_ : e2_;
    // Ids: E' edges are 2i, E'' edges are 2i + 1.
    std::uint32_t id = static_cast<std::uint32_t>(2 * family.size() + (odd ? 0 : 1));
    for (Vertex v : body) owner_[v] = id;
    family.push_back(set_union(body, lset));
    mark(body);
    return set_union(lset, *fresh);
  }

  std::optional<VertexSet> phase2(const GameView&, const VertexSet& u) override {
    if (claim_) return std::nullopt;
    for (Vertex x : u)
      if (path_.contains(x) || contains_vertex(l1_, x) || contains_vertex(l2_, x)) return std::nullopt;
    std::unordered_map<std::uint32_t, int> hits;
    for (Vertex x : u) {
      auto it = owner_.find(x);
      if (it != owner_.end()) ++hits[it->second];
    }
    const bool pooled = m_ == 3;  // L' = L'': E' and E'' play the same role
    std::optional<std::uint32_t> first;
    Vertex hit_vertex = 0;
    for (const auto& [id, c] : hits) {
      if (c != 1 || (!pooled && id % 2 != 0)) continue;
      if (!first || id < *first) first = id;
    }
    if (!first) return std::nullopt;
    for (Vertex x : u)
      if (owner_.count(x) && owner_.at(x) == *first) hit_vertex = x;
    std::optional<std::uint32_t> second;
    std::size_t total = 2 * std::max(e1_.size(), e2_.size()) + 2;
    for (std::uint32_t id = pooled ? 0 : 1; id < total; id += pooled ? 1 : 2) {
      if (id == *first || !exists(id) || hits.count(id)) continue;
      second = id;
      break;
    }
    if (!second) return std::nullopt;
    const VertexSet& ef = edge(*first);
    const VertexSet& es = edge(*second);
    VertexSet rest_first = set_difference(set_difference(ef, l1_), {hit_vertex});
    VertexSet take_first(rest_first.begin(), rest_first.begin() + (ell_ - 1));
    VertexSet rest_second = set_difference(es, l2_);
    VertexSet take_second(rest_second.begin(), rest_second.begin() + ell_);
    VertexSet shared1 = set_union(take_first, {hit_vertex});
    VertexSet own = set_difference(u, {hit_vertex});
    claim(ef, es, shared1, take_second, own);
    return set_union(take_first, take_second);
  }

 private:
  bool exists(std::uint32_t id) const { return id % 2 == 0 ? id / 2 < e1_.size() : id / 2 < e2_.size(); }
  const VertexSet& edge(std::uint32_t id) const { return id % 2 == 0 ? e1_[id / 2] : e2_[id / 2]; }

  std::unordered_map<Vertex, std::uint32_t> owner_;  // vertex of a Phase-1 edge outside L' and L'' -> edge id
};

// Regime s - r = 2l - x with 2 <= x <= min(r, l). The vertices outside P are split into thirds
// W1, W2, W3. Phase 1: U inside W1 (W2) gets L' (L'') plus l - x further vertices of W1 (W2).
// Phase 2: U with floor(x/2) vertices in some e' \ L', ceil(x/2) in some e'' \ L'' and the rest in W3.
class CycleGeneralX : public CycleStrategyBase {
 public:
  CycleGeneralX(int m, int s, int ell, int r) : CycleStrategyBase(m, s, ell, r), x_(2 * ell - (s - r)) {
    if (x_ < 2 || x_ > std::min(r, ell)) throw ParameterError("cycle_general_x needs 2 <= 2 ell - (s - r) <= min(r, ell)");
  }

  std::string name() const override { return "cycle_general_x"; }

  int x() const { return x_; }
  int zone(Vertex v) const { return zone_.at(v); }
  // Number of floor(x/2)-sets that reached a fourth containing U.
  std::uint64_t trice_violations() const { return trice_violations_; }

  nlohmann::json diagnostics() const override { return {{"trice_violations", trice_violations_}}; }

 protected:
  void on_reset() override {
    zone_.assign(n_ + 1, 0);
    index1_.clear();
    index2_.clear();
    qcount_.clear();
    trice_violations_ = 0;
    cursor1_ = cursor2_ = 0;
    if (m_ == 3) split();
  }

  void on_phase0_done() override {
    if (m_ >= 4) split();
  }

  std::optional<VertexSet> phase1(const GameView& view, const VertexSet& u) override {
    count_trice(u);
    int z = zone_[u.front()];
    if (z != 1 && z != 2) return std::nullopt;
    for (Vertex v : u)
      if (zone_[v] != z) return std::nullopt;
    const VertexSet& lset = z == 1 ? l1_ : l2_;
    VertexSet extra = pick_in_zone(view.graph, u, z, ell_ - x_);
    if (static_cast<int>(extra.size()) < ell_ - x_) return std::nullopt;
    VertexSet body = set_union(u, extra);
    auto& family = z == 1 ? e1_ : e2_;
    auto& index = z == 1 ? index1_ : index2_;
    std::size_t q = z == 1 ? static_cast<std::size_t>(x_ / 2) : static_cast<std::size_t>(x_ - x_ / 2);
    std::size_t id = family.size();
    family.push_back(set_union(body, lset));
    for_each_subset(body, q, [&](const VertexSet& sub) {
      index.emplace(sub, id);
      return true;
    });
    return set_union(lset, extra);
  }

  std::optional<VertexSet> phase2(const GameView& view, const VertexSet& u) override {
    count_trice(u);
    if (claim_) return std::nullopt;
    (void)view;
    VertexSet a, b, c;
    for (Vertex v : u) {
      switch (zone_[v]) {
        case 1: a.push_back(v); break;
        case 2: b.push_back(v); break;
        case 3: c.push_back(v); break;
        default: return std::nullopt;
      }
    }
    const int q1 = x_ / 2, q2 = x_ - x_ / 2;
    if (static_cast<int>(a.size()) != q1 || static_cast<int>(b.size()) != q2) return std::nullopt;
    auto i1 = index1_.find(a);
    auto i2 = index2_.find(b);
    if (i1 == index1_.end() || i2 == index2_.end()) return std::nullopt;
    const VertexSet& ef = e1_[i1->second];
    const VertexSet& es = e2_[i2->second];
    VertexSet rest1 = set_difference(set_difference(ef, l1_), a);
    VertexSet rest2 = set_difference(set_difference(es, l2_), b);
    VertexSet take1(rest1.begin(), rest1.begin() + (ell_ - q1));
    VertexSet take2(rest2.begin(), rest2.begin() + (ell_ - q2));
    claim(ef, es, set_union(a, take1), set_union(b, take2), c);
    return set_union(take1, take2);
  }

 private:
  void split() {
    VertexSet rest;
    for (Vertex v = 1; v <= n_; ++v)
      if (!structure_[v]) rest.push_back(v);
    const std::size_t total = rest.size();
    for (std::size_t i = 0; i < total; ++i) zone_[rest[i]] = static_cast<char>(1 + (3 * i) / total);
    for (std::size_t i = 0; i < total; ++i) zone_end_[static_cast<int>(zone_[rest[i]])] = rest[i];
    cursor1_ = zone_end_[1];
    cursor2_ = zone_end_[2];
  }

  // `count` untouched vertices of zone z outside u (top-down); falls back to any zone vertices outside u.
  VertexSet pick_in_zone(const MultiHypergraph& g, const VertexSet& u, int z, int count) {
    VertexSet out;
    if (count == 0) return out;
    Vertex& cur = z == 1 ? cursor1_ : cursor2_;
    while (static_cast<int>(out.size()) < count && cur >= 1) {
      Vertex v = cur--;
      if (zone_[v] != z || g.degree(v) > 0 || contains_vertex(u, v)) continue;
      out.push_back(v);
    }
    if (static_cast<int>(out.size()) < count) {
      out.clear();
      for (Vertex v = 1; v <= n_ && static_cast<int>(out.size()) < count; ++v)
        if (zone_[v] == z && !contains_vertex(u, v)) out.push_back(v);
    }
    return sorted_set(out);
  }

  void count_trice(const VertexSet& u) {
    for_each_subset(u, static_cast<std::size_t>(x_ / 2), [&](const VertexSet& sub) {
      if (++qcount_[sub] == 4) ++trice_violations_;
      return true;
    });
  }

  int x_;
  std::vector<char> zone_;  // 0 = P or L, 1..3 = W1..W3
  Vertex zone_end_[4] = {0, 0, 0, 0};
  Vertex cursor1_ = 0, cursor2_ = 0;
  VertexSetMap<std::size_t> index1_, index2_;
  VertexSetMap<int> qcount_;
  std::uint64_t trice_violations_ = 0;
};

}  // namespace semirandom
