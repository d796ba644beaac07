#pragma once

#include <string>

#include "semirandom/process.hpp"

namespace semirandom {

// V_t uniform among (s-r)-subsets of [n] \ U_t, from stream 1 of (seed, trial). Never reports
// success; the engine's containment checks detect it.
class BaselineRandom : public Strategy {
 public:
  std::string name() const override { return "baseline_random"; }

  void reset(const TrialContext& ctx) override {
    params_ = ctx.params;
    rng_.emplace(ctx.seed, ctx.trial, 1);
  }

  VertexSet respond(const GameView&, const VertexSet& u) override {
    return draw_subset_avoiding(*rng_, params_.n, params_.s - params_.r, u);
  }

  bool self_reporting() const override { return false; }

 private:
  GameParams params_;
  std::optional<RandomStream> rng_;
};

}  // namespace semirandom
