#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semirandom/hypergraph.hpp"
#include "semirandom/rational.hpp"

// Probability that t independent uniform r-set draws hit the i-th of q fixed r-sets at least
// m_i times each, by dynamic programming over count vectors capped at m_i.

namespace semirandom {

enum class DpMode { automatic, exact, floating };

inline constexpr std::uint64_t kDpStateLimit = 10000000;
inline constexpr std::uint64_t kDpExactStates = 10000;
inline constexpr std::uint64_t kDpExactSteps = 10000;
inline constexpr std::uint64_t kDpExactWork = 2000000;  // states * t

struct HitProbability {
  double value = 0;
  std::optional<Rational> exact;
  std::string mode;        // "exact" or "floating"
  double mass_error = 0;   // |1 - total mass| after the last step (0 in exact mode)
  std::uint64_t states = 0;
};

namespace detail {

struct CappedStates {
  std::vector<int> caps;
  std::vector<std::uint64_t> stride;
  std::uint64_t count = 1;

  explicit CappedStates(const std::vector<int>& mult) : caps(mult) {
    for (int m : mult) {
      if (m < 1) throw ParameterError("multiplicities must be at least 1");
      stride.push_back(count);
      if (count > kDpStateLimit / static_cast<std::uint64_t>(m + 1))
        throw ResourceError("hit DP state space exceeds 1e7 states");
      count *= static_cast<std::uint64_t>(m + 1);
    }
  }

  int digit(std::uint64_t state, std::size_t i) const {
    return static_cast<int>((state / stride[i]) % static_cast<std::uint64_t>(caps[i] + 1));
  }
};

}  // namespace detail

inline HitProbability exact_hit_probability(const std::vector<int>& mult, Vertex n, int r, std::uint64_t t,
                                            DpMode mode = DpMode::automatic) {
  if (r < 1 || static_cast<Vertex>(r) > n) throw ParameterError("hit DP needs 1 <= r <= n");
  const BigInt outcomes = binom(n, r);
  if (outcomes < BigInt(mult.size())) throw ParameterError("more required r-sets than r-subsets of [n]");
  detail::CappedStates sp(mult);
  HitProbability res;
  res.states = sp.count;
  const std::uint64_t full = sp.count - 1;  // every digit at its cap
  bool exact = mode == DpMode::exact ||
               (mode == DpMode::automatic && sp.count <= kDpExactStates && t <= kDpExactSteps &&
                sp.count * std::max<std::uint64_t>(t, 1) <= kDpExactWork);
  // open[s] = number of listed sets still below their cap in state s.
  std::vector<int> open(sp.count, 0);
  for (std::uint64_t s = 0; s < sp.count; ++s)
    for (std::size_t i = 0; i < sp.caps.size(); ++i) open[s] += sp.digit(s, i) < sp.caps[i];

  if (exact) {
    res.mode = "exact";
    // Counts of draw sequences; the probability is count / N^t.
    std::vector<BigInt> cur(sp.count, 0), nxt(sp.count, 0);
    cur[0] = 1;
    for (std::uint64_t step = 0; step < t; ++step) {
      for (auto& x : nxt) x = 0;
      for (std::uint64_t s = 0; s < sp.count; ++s) {
        if (cur[s] == 0) continue;
        nxt[s] += cur[s] * (outcomes - open[s]);
        for (std::size_t i = 0; i < sp.caps.size(); ++i)
          if (sp.digit(s, i) < sp.caps[i]) nxt[s + sp.stride[i]] += cur[s];
      }
      std::swap(cur, nxt);
    }
    BigInt denom = 1;
    for (std::uint64_t step = 0; step < t; ++step) denom *= outcomes;
    res.exact = make_rational(cur[full], denom);
    res.value = to_double(*res.exact);
    return res;
  }

  res.mode = "floating";
  const long double n_out = static_cast<long double>(outcomes.convert_to<double>());
  const long double hit = 1.0L / n_out;
  std::vector<long double> cur(sp.count, 0), nxt(sp.count, 0);
  cur[0] = 1;
  for (std::uint64_t step = 0; step < t; ++step) {
    std::fill(nxt.begin(), nxt.end(), 0.0L);
    for (std::uint64_t s = 0; s < sp.count; ++s) {
      const long double m = cur[s];
      if (m == 0) continue;
      nxt[s] += m * (1.0L - open[s] * hit);
      for (std::size_t i = 0; i < sp.caps.size(); ++i)
        if (sp.digit(s, i) < sp.caps[i]) nxt[s + sp.stride[i]] += m * hit;
    }
    std::swap(cur, nxt);
  }
  long double total = 0;
  for (long double m : cur) total += m;
  res.mass_error = static_cast<double>(std::fabs(1.0L - total));
  res.value = static_cast<double>(cur[full]);
  return res;
}

// Multiplicities of the distinct edges of an r-uniform multigraph, in sorted edge order.
inline std::vector<int> requirement_multiplicities(const MultiHypergraph& required) {
  std::vector<int> out;
  for (const auto& [e, m] : required.sorted_edges()) out.push_back(m);
  return out;
}

inline HitProbability exact_hit_probability(const MultiHypergraph& required, Vertex n, std::uint64_t t,
                                            DpMode mode = DpMode::automatic) {
  return exact_hit_probability(requirement_multiplicities(required), n, required.uniformity(), t, mode);
}

// p^m / (m_1! ... m_q!) with p = t / C(n, r), m = sum of the m_i.
inline double asymptotic_hit_probability(const std::vector<int>& mult, Vertex n, int r, std::uint64_t t) {
  const double p = static_cast<double>(t) / to_double(Rational(binom(n, r)));
  double value = 1;
  for (int m : mult) value *= std::pow(p, m) / std::tgamma(m + 1.0);
  return value;
}

inline nlohmann::json hit_probability_to_json(const HitProbability& h) {
  nlohmann::json j = {{"value", h.value}, {"mode", h.mode}, {"states", h.states}, {"mass_error", h.mass_error}};
  if (h.exact) j["exact"] = rational_to_json(*h.exact);
  return j;
}

}  // namespace semirandom
