#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <string>

#include "semirandom/hypergraph.hpp"

namespace semirandom {

inline constexpr const char* kRngAlgorithm = "philox4x32-10";

// Counter-based generator of Salmon et al. (Random123), 10 rounds.
inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t m0 = 0xD2511F53u, m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u, w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
    std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
    auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += w0;
    key[1] += w1;
  }
  return ctr;
}

// One independent stream per (experiment seed, trial index, stream id). The key is the
// seed; the counter holds (block index low, block index high, trial low, trial high ^ stream << 16).
class RandomStream {
 public:
  using result_type = std::uint32_t;

  RandomStream(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream_id = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        trial_lo_(static_cast<std::uint32_t>(trial)),
        trial_hi_(static_cast<std::uint32_t>(trial >> 32) ^ (stream_id << 16)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == 4) {
      buffer_ = philox4x32_10({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32), trial_lo_,
                               trial_hi_},
                              key_);
      ++block_;
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  std::uint64_t next_u64() {
    std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  // Uniform integer in [0, bound), by rejection so the result does not depend on any
  // standard-library distribution implementation.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw ParameterError("uniform_below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
      std::uint64_t x = next_u64();
      if (x < limit) return x % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint32_t trial_lo_, trial_hi_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int pos_ = 4;
};

// Uniform r-subset of [n] by Floyd's algorithm, returned sorted.
inline VertexSet draw_uniform_r_subset(RandomStream& rng, Vertex n, int r) {
  if (r < 0 || static_cast<Vertex>(r) > n) throw ParameterError("cannot draw an r-subset with r > n");
  VertexSet chosen;
  chosen.reserve(r);
  for (Vertex j = n - static_cast<Vertex>(r) + 1; j <= n && r > 0; ++j) {
    Vertex t = static_cast<Vertex>(rng.uniform_below(j)) + 1;
    auto it = std::lower_bound(chosen.begin(), chosen.end(), t);
    if (it != chosen.end() && *it == t) {
      chosen.insert(std::lower_bound(chosen.begin(), chosen.end(), j), j);
    } else {
      chosen.insert(it, t);
    }
  }
  return chosen;
}

// Uniform k-subset of [n] minus `excluded` (sorted), by drawing ranks among the allowed vertices.
inline VertexSet draw_subset_avoiding(RandomStream& rng, Vertex n, int k, const VertexSet& excluded) {
  Vertex allowed = n - static_cast<Vertex>(excluded.size());
  VertexSet ranks = draw_uniform_r_subset(rng, allowed, k);
  VertexSet out;
  out.reserve(k);
  std::size_t ex = 0;
  Vertex skipped = 0;
  for (Vertex rank : ranks) {
    // Smallest v with v - |excluded ∩ [1, v]| == rank and v not excluded.
    Vertex v = rank + skipped;
    while (ex < excluded.size() && excluded[ex] <= v) {
      ++ex;
      ++skipped;
      v = rank + skipped;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace semirandom
