#pragma once

#include <cstdint>

#include "specdens/multigraph.hpp"

namespace specdens {

/// xorshift64* generator. State evolves as s ^= s >> 12; s ^= s << 25;
/// s ^= s >> 27; output is state * 0x2545F4914F6CDD1D. The seed is offset
/// by 0x9E3779B97F4A7C15 so that seed 0 is usable; a zero state is mapped
/// to 1. Bounded draws reduce modulo n. This is the whole contract - any
/// implementation following it reproduces the verification suites bit for
/// bit.
class XorShift64Star {
 public:
  explicit XorShift64Star(std::uint64_t seed) : state_(seed + 0x9E3779B97F4A7C15ull) {
    if (state_ == 0) state_ = 1;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  /// Uniform-ish draw in [0, n); the modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Connected multigraph: 2..max_vertices vertices, a random attachment tree,
/// then up to max_edges total edges drawn uniformly over vertex pairs
/// (loops and parallel edges included). Edge directions are random.
MultiGraph random_connected_multigraph(XorShift64Star& rng, int max_vertices,
                                       int max_edges);

/// Random attachment tree with 1..max_edges edges.
MultiGraph random_tree(XorShift64Star& rng, int max_edges);

}  // namespace specdens
