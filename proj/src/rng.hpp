// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGTAME_RNG_HPP
#define OGTAME_RNG_HPP

#include <cstdint>

namespace ogtame {

// splitmix64. Chosen for portability: the stream depends only on the
// 64-bit seed, never on platform word sizes or library versions, which
// keeps machine reports byte-identical across builds.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Derives an independent stream for (seed, stream, index) so that every
// generated case is addressable and replayable in isolation.
inline uint64_t mix_seed(uint64_t seed, uint64_t stream, uint64_t index) {
  SplitMix64 a(seed ^ (0x632be59bd9b4e019ULL * (stream + 1)));
  uint64_t s = a.next() ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  SplitMix64 b(s);
  return b.next();
}

// Small convenience layer over SplitMix64.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : sm_(seed) {}
  Sampler(uint64_t seed, uint64_t stream, uint64_t index)
      : sm_(mix_seed(seed, stream, index)) {}

  uint64_t next_u64() { return sm_.next(); }

  // Uniform in [0, n); n must be positive. Rejection-free modulo bias is
  // acceptable here because n is tiny relative to 2^64.
  uint64_t below(uint64_t n) { return sm_.next() % n; }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  SplitMix64 sm_;
};

}  // namespace ogtame

#endif  // OGTAME_RNG_HPP
