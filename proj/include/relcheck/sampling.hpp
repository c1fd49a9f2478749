#pragma once

#include <cstdint>
#include <vector>

#include "relcheck/rational.hpp"

namespace relcheck {

/// SplitMix64: tiny deterministic PRNG with identical streams on every
/// platform; no library distribution objects are used anywhere, so sampled
/// values are bit-reproducible.
struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
  long rangeInt(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
  bool coin() { return (next() & 1) != 0; }
};

/// How audit instances are sampled. Identical configs give identical
/// instance streams; each axiom derives its own substream from (seed, axiom).
struct SamplingConfig {
  uint64_t seed = 42;
  int gridRadius = 1;
  int randomCount = 8;
  int denominatorBound = 6;
};

/// Nonzero-denominator rational with |num| <= numBound * den, den <= denBound.
Rational randRational(SplitMix64& rng, long numBound, long denBound);

/// Nonzero rational, same bounds.
Rational randNonzeroRational(SplitMix64& rng, long numBound, long denBound);

/// (a, b, c, h) with a^2 + b^2 + c^2 = h^2, h > 0, from the Lebesgue
/// identity; used to sample exactly-rational points on cones.
struct PythQuad {
  Rational a, b, c, h;
};
PythQuad randPythQuad(SplitMix64& rng, long bound);

/// Primitive Pythagorean triple (a, b, h), a^2 + b^2 = h^2, optionally
/// scaled; used to sample boosts with exactly-rational gamma = h/b.
struct PythTriple {
  long a, b, h;
};
PythTriple randPythTriple(SplitMix64& rng);

}  // namespace relcheck
