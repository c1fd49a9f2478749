#include "relcheck/sampling.hpp"

#include <numeric>
#include <utility>

namespace relcheck {

Rational randRational(SplitMix64& rng, long numBound, long denBound) {
  long den = rng.rangeInt(1, denBound);
  long num = rng.rangeInt(-numBound * den, numBound * den);
  return Rational(num, den);
}

Rational randNonzeroRational(SplitMix64& rng, long numBound, long denBound) {
  while (true) {
    Rational r = randRational(rng, numBound, denBound);
    if (!r.isZero()) return r;
  }
}

PythQuad randPythQuad(SplitMix64& rng, long bound) {
  while (true) {
    long a = rng.rangeInt(-bound, bound);
    long b = rng.rangeInt(-bound, bound);
    long c = rng.rangeInt(-bound, bound);
    long d = rng.rangeInt(-bound, bound);
    long h = a * a + b * b + c * c + d * d;
    if (h == 0) continue;
    // Lebesgue identity: the spatial vector below has Euclidean norm
    // exactly h, so (h, spatial) lies on the unit-speed cone.
    return PythQuad{Rational(a * a + b * b - c * c - d * d),
                    Rational(2 * (a * c + b * d)),
                    Rational(2 * (a * d - b * c)), Rational(h)};
  }
}

PythTriple randPythTriple(SplitMix64& rng) {
  while (true) {
    long m = rng.rangeInt(2, 12);
    long n = rng.rangeInt(1, m - 1);
    if (std::gcd(m, n) != 1 || (m - n) % 2 == 0) continue;
    long a = m * m - n * n;
    long b = 2 * m * n;
    long h = m * m + n * n;
    if (rng.coin()) std::swap(a, b);
    return PythTriple{a, b, h};
  }
}

}  // namespace relcheck
