#pragma once

#include <cstdint>
#include <random>

#include "minklab/rational.hpp"

namespace minklab {

// Deterministic randomness contract: all draws come from std::mt19937_64
// (whose output sequence is fixed by the standard) seeded through the
// splitmix64 finalizer below, and range reduction is plain modulo. Identical
// (seed, stream) therefore reproduces identical instances on any platform.
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sub-seed for an indexed stream (trial, sample batch, ...) of a master seed.
inline uint64_t derive_seed(uint64_t master, uint64_t stream) {
  return mix64(master ^ mix64(stream + 1));
}

class DetRng {
 public:
  explicit DetRng(uint64_t seed) : eng_(mix64(seed)) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform in [0, n); modulo bias is irrelevant for instance generation.
  uint64_t below(uint64_t n) { return next_u64() % n; }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Rational with denominator in {1..den_max} and value in [-span, span].
  Rational rational(long den_max, long span) {
    const long den = int_in(1, den_max);
    const long num = int_in(-span * den, span * den);
    return Rational(num, den);
  }

  // Nonnegative rational in [0, span].
  Rational nonneg_rational(long den_max, long span) {
    const long den = int_in(1, den_max);
    const long num = int_in(0, span * den);
    return Rational(num, den);
  }

  double unit_double() {  // [0,1), 53-bit, for Monte-Carlo boundaries only
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace minklab
