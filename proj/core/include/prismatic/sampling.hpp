#pragma once

#include <random>

#include "prismatic/rat.hpp"

namespace prismatic {

/// Deterministic rational sampling (fixed-seed mt19937_64): certificates and
/// property checks must be bit-identical across runs.
class RatSampler {
 public:
  explicit RatSampler(uint64_t seed) : rng_(seed) {}

  /// Uniform-ish rational with numerator in [-max_num, max_num] and
  /// denominator in [1, max_den].
  Rat rational(long max_num = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng_), den(rng_));
  }

  /// Strictly positive rational in (0, max_num].
  Rat positive(long max_num = 20, long max_den = 12) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rat(num(rng_), den(rng_));
  }

  /// Rational strictly inside (-1, 1), never zero unless allow_zero.
  Rat unit_interval_open(bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-99, 99);
    long n = num(rng_);
    while (!allow_zero && n == 0) n = num(rng_);
    return Rat(n, 100);
  }

  /// Rational strictly inside (0, 1).
  Rat unit_open_positive() {
    std::uniform_int_distribution<long> num(1, 99);
    return Rat(num(rng_), 100);
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace prismatic
