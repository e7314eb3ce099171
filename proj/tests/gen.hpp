#pragma once

#include <cstdint>

#include "qracah/scalar.hpp"

namespace testgen {

// splitmix64; every property test seeds its own stream.
struct Gen {
  std::uint64_t state;

  explicit Gen(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // uniform in [lo, hi]
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  qracah::Rational rational(long max_num = 20, long max_den = 20) {
    qracah::Rational r(range(-max_num, max_num), range(1, max_den));
    r.canonicalize();
    return r;
  }
  qracah::Rational nonzero(long max_num = 20, long max_den = 20) {
    qracah::Rational r;
    do r = rational(max_num, max_den);
    while (sgn(r) == 0);
    return r;
  }
  qracah::Rational positive(long max_num = 20, long max_den = 20) {
    qracah::Rational r(range(1, max_num), range(1, max_den));
    r.canonicalize();
    return r;
  }
};

}  // namespace testgen
