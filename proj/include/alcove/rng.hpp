#pragma once

#include <cstdint>
#include <random>

#include "alcove/rational.hpp"

namespace alcove {

// Deterministic random stream for the randomized check suites.  The engine is
// std::mt19937_64, whose output sequence is pinned by the standard, and all
// reductions below are explicit arithmetic on that stream, so a fixed seed
// produces the same draws on every platform and standard library.  (The
// standard distribution objects are implementation-defined and would break
// byte-for-byte reproducibility of reports.)
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  // Uniform-enough value in [0, n); n = 0 returns 0.  Modulo reduction has a
  // bias of at most n / 2^64, which is irrelevant for test sampling and keeps
  // the mapping portable.
  uint64_t below(uint64_t n) { return n ? raw() % n : 0; }

  // Inclusive integer range.
  long range(long lo, long hi) {
    if (hi <= lo) return lo;
    return lo + (long)below((uint64_t)(hi - lo + 1));
  }

  bool coin() { return below(2) == 1; }

  // Random rational a/b with |a| <= num_mag and 1 <= b <= den_max.
  Rat rat(long num_mag, long den_max) {
    Rat r(range(-num_mag, num_mag), range(1, den_max));
    r.canonicalize();
    return r;
  }

  // Random integer vector with entries in [-mag, mag].
  IntVec int_vec(int n, long mag) {
    IntVec v(n);
    for (int i = 0; i < n; ++i) v[i] = Int(range(-mag, mag));
    return v;
  }

  RatVec rat_vec(int n, long num_mag, long den_max) {
    RatVec v(n);
    for (int i = 0; i < n; ++i) v[i] = rat(num_mag, den_max);
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace alcove
