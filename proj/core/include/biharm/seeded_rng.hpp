#ifndef BIHARM_SEEDED_RNG_HPP
#define BIHARM_SEEDED_RNG_HPP

#include <cstdint>

#include "biharm/rational.hpp"

namespace biharm {

// Deterministic 64-bit generator (splitmix64).  Used instead of the
// standard distributions so that seeded runs are byte-identical across
// platforms and standard library versions.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

  // integer in [lo, hi] inclusive
  long next_int(long lo, long hi) {
    return lo + static_cast<long>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // small rational with numerator in [-max_num, max_num] and denominator in
  // [1, max_den]
  Rational next_rational(long max_num, long max_den) {
    return Rational(next_int(-max_num, max_num), next_int(1, max_den));
  }

  Rational next_nonzero_rational(long max_num, long max_den) {
    for (;;) {
      Rational r = next_rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace biharm

#endif
