#pragma once

#include <cstdint>

namespace gm {

// splitmix64: tiny deterministic generator for corpus construction.
// Seeded runs must reproduce bit-identically across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t n) { return next() % n; }

    int64_t int_in(int64_t lo, int64_t hi) {  // inclusive bounds
        return lo + int64_t(below(uint64_t(hi - lo + 1)));
    }

  private:
    uint64_t state_;
};

}  // namespace gm
