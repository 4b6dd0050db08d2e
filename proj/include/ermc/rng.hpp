#pragma once

#include <cstdint>

namespace ermc {

/// Deterministic splitmix64 generator. Used instead of <random> engines so that
/// seeded runs produce identical streams on every platform and standard library.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
    uint64_t next_below(uint64_t bound) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

  private:
    uint64_t state_;
};

} // namespace ermc
