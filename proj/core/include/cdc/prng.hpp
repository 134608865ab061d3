// Minimal deterministic generator for sampled verification runs.
//
// A 64-bit multiplicative congruential generator with the Steele-Vigna
// multiplier; the seed is forced odd so the state never collapses.  Bounded
// draws use the 128-bit multiply-shift reduction, which is bias-free enough
// for sampling pair indices and keeps results identical across platforms.

#pragma once

#include <cstdint>

namespace cdc {

class Mcg64 {
public:
    explicit Mcg64(uint64_t seed) : state_(seed | 1) {}

    uint64_t next() {
        state_ *= 0xf1357aea2e62a9c5ULL;
        return state_;
    }

    // Uniform draw from [0, bound).  Pre: bound > 0.
    uint64_t below(uint64_t bound) {
        return (uint64_t)(((unsigned __int128)next() * bound) >> 64);
    }

private:
    uint64_t state_;
};

}  // namespace cdc
