#pragma once

#include <cmath>
#include <cstdint>

namespace percmap {

// Deterministic splitmix64 stream. The sequence for a given (seed, worker)
// pair is part of the tool's reproducibility contract, so no std::mt19937
// or std:: distributions anywhere: those are not stable across standard
// library implementations.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    // Substream for a parallel worker: decorrelate by running the worker
    // index through one mix round with a distinct odd constant.
    Rng(std::uint64_t seed, std::uint64_t worker)
        : state(seed ^ mix(worker * 0x9e3779b97f4a7c15ULL + 0xbf58476d1ce4e5b9ULL)) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection: unbiased for every n.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0,1) with 53 random bits.
    double next_double() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform over {0,1,2}; the three-letter step alphabet makes this the
    // hot call in samplers.
    int next_trit() { return static_cast<int>(next_below(3)); }
};

}  // namespace percmap
