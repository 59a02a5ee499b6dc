#pragma once

#include <cstdint>

namespace cfrechet {

// splitmix64: tiny, fast, and stable across platforms, so generated inputs
// and benchmark corpora are reproducible byte for byte from a seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Derive an independent stream, e.g. one per (size, trial) pair.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        return SplitMix64(a ^ (b + 0x9e3779b97f4a7c15ULL)).next();
    }

private:
    std::uint64_t state_;
};

}  // namespace cfrechet
